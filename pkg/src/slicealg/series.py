"""Truncated power series Sum_n x^n a_n with right quaternion coefficients.

These series represent slice-regular entire functions: the powers of the
variable stand on the left, the coefficients on the right, and the slice
product is plain coefficient convolution.  A :class:`PowerSeries` is either

* ``exact`` -- a polynomial: every coefficient beyond the stored ones is
  known to be zero, so products may grow the degree; or
* a truncation of an infinite series: coefficients beyond ``degree_bound``
  are unknown, so operations truncate results at the smallest bound that
  is still fully determined by the stored data.

The distinction only affects bookkeeping of result lengths; the stored
coefficients are always the mathematically exact ones (up to rounding).
"""

from __future__ import annotations

import math

from .quaternion import Quaternion, ZERO, ONE, as_quaternion, decompose

__all__ = [
    "PowerSeries",
    "slice_product",
    "slice_conjugate",
    "normal",
    "slice_derivative",
    "spherical_derivative_eval",
    "exp_series",
    "exp_tail_bound",
    "exp_truncation",
    "save_coeffs",
    "load_coeffs",
]


class PowerSeries:
    """Coefficients a_0 ... a_N of f(x) = Sum x^n a_n.

    >>> f = PowerSeries([1, Quaternion(0, 1)])    # 1 + x*i
    >>> f(Quaternion(0, 0, 1))                    # 1 + ji = 1 - k
    Quaternion(1.0, 0.0, 0.0, -1.0)
    """

    __slots__ = ("coeffs", "exact")

    def __init__(self, coeffs, exact=True):
        coeffs = tuple(as_quaternion(c) for c in coeffs)
        if not coeffs:
            coeffs = (ZERO,)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "exact", bool(exact))

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def truncated(cls, coeffs) -> "PowerSeries":
        """A truncation of an infinite series (tail unknown)."""
        return cls(coeffs, exact=False)

    @classmethod
    def zero(cls) -> "PowerSeries":
        return cls((ZERO,))

    @classmethod
    def one(cls) -> "PowerSeries":
        return cls((ONE,))

    @classmethod
    def monomial(cls, n: int, c=ONE) -> "PowerSeries":
        """x^n * c as an exact polynomial."""
        return cls((ZERO,) * n + (as_quaternion(c),))

    # -- inspection -----------------------------------------------------------

    @property
    def degree_bound(self) -> int:
        """Index of the last stored coefficient."""
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Largest index with nonzero coefficient (0 for the zero series)."""
        for n in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[n].is_zero():
                return n
        return 0

    def coeff(self, n: int) -> Quaternion:
        if n < 0:
            raise IndexError("negative coefficient index")
        if n < len(self.coeffs):
            return self.coeffs[n]
        if self.exact:
            return ZERO
        raise IndexError(
            f"coefficient {n} beyond truncation bound {self.degree_bound}")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def truncate(self, bound: int) -> "PowerSeries":
        """Keep coefficients up to index ``bound`` (padding exact input)."""
        if bound >= self.degree_bound:
            if self.exact:
                pad = (ZERO,) * (bound - self.degree_bound)
                return PowerSeries(self.coeffs + pad, exact=self.exact)
            return self
        return PowerSeries(self.coeffs[: bound + 1], exact=self.exact)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.exact == other.exact and self.coeffs == other.coeffs

    def __repr__(self):
        kind = "exact" if self.exact else "truncated"
        return f"PowerSeries({list(map(str, self.coeffs))!r}, {kind})"

    # -- evaluation -----------------------------------------------------------

    def __call__(self, x) -> Quaternion:
        """Horner evaluation with left powers, right coefficients."""
        x = as_quaternion(x)
        acc = self.coeffs[-1]
        for n in range(len(self.coeffs) - 2, -1, -1):
            acc = x * acc + self.coeffs[n]
        return acc

    def stem(self, alpha: float, beta: float):
        """Stem components (F1, F2) at z = alpha + i*beta.

        F1 = Sum Re(z^n) a_n and F2 = Sum Im(z^n) a_n, so that the slice
        function value at alpha + J*beta is F1 + J*F2 for every unit J.
        """
        z = complex(alpha, beta)
        zp = complex(1.0, 0.0)
        f1 = ZERO
        f2 = ZERO
        for a in self.coeffs:
            f1 = f1 + a * zp.real
            f2 = f2 + a * zp.imag
            zp *= z
        return f1, f2

    # -- linear structure -----------------------------------------------------

    def _bounds_with(self, other: "PowerSeries"):
        if self.exact and other.exact:
            return True, max(self.degree_bound, other.degree_bound)
        bounds = []
        if not self.exact:
            bounds.append(self.degree_bound)
        if not other.exact:
            bounds.append(other.degree_bound)
        return False, min(bounds)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        exact, bound = self._bounds_with(other)
        coeffs = [self.coeff(n) + other.coeff(n) for n in range(bound + 1)]
        return PowerSeries(coeffs, exact=exact)

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        exact, bound = self._bounds_with(other)
        coeffs = [self.coeff(n) - other.coeff(n) for n in range(bound + 1)]
        return PowerSeries(coeffs, exact=exact)

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], exact=self.exact)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return slice_product(self, other)
        try:
            c = as_quaternion(other)
        except TypeError:
            return NotImplemented
        return PowerSeries([a * c for a in self.coeffs], exact=self.exact)

    def __rmul__(self, other):
        # constant * series multiplies every coefficient on the left
        try:
            c = as_quaternion(other)
        except TypeError:
            return NotImplemented
        return PowerSeries([c * a for a in self.coeffs], exact=self.exact)


def slice_product(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Slice (stem) product; coefficient convolution c_n = Sum a_k b_{n-k}.

    For two polynomials the full convolution is returned; if either input
    is a truncation the result is truncated at the smallest bound whose
    coefficients are fully determined.
    """
    if f.exact and g.exact:
        bound = f.degree_bound + g.degree_bound
        exact = True
    else:
        exact, bound = f._bounds_with(g)
    fa = [f.coeff(n) if n <= f.degree_bound else ZERO for n in range(bound + 1)]
    ga = [g.coeff(n) if n <= g.degree_bound else ZERO for n in range(bound + 1)]
    out = []
    for n in range(bound + 1):
        acc = ZERO
        for k in range(n + 1):
            acc = acc + fa[k] * ga[n - k]
        out.append(acc)
    return PowerSeries(out, exact=exact)


def slice_conjugate(f: PowerSeries) -> PowerSeries:
    """f^c, the series with conjugated coefficients."""
    return PowerSeries([c.conjugate() for c in f.coeffs], exact=f.exact)


def normal(f: PowerSeries) -> PowerSeries:
    """N(f) = f . f^c = f^c . f (real coefficients on the real axis)."""
    return slice_product(f, slice_conjugate(f))


def slice_derivative(f: PowerSeries) -> PowerSeries:
    """df/dx: coefficients n*a_n shifted down one index."""
    if len(f.coeffs) == 1:
        return PowerSeries((ZERO,), exact=f.exact)
    coeffs = [f.coeffs[n] * float(n) for n in range(1, len(f.coeffs))]
    return PowerSeries(coeffs, exact=f.exact)


def spherical_derivative_eval(f: PowerSeries, x) -> Quaternion:
    """f'_s(x) = 1/2 Im(x)^{-1} (f(x) - f(conj x)).

    On the real axis the spherical derivative extends continuously as the
    slice derivative; that extension is returned there instead of an error.
    """
    x = as_quaternion(x)
    sp = decompose(x)
    if sp.real:
        return slice_derivative(f)(x)
    im = x.imag()
    return 0.5 * (im.inverse() * (f(x) - f(x.conjugate())))


def exp_series(lam, n_trunc: int = 40) -> PowerSeries:
    """exp_lambda(x) = Sum x^n lambda^n / n!, truncated at degree n_trunc.

    Note exp_lambda is the slice-regular exponential; it differs from the
    pointwise e^{x*lambda} unless x and lambda commute.
    """
    lam = as_quaternion(lam)
    coeffs = [ONE]
    for n in range(n_trunc):
        coeffs.append(coeffs[-1] * lam / float(n + 1))
    return PowerSeries(coeffs, exact=False)


def exp_tail_bound(radius: float, lam_norm: float, n_trunc: int) -> float:
    """Bound on |exp tail| past degree N: |x*lam|^{N+1} e^{|x*lam|} / (N+1)!."""
    t = radius * lam_norm
    return t ** (n_trunc + 1) / math.factorial(n_trunc + 1) * math.exp(t)


def exp_truncation(radius: float, lam_norm: float, tol: float = 1e-25,
                   max_degree: int = 400) -> int:
    """Smallest truncation degree with exp_tail_bound below ``tol``."""
    t = radius * lam_norm
    term = t * math.exp(t)  # bound for N = 0
    n = 0
    while term > tol and n < max_degree:
        n += 1
        term *= t / (n + 1)
    return n


# -- coefficient files ---------------------------------------------------------

def save_coeffs(f: PowerSeries, path) -> None:
    """Write the coefficients as a JSON array of [w, x1, x2, x3] quadruples."""
    from .fmtio import dump_json
    dump_json([c.as_list() for c in f.coeffs], path)


def load_coeffs(path) -> PowerSeries:
    """Read a coefficient file written by :func:`save_coeffs`.

    Files carry no exactness marker; the result is conservatively treated
    as a truncated series.
    """
    from .fmtio import load_json
    from .errors import ParseError
    data = load_json(path)
    if not isinstance(data, list):
        raise ParseError(f"{path}: expected a JSON array of quadruples")
    coeffs = []
    for n, quad in enumerate(data):
        if not isinstance(quad, list) or len(quad) != 4:
            raise ParseError(f"{path}: entry {n} is not a [w, x1, x2, x3] quadruple")
        coeffs.append(Quaternion.from_seq(quad))
    return PowerSeries(coeffs, exact=False)
