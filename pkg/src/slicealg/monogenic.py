"""Bridge from slice-regular power series to axially monogenic functions.

The quaternionic Laplacian maps x^{n+2} to -4 P_n, where

    P_n(x) = Sum_{k=1}^{n+1} k x^{k-1} xbar^{n-k+1}

is a degree-n axially monogenic polynomial (P_n restricted to the real
axis is binom(n+2, 2) x0^n).  Consequently Delta sends a slice-regular
entire series Sum x^n a_n to the monogenic series Sum P_n m_n with
m_n = -4 a_{n+2}, and the two directions of this correspondence are
implemented by :func:`fueter_laplacian` and :func:`inv_laplacian`.

On the monogenic side the operator L with L(P_n) = (n+2) P_{n-1}
intertwines the slice derivative: L_lambda o Delta = Delta o D_lambda,
so eigenvalue problems can be transported basis-to-basis
(:func:`apply_L`, :func:`delta_exp`).

Finite-difference utilities (:func:`fd_crf`, :func:`fd_laplacian`,
:func:`richardson_order`) allow pointwise verification that the
constructed functions really satisfy the Cauchy-Riemann-Fueter equation
and the intertwining identities.
"""

from __future__ import annotations

import math

from .errors import DomainError, ParseError
from .fmtio import dump_json, load_json
from .quaternion import Quaternion, ZERO, ONE, I, J, K, as_quaternion, decompose
from .series import PowerSeries, slice_derivative
from .sliceexpr import slice_derivative_pointwise

__all__ = [
    "MonogenicSeries",
    "eval_P",
    "eval_Z",
    "fueter_laplacian",
    "inv_laplacian",
    "apply_L",
    "delta_exp",
    "laplacian_pointwise",
    "laplacian_via_partials",
    "save_monogenic",
    "load_monogenic",
    "fd_partial",
    "fd_crf",
    "fd_laplacian",
    "richardson_order",
]

_UNITS = (ONE, I, J, K)


def _powers(x: Quaternion, top: int):
    """[x^0, ..., x^top]."""
    out = [ONE]
    for _ in range(top):
        out.append(out[-1] * x)
    return out


def eval_P(n: int, x) -> Quaternion:
    """P_n(x) = Sum_{k=1}^{n+1} k x^{k-1} xbar^{n-k+1}.

    P_0 = 1; on the real axis P_n(x0) = binom(n+2, 2) x0^n.
    """
    if n < 0:
        raise ValueError("P_n is defined for n >= 0")
    x = as_quaternion(x)
    xc = x.conjugate()
    xp = _powers(x, n)
    xcp = _powers(xc, n)
    acc = ZERO
    for k in range(1, n + 2):
        acc = acc + float(k) * (xp[k - 1] * xcp[n - k + 1])
    return acc


def eval_Z(n: int, x) -> Quaternion:
    """Zonal harmonic Z_n(x) = Sum_{k=0}^{n} x^k xbar^{n-k}.

    Equals the spherical derivative of x^{n+1}; restricted to the real
    axis it is (n+1) x0^n.
    """
    if n < 0:
        raise ValueError("Z_n is defined for n >= 0")
    x = as_quaternion(x)
    xc = x.conjugate()
    xp = _powers(x, n)
    xcp = _powers(xc, n)
    acc = ZERO
    for k in range(n + 1):
        acc = acc + xp[k] * xcp[n - k]
    return acc


class MonogenicSeries:
    """A finite expansion g(x) = Sum_n P_n(x) m_n in the P-basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(as_quaternion(c) for c in coeffs)
        if not cs:
            cs = (ZERO,)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("MonogenicSeries is immutable")

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Quaternion:
        return self.coeffs[n] if n <= self.degree_bound else ZERO

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, MonogenicSeries):
            return NotImplemented
        top = max(self.degree_bound, other.degree_bound)
        return all(self.coeff(n) == other.coeff(n) for n in range(top + 1))

    def __add__(self, other):
        if not isinstance(other, MonogenicSeries):
            return NotImplemented
        top = max(self.degree_bound, other.degree_bound)
        return MonogenicSeries([self.coeff(n) + other.coeff(n)
                                for n in range(top + 1)])

    def __sub__(self, other):
        if not isinstance(other, MonogenicSeries):
            return NotImplemented
        top = max(self.degree_bound, other.degree_bound)
        return MonogenicSeries([self.coeff(n) - other.coeff(n)
                                for n in range(top + 1)])

    def __neg__(self):
        return MonogenicSeries([-c for c in self.coeffs])

    def __call__(self, x) -> Quaternion:
        """Evaluate Sum_n P_n(x) m_n, sharing one power table."""
        x = as_quaternion(x)
        top = self.degree_bound
        xc = x.conjugate()
        xp = _powers(x, top)
        xcp = _powers(xc, top)
        acc = ZERO
        for n, m in enumerate(self.coeffs):
            if m.is_zero():
                continue
            p = ZERO
            for k in range(1, n + 2):
                p = p + float(k) * (xp[k - 1] * xcp[n - k + 1])
            acc = acc + p * m
        return acc

    def __repr__(self):
        return f"MonogenicSeries({[str(c) for c in self.coeffs]!r})"


def fueter_laplacian(f: PowerSeries) -> MonogenicSeries:
    """Delta f for a power series: Sum x^n a_n -> Sum P_n (-4 a_{n+2}).

    Affine functions are annihilated; the result is axially monogenic.
    """
    top = f.degree_bound
    if top < 2:
        return MonogenicSeries([ZERO])
    return MonogenicSeries([-4.0 * f.coeffs[n + 2] for n in range(top - 1)])


def inv_laplacian(g: MonogenicSeries) -> PowerSeries:
    """The slice-regular primitive: Sum P_n m_n -> Sum x^{n+2} (-m_n/4).

    A right inverse of :func:`fueter_laplacian`; the composition the
    other way recovers f minus its affine part.
    """
    coeffs = [ZERO, ZERO] + [-0.25 * m for m in g.coeffs]
    return PowerSeries(coeffs, exact=True)


def apply_L(lam, g: MonogenicSeries) -> MonogenicSeries:
    """L_lambda g = L g - g lambda, where L(P_n) = (n+2) P_{n-1}.

    In coefficients b_k = (k+3) m_{k+1} - m_k lambda.  Intertwining:
    apply_L(lam, fueter_laplacian(f)) = fueter_laplacian(apply_D(lam, f)).
    """
    lam = as_quaternion(lam)
    top = g.degree_bound
    out = [float(k + 3) * g.coeff(k + 1) - g.coeffs[k] * lam
           for k in range(top + 1)]
    return MonogenicSeries(out)


def delta_exp(lambdas, n_trunc: int = 40) -> MonogenicSeries:
    """Delta-exponential: the Laplacian image of gen_exp(lambdas).

    Solves L_{lambda_1} ... L_{lambda_m} g = 0 in the P-basis.
    """
    from .eigensolve import gen_exp
    return fueter_laplacian(gen_exp(lambdas, n_trunc))


def laplacian_pointwise(f, x, h: float = 1e-5) -> Quaternion:
    """Delta f at x from the slice decomposition (x not real).

    Uses Delta f = -2 (Im x / |Im x|^2) (f'_s - df/dx) with
    f'_s = F_2 / beta.  Accepts a PowerSeries (exact df/dx) or a
    SliceExpr (df/dx by central difference with step h).
    """
    x = as_quaternion(x)
    sp = decompose(x)
    if sp.real:
        raise DomainError("the pointwise Laplacian formula needs Im x != 0")
    if isinstance(f, PowerSeries):
        _, f2 = f.stem(sp.alpha, sp.beta)
        dfdx = slice_derivative(f)(x)
    else:
        _, f2 = f.stems(sp.alpha, sp.beta, sp.j)
        dfdx = slice_derivative_pointwise(f, x, h=h)
    sph = f2 / sp.beta
    return (-2.0 / sp.beta) * (sp.j * (sph - dfdx))


def _partial_poly(f: PowerSeries, x: Quaternion, unit: Quaternion) -> Quaternion:
    # d/dt f(x + t*unit) at t=0, from d(x^n) = Sum_t x^t unit x^{n-1-t}
    top = f.degree_bound
    xp = _powers(x, top)
    acc = ZERO
    for n in range(1, top + 1):
        a = f.coeffs[n]
        if a.is_zero():
            continue
        d = ZERO
        for t in range(n):
            d = d + xp[t] * unit * xp[n - 1 - t]
        acc = acc + d * a
    return acc


def laplacian_via_partials(f: PowerSeries, x) -> Quaternion:
    """Delta f at x via exact first-order partials of the monomials.

    Delta f = (Im x / |Im x|^2) (3 d0 f + i d1 f + j d2 f + k d3 f),
    with each partial computed symbolically from d(x^n)/d x_i =
    Sum_t x^t e_i x^{n-1-t}.  Independent of :func:`laplacian_pointwise`,
    hence usable as a cross-check.  Requires Im x != 0.
    """
    x = as_quaternion(x)
    im = x.imag()
    b2 = im.norm2()
    if b2 == 0.0:
        raise DomainError("the partials formula for Delta needs Im x != 0")
    parts = [_partial_poly(f, x, u) for u in _UNITS]
    combo = 3.0 * parts[0] + I * parts[1] + J * parts[2] + K * parts[3]
    return (im / b2) * combo


def save_monogenic(path, g: MonogenicSeries) -> None:
    """Write {"basis": "P", "coeffs": [[w, x1, x2, x3], ...]}."""
    dump_json({"basis": "P", "coeffs": [c.as_list() for c in g.coeffs]}, path)


def load_monogenic(path) -> MonogenicSeries:
    data = load_json(path)
    if not isinstance(data, dict) or data.get("basis") != "P":
        raise ParseError(f"{path}: expected a P-basis monogenic series")
    raw = data.get("coeffs")
    if not isinstance(raw, list):
        raise ParseError(f"{path}: missing coefficient list")
    coeffs = []
    for n, item in enumerate(raw):
        if (not isinstance(item, list) or len(item) != 4
                or not all(isinstance(v, (int, float)) for v in item)):
            raise ParseError(f"{path}: coefficient {n} is not a quadruple")
        coeffs.append(Quaternion(*item))
    return MonogenicSeries(coeffs)


# --- finite-difference verification helpers ---------------------------------

def fd_partial(f_eval, x, axis: int, h: float = 1e-4) -> Quaternion:
    """Central difference for d f / d x_axis (axis 0..3)."""
    x = as_quaternion(x)
    step = [0.0, 0.0, 0.0, 0.0]
    step[axis] = h
    e = Quaternion(*step)
    return (f_eval(x + e) - f_eval(x - e)) / (2.0 * h)


def fd_crf(f_eval, x, h: float = 1e-4):
    """Both Cauchy-Riemann-Fueter operators by central differences.

    Returns (d_cf, dbar_cf) with
        d_cf    = (d0 f + i d1 f + j d2 f + k d3 f) / 2
        dbar_cf = (d0 f - i d1 f - j d2 f - k d3 f) / 2.
    Axially monogenic functions satisfy d_cf f = 0; slice-regular
    functions satisfy d_cf f = -f'_s off the real axis.
    """
    parts = [fd_partial(f_eval, x, a, h) for a in range(4)]
    half = 0.5
    d_cf = half * (parts[0] + I * parts[1] + J * parts[2] + K * parts[3])
    dbar_cf = half * (parts[0] - I * parts[1] - J * parts[2] - K * parts[3])
    return d_cf, dbar_cf


def fd_laplacian(f_eval, x, h: float = 1e-4) -> Quaternion:
    """Four-dimensional Laplacian by the 9-point central stencil."""
    x = as_quaternion(x)
    fx = f_eval(x)
    acc = ZERO
    for axis in range(4):
        step = [0.0, 0.0, 0.0, 0.0]
        step[axis] = h
        e = Quaternion(*step)
        acc = acc + (f_eval(x + e) - 2.0 * fx + f_eval(x - e))
    return acc / (h * h)


def richardson_order(residual_fn, h: float, floor: float = 1e-12):
    """Convergence order estimate from residuals at h and h/2.

    Returns (r_h, r_half, order) with order = log2(r_h / r_half); if both
    residuals sit below ``floor`` the scheme is considered converged to
    roundoff and order is reported as inf.
    """
    r1 = float(residual_fn(h))
    r2 = float(residual_fn(h / 2.0))
    if r1 <= floor and r2 <= floor:
        return r1, r2, math.inf
    if r2 == 0.0:
        return r1, r2, math.inf
    return r1, r2, math.log2(r1 / r2)
