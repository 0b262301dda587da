"""Closed-form solvers for the slice-derivative eigenvalue operator.

The operator under study is D_lambda f = df/dx - f*lambda acting on
slice-regular entire functions (coefficient form: b_n = (n+1) a_{n+1}
- a_n lambda).  This module provides

* ``apply_D`` -- the operator itself;
* ``S_lambda`` -- a right inverse on polynomials (lambda != 0);
* ``E_lambda_op`` -- a right inverse on the coefficient-growth class
  A_lambda, certified by :class:`CoeffBoundCert`;
* ``gen_exp`` -- generalized exponentials E_Lambda spanning the kernel of
  the order-m product D_{lambda_1} ... D_{lambda_m};
* ``f_mu_lambda`` -- the particular solution of D_lambda f = exp_mu for
  0 < |mu| < |lambda|;
* ``kernel_basis`` / ``solve_with_initial`` -- order-m kernel bases and
  the unique entire solution matching m initial values at 0.

Everything works on exact coefficients; no quadrature or iteration is
involved beyond geometrically convergent coefficient sums.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificateViolation, RangeError, ZeroEigenvalue
from .quaternion import Quaternion, ZERO, ONE, as_quaternion, commutes
from .series import PowerSeries, slice_derivative

__all__ = [
    "EigenTuple",
    "CoeffBoundCert",
    "apply_D",
    "S_lambda",
    "E_lambda_op",
    "gen_exp",
    "f_mu_lambda",
    "kernel_basis",
    "solve_with_initial",
]


class EigenTuple:
    """An ordered tuple of eigenvalues (lambda_1, ..., lambda_m), m >= 1."""

    __slots__ = ("lambdas",)

    def __init__(self, lambdas):
        if isinstance(lambdas, EigenTuple):
            lams = lambdas.lambdas
        else:
            lams = tuple(as_quaternion(l) for l in lambdas)
        if not lams:
            raise ValueError("EigenTuple needs at least one eigenvalue")
        object.__setattr__(self, "lambdas", lams)

    def __setattr__(self, name, value):
        raise AttributeError("EigenTuple is immutable")

    @property
    def m(self) -> int:
        return len(self.lambdas)

    @property
    def commuting(self) -> bool:
        """True iff all eigenvalues pairwise commute (lie in one slice)."""
        lams = self.lambdas
        return all(commutes(lams[a], lams[b])
                   for a in range(len(lams)) for b in range(a + 1, len(lams)))

    def suffix(self, i: int) -> "EigenTuple":
        """The tail (lambda_{i+1}, ..., lambda_m), 0-based i < m."""
        return EigenTuple(self.lambdas[i:])

    def __iter__(self):
        return iter(self.lambdas)

    def __len__(self):
        return len(self.lambdas)

    def __getitem__(self, idx):
        return self.lambdas[idx]

    def __repr__(self):
        return f"EigenTuple({[str(l) for l in self.lambdas]!r})"


@dataclass(frozen=True)
class CoeffBoundCert:
    """Certificate n! |a_n| <= c (n+1)^d |lam|^n for membership in A_lam."""

    c: float
    d: int
    lam: Quaternion

    def verify(self, f: PowerSeries, slack: float = 1e-9) -> None:
        """Check the bound on every stored coefficient of f.

        Raises :class:`CertificateViolation` at the first failing index.
        Only the available (truncated) coefficients can be checked.
        """
        lam_norm = abs(self.lam)
        fact = 1.0
        lam_pow = 1.0
        for n, a in enumerate(f.coeffs):
            allowed = self.c * (n + 1) ** self.d * lam_pow
            if fact * a.norm() > allowed * (1.0 + slack):
                raise CertificateViolation(
                    f"coefficient {n}: n!|a_n| = {fact * a.norm():.6e} exceeds "
                    f"C(n+1)^d|lam|^n = {allowed:.6e}")
            fact *= n + 1
            lam_pow *= lam_norm

    @classmethod
    def fit(cls, f: PowerSeries, d: int, lam) -> "CoeffBoundCert":
        """Smallest C certifying f's stored coefficients for degree d."""
        lam = as_quaternion(lam)
        lam_norm = abs(lam)
        if lam_norm == 0.0:
            raise ZeroEigenvalue("A_lambda is defined for lambda != 0")
        c = 0.0
        fact = 1.0
        lam_pow = 1.0
        for n, a in enumerate(f.coeffs):
            c = max(c, fact * a.norm() / ((n + 1) ** d * lam_pow))
            fact *= n + 1
            lam_pow *= lam_norm
        return cls(c, d, lam)


def apply_D(lam, f: PowerSeries) -> PowerSeries:
    """D_lambda f = df/dx - f*lambda; coefficients (n+1)a_{n+1} - a_n*lambda."""
    lam = as_quaternion(lam)
    if lam.is_zero():
        return slice_derivative(f)
    if f.exact:
        top = f.degree_bound
        coeffs = [f.coeff(n + 1) * float(n + 1) - f.coeffs[n] * lam
                  for n in range(top + 1)]
        return PowerSeries(coeffs, exact=True)
    if f.degree_bound == 0:
        raise ValueError("cannot apply D to a degree-0 truncated series "
                         "(no derivative coefficient is determined)")
    coeffs = [f.coeffs[n + 1] * float(n + 1) - f.coeffs[n] * lam
              for n in range(f.degree_bound)]
    return PowerSeries(coeffs, exact=False)


def S_lambda(lam, p: PowerSeries) -> PowerSeries:
    """Right inverse of D_lambda on polynomials (lambda != 0).

    b_k = -Sum_{n=k}^{d} a_n lambda^{k-n-1} n!/k!, so that
    apply_D(lam, S_lambda(lam, p)) = p exactly.
    """
    lam = as_quaternion(lam)
    if lam.is_zero():
        raise ZeroEigenvalue("S_lambda requires lambda != 0")
    if not p.exact:
        raise ValueError("S_lambda is defined for polynomials; integrate "
                         "truncated series with E_lambda_op instead")
    lam_inv = lam.inverse()
    d = p.degree_bound
    out = []
    for k in range(d + 1):
        acc = ZERO
        pw = lam_inv          # lambda^{k-n-1} at n = k
        fact = 1.0            # n!/k! at n = k
        for n in range(k, d + 1):
            acc = acc + (p.coeffs[n] * pw) * fact
            pw = pw * lam_inv
            fact *= n + 1
        out.append(-acc)
    return PowerSeries(out, exact=True)


def E_lambda_op(lam, h: PowerSeries, n_trunc: int = 40,
                cert: CoeffBoundCert | None = None) -> PowerSeries:
    """The right inverse E_lambda of D_lambda, vanishing at 0.

    Coefficients c_n = (1/n!) Sum_{k<n} k! a_k lambda^{n-k-1}, computed by
    the stable recurrence c_{n+1} = (c_n lambda + a_n)/(n+1), c_0 = 0.

    For lambda != 0 a truncated (non-polynomial) input must carry a
    :class:`CoeffBoundCert`, which is checked on the available
    coefficients; polynomials always lie in A_lambda and need none.
    E_0(h) = Sum_{n>=1} x^n a_{n-1}/n needs no certificate either.
    """
    lam = as_quaternion(lam)
    if not lam.is_zero():
        if cert is not None:
            if abs(abs(cert.lam) - abs(lam)) > 1e-12 * (abs(lam) + 1.0):
                raise CertificateViolation(
                    "certificate was issued for a different |lambda|")
            cert.verify(h)
        elif not h.exact:
            raise CertificateViolation(
                "truncated input to E_lambda_op requires a CoeffBoundCert "
                "(membership in A_lambda is undecidable from a finite tail)")
    # furthest coefficient determined by the data
    if h.exact:
        bound = n_trunc
    else:
        bound = min(n_trunc, h.degree_bound + 1)
    coeffs = [ZERO]
    for n in range(bound):
        a_n = h.coeff(n) if (h.exact or n <= h.degree_bound) else ZERO
        coeffs.append((coeffs[n] * lam + a_n) / float(n + 1))
    exact = lam.is_zero() and h.exact and bound >= h.degree_bound + 1
    return PowerSeries(coeffs, exact=exact)


def gen_exp(lambdas, n_trunc: int = 40) -> PowerSeries:
    """Generalized exponential E_Lambda for Lambda = (lambda_1..lambda_m).

    Coefficients e_n = (1/n!) Sum_{|K| = n-m+1} lambda_1^{k_1} ...
    lambda_m^{k_m}; computed by extending the tuple one eigenvalue at a
    time with the recurrence e_{n+1} = (e_n(Lambda) lambda_m +
    e_n(Lambda'))/(n+1), where Lambda' drops the last eigenvalue.  For a
    single eigenvalue this is exp_lambda; E_Lambda(0) = 1 iff m = 1.
    """
    lams = EigenTuple(lambdas)
    if n_trunc < lams.m - 1:
        raise ValueError(f"n_trunc = {n_trunc} cannot hold E_Lambda with "
                         f"m = {lams.m} (first nonzero coefficient is x^{lams.m - 1})")
    prev = [ONE]
    for n in range(n_trunc):
        prev.append(prev[-1] * lams[0] / float(n + 1))
    for ell in range(1, lams.m):
        lam = lams[ell]
        cur = [ZERO]
        for n in range(n_trunc):
            cur.append((cur[n] * lam + prev[n]) / float(n + 1))
        prev = cur
    return PowerSeries(prev, exact=False)


def f_mu_lambda(mu, lam, n_trunc: int = 40, tail_tol: float = 1e-30) -> PowerSeries:
    """The particular solution f^{mu,lambda} of D_lambda f = exp_mu.

    Requires 0 < |mu| < |lambda| (strict).  Coefficient of x^k is
    -(1/k!) Sum_{n>=k} mu^n lambda^{k-n-1}; each sum converges like a
    geometric series with ratio |mu|/|lambda| and is accumulated until the
    term drops below ``tail_tol`` relative to the partial sum.  When mu and
    lambda commute the result equals exp_mu(x) (mu - lambda)^{-1}.
    """
    mu = as_quaternion(mu)
    lam = as_quaternion(lam)
    if mu.is_zero() or mu.norm() >= lam.norm():
        raise RangeError(
            f"f_mu_lambda requires 0 < |mu| < |lambda|, got |mu| = {mu.norm()!r}, "
            f"|lambda| = {lam.norm()!r}")
    lam_inv = lam.inverse()
    # mu^k accumulates across k; within each k the term recurrence is
    # t -> mu * t * lam_inv  (mu on the left, lambda^{-1} on the right)
    mu_pow = ONE
    out = []
    fact = 1.0
    for k in range(n_trunc + 1):
        term = mu_pow * lam_inv
        acc = ZERO
        for _ in range(10000):
            acc = acc + term
            term = mu * term * lam_inv
            if term.norm() <= tail_tol * max(1.0, acc.norm()):
                break
        out.append(-acc / fact)
        mu_pow = mu_pow * mu
        fact *= k + 1
    return PowerSeries(out, exact=False)


def kernel_basis(lambdas, n_trunc: int = 40):
    """Basis [E_{(lambda_1..lambda_m)}, E_{(lambda_2..lambda_m)}, ..., E_{(lambda_m)}].

    Every right-H-linear combination (with slice-constant coefficients)
    is annihilated by D_{lambda_1} ... D_{lambda_m}.
    """
    lams = EigenTuple(lambdas)
    return [gen_exp(lams.suffix(i), n_trunc) for i in range(lams.m)]


def solve_with_initial(lambdas, initial, n_trunc: int = 40) -> PowerSeries:
    """Unique entire solution with prescribed values at 0.

    f = Sum_i c_i . E_{(lambda_i..lambda_m)} satisfies
    D_{lambda_{i+1}} ... D_{lambda_m} f(0) = c_i for i < m and f(0) = c_m,
    where ``initial`` supplies (c_1, ..., c_m).
    """
    lams = EigenTuple(lambdas)
    cs = [as_quaternion(c) for c in initial]
    if len(cs) != lams.m:
        raise ValueError(f"expected {lams.m} initial values, got {len(cs)}")
    basis = kernel_basis(lams, n_trunc)
    total = PowerSeries([ZERO] * (n_trunc + 1), exact=False)
    for c, e in zip(cs, basis):
        total = total + c * e
    return total
