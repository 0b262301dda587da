"""Seeded self-check suites, used by the ``verify`` CLI subcommand.

Each suite is a function taking a :class:`random.Random` and returning a
one-line summary on success; failures raise ``AssertionError`` with a
diagnostic.  The suites re-derive the library's core identities at
runtime on randomized inputs, so a passing run certifies the build on
the host's floating-point stack.
"""

from __future__ import annotations

import itertools
import math
import random

from .quaternion import Quaternion, ZERO, ONE, I, J, commutes, decompose, \
    format_quaternion, parse_quaternion
from .series import PowerSeries, exp_series, normal, slice_conjugate, \
    slice_derivative, spherical_derivative_eval
from .sliceexpr import SliceConstant, lift, mu, product_expr, recover_constants, \
    slice_constant_from_two_values, verify_stem_symmetry
from .eigensolve import CoeffBoundCert, E_lambda_op, S_lambda, \
    apply_D, f_mu_lambda, gen_exp, kernel_basis, solve_with_initial
from .monogenic import MonogenicSeries, apply_L, delta_exp, eval_P, eval_Z, \
    fd_crf, fueter_laplacian, inv_laplacian, \
    laplacian_pointwise, laplacian_via_partials, richardson_order
from .pde import GridSpec, PdeProblem, helmholtz_solution, \
    klein_gordon_solution, verify_pde, yukawa_solve

__all__ = ["SUITES", "run_suites", "random_quaternion", "random_unit_imag",
           "random_polynomial"]


def random_quaternion(rng: random.Random, scale: float = 1.0) -> Quaternion:
    return Quaternion(*(rng.uniform(-scale, scale) for _ in range(4)))


def random_unit_imag(rng: random.Random) -> Quaternion:
    while True:
        v = Quaternion(0.0, *(rng.uniform(-1.0, 1.0) for _ in range(3)))
        n = v.imag_norm()
        if n > 1e-3:
            return v / n


def random_polynomial(rng: random.Random, degree: int,
                      scale: float = 1.0) -> PowerSeries:
    return PowerSeries([random_quaternion(rng, scale)
                        for _ in range(degree + 1)])


def _max_coeff_diff(f: PowerSeries, g: PowerSeries, top: int) -> float:
    return max((f.coeff(n) - g.coeff(n)).norm() for n in range(top + 1))


def check_quaternion(rng: random.Random) -> str:
    n_cases = 200
    for _ in range(n_cases):
        a = random_quaternion(rng, 2.0)
        b = random_quaternion(rng, 2.0)
        c = random_quaternion(rng, 2.0)
        assert ((a * b) * c - a * (b * c)).norm() < 1e-12, "associativity"
        assert abs((a * b).norm() - a.norm() * b.norm()) < 1e-12, "norm mult"
        assert ((a * b).conjugate() - b.conjugate() * a.conjugate()).norm() \
            < 1e-12, "conjugate anti-automorphism"
        if not a.is_zero():
            assert (a * a.inverse() - ONE).norm() < 1e-12, "inverse"
        sp = decompose(a)
        assert (sp.to_quaternion() - a).norm() < 1e-12, "decompose roundtrip"
        txt = format_quaternion(a)
        assert parse_quaternion(txt) == a, f"parse/format roundtrip {txt}"
    return f"{n_cases} random algebra/decompose/parse checks"


def check_series(rng: random.Random) -> str:
    for _ in range(40):
        f = random_polynomial(rng, rng.randint(0, 6))
        g = random_polynomial(rng, rng.randint(0, 6))
        h = random_polynomial(rng, rng.randint(0, 6))
        top = f.degree_bound + g.degree_bound + h.degree_bound
        assert _max_coeff_diff((f * g) * h, f * (g * h), top) < 1e-12, \
            "product associativity"
        assert _max_coeff_diff(f * (g + h), f * g + f * h, top) < 1e-12, \
            "distributivity"
        # normal series is intrinsic: real coefficients
        nf = normal(f)
        assert all(c.imag().norm() < 1e-12 for c in nf.coeffs), \
            "normal series not real"
        # conjugate is an anti-homomorphism for the slice product
        lhs = slice_conjugate(f * g)
        rhs = slice_conjugate(g) * slice_conjugate(f)
        assert _max_coeff_diff(lhs, rhs, top) < 1e-12, "conjugate of product"
    for _ in range(20):
        lam = random_quaternion(rng)
        e = exp_series(lam, 40)
        em = exp_series(-lam, 40)
        assert _max_coeff_diff(e * em, PowerSeries.one(), 35) < 1e-12, \
            "exp(lam) . exp(-lam) != 1"
        d = slice_derivative(e) - e * lam
        assert max(d.coeff(n).norm() for n in range(36)) < 1e-12, \
            "exp derivative"
        x = random_quaternion(rng)
        assert (em(-x) - e(x)).norm() < 1e-10, "exp parity"
    return "60 product/normal/exponential identities"


def check_sliceexpr(rng: random.Random) -> str:
    for _ in range(25):
        p = random_polynomial(rng, 5)
        f = lift(p)
        samples = [random_quaternion(rng, 1.5) for _ in range(6)]
        worst = verify_stem_symmetry(f, samples)
        assert worst < 1e-9, f"stem symmetry violated: {worst}"
        x = random_quaternion(rng, 1.5)
        assert (f(x) - p(x)).norm() < 1e-10, "lift disagrees with series"
    for _ in range(25):
        unit = random_unit_imag(rng)
        a1 = random_quaternion(rng)
        a2 = random_quaternion(rng)
        g = SliceConstant(unit, a1, a2).expr()
        alpha, beta = rng.uniform(-1, 1), rng.uniform(0.1, 1.5)
        up = Quaternion(alpha) + unit * beta
        dn = Quaternion(alpha) - unit * beta
        assert (g(up) - a1).norm() < 1e-12, "value on C_I+"
        assert (g(dn) - a2).norm() < 1e-12, "value on C_I-"
        # representation from two probe units
        ju, ku = random_unit_imag(rng), random_unit_imag(rng)
        if (ju - ku).norm() < 1e-2:
            continue
        rebuilt = slice_constant_from_two_values(
            ju, ku, g(Quaternion(alpha) + ju * beta),
            g(Quaternion(alpha) + ku * beta))
        assert (rebuilt(up) - a1).norm() < 1e-9, "two-value representation"
    m = mu(I)
    assert m(Quaternion(0.3, 0.9, 0, 0)).norm() < 1e-14
    assert (m(Quaternion(0.3, -0.9, 0, 0)) - ONE).norm() < 1e-14
    # recover the two constants of g . exp_lambda from point values
    lam = random_quaternion(rng)
    unit = random_unit_imag(rng)
    a1, a2 = random_quaternion(rng), random_quaternion(rng)
    f = product_expr(SliceConstant(unit, a1, a2).expr(),
                     lift(exp_series(lam, 60)))
    b1, b2 = recover_constants(f, lam, unit, n_trunc=60)
    assert (b1 - a1).norm() < 1e-8 and (b2 - a2).norm() < 1e-8, \
        "recover_constants roundtrip"
    return "51 stem-symmetry/slice-constant reconstructions"


def check_eigensolve(rng: random.Random) -> str:
    for _ in range(30):
        lam = random_quaternion(rng)
        if lam.norm() < 1e-3:
            continue
        # keep |lam| away from 0: S_lambda is conditioned by |lam|^-(d+1)
        lam = lam * (rng.uniform(0.5, 2.5) / lam.norm())
        p = random_polynomial(rng, rng.randint(0, 8))
        rt = apply_D(lam, S_lambda(lam, p))
        assert _max_coeff_diff(rt, p, p.degree_bound) < 1e-9, "D(S(p)) != p"
        ep = E_lambda_op(lam, p, 30)
        rt2 = apply_D(lam, ep)
        assert _max_coeff_diff(rt2, p, p.degree_bound) < 1e-10, "D(E(p)) != p"
        assert ep.coeff(0).is_zero(), "E(p)(0) != 0"
    # gen_exp against the brute-force multi-index sums
    for _ in range(10):
        m = rng.randint(1, 3)
        lams = [random_quaternion(rng) for _ in range(m)]
        g = gen_exp(lams, 8)
        for n in range(9):
            acc = ZERO
            if n >= m - 1:
                for ks in itertools.product(range(n - m + 2), repeat=m):
                    if sum(ks) != n - m + 1:
                        continue
                    term = ONE
                    for lamq, k in zip(lams, ks):
                        for _ in range(k):
                            term = term * lamq
                    acc = acc + term
            acc = acc / math.factorial(n)
            assert (g.coeff(n) - acc).norm() <= 1e-12 * (1.0 + acc.norm()), \
                f"gen_exp coefficient {n} mismatch"
    # telescoping and initial values
    for _ in range(10):
        m = rng.randint(2, 5)
        lams = [random_quaternion(rng) for _ in range(m)]
        g = gen_exp(lams, 25)
        tele = apply_D(lams[-1], g)
        ref = gen_exp(lams[:-1], 25)
        assert _max_coeff_diff(tele, ref, 20) < 1e-10, "telescoping"
        cs = [random_quaternion(rng) for _ in range(m)]
        sol = solve_with_initial(lams, cs, 25)
        cur = sol
        for i in range(m - 1, -1, -1):
            assert (cur.coeff(0) - cs[i]).norm() < 1e-10, \
                f"initial value {i} mismatch"
            if i > 0:
                cur = apply_D(lams[i], cur)
    # certified right inverse on an inexact series
    lam = random_unit_imag(rng)
    h = exp_series(lam, 30)
    cert = CoeffBoundCert.fit(h, 0, lam)
    u = E_lambda_op(J, h, 30, cert=cert)
    assert _max_coeff_diff(apply_D(J, u), h, 25) < 1e-10, "certified E(h)"
    # each kernel-basis element is annihilated by its suffix D-chain
    lams = [random_quaternion(rng) for _ in range(3)]
    for i, b in enumerate(kernel_basis(lams, 25)):
        cur = b
        for lamq in reversed(lams[i:]):
            cur = apply_D(lamq, cur)
        assert max(cur.coeff(n).norm() for n in range(19)) < 1e-9, \
            "kernel basis element not annihilated"
    # commuting f^{mu,lambda} collapses to exp_mu (mu - lambda)^{-1}
    mu_q = random_unit_imag(rng) * 0.4
    lam_q = mu_q * rng.uniform(1.5, 3.0)
    assert commutes(mu_q, lam_q)
    fml = f_mu_lambda(mu_q, lam_q, 40)
    want = exp_series(mu_q, 40) * (mu_q - lam_q).inverse()
    assert _max_coeff_diff(fml, want, 35) < 1e-10, "f_mu_lambda closed form"
    return "65 right-inverse/brute-force/telescoping/kernel checks"


def check_monogenic(rng: random.Random) -> str:
    t = rng.uniform(-1.5, 1.5)
    for n in range(7):
        got = eval_P(n, Quaternion(t))
        assert abs(got.w - math.comb(n + 2, 2) * t ** n) < 1e-10 and \
            got.imag().norm() < 1e-14, "P_n real-axis values"
        x = random_quaternion(rng, 1.2)
        gotz = eval_Z(n, x)
        sd = spherical_derivative_eval(PowerSeries.monomial(n + 1), x)
        assert (gotz - sd).norm() < 1e-10, "Z_n vs spherical derivative"
    for _ in range(20):
        f = random_polynomial(rng, rng.randint(2, 7))
        g = fueter_laplacian(f)
        x = random_quaternion(rng, 1.2)
        if x.imag_norm() < 0.2:
            x = x + J
        l1 = laplacian_pointwise(f, x)
        l2 = laplacian_via_partials(f, x)
        assert (l1 - l2).norm() < 1e-9 * (1 + l1.norm()), "laplacian formulas"
        assert (g(x) - l1).norm() < 1e-9 * (1 + l1.norm()), "P-basis laplacian"
        back = fueter_laplacian(inv_laplacian(g))
        assert back == g, "fueter o inv != id"
        lam = random_quaternion(rng)
        lhs = apply_L(lam, g)
        rhs = fueter_laplacian(apply_D(lam, f))
        top = max(lhs.degree_bound, rhs.degree_bound)
        assert max((lhs.coeff(n) - rhs.coeff(n)).norm()
                   for n in range(top + 1)) < 1e-10, "intertwining"
    # monogenicity of delta_exp with Richardson certification
    lams = [random_quaternion(rng), random_unit_imag(rng)]
    d = delta_exp(lams, 45)
    x = Quaternion(0.2, 0.4, -0.5, 0.3)
    r1, r2, order = richardson_order(
        lambda h: fd_crf(d, x, h)[0].norm(), 1e-3)
    assert r2 < 1e-5 and order > 1.8, f"delta_exp monogenicity: {r1}, {r2}, {order}"
    return "27 P-basis/Laplacian/intertwining checks + CRF certification"


def check_pde(rng: random.Random) -> str:
    grid = GridSpec(counts=(7, 7, 7), fd_step=0.025)
    f = helmholtz_solution(1.0, n_trunc=40)
    rep = verify_pde(f, PdeProblem(kind="helmholtz", lam=1.0, grid=grid))
    assert rep.max_rel_residual < 1e-4, f"helmholtz residual {rep.max_rel_residual}"
    assert rep.richardson_order > 1.9, "helmholtz order"
    assert rep.negative_control > 100 * rep.max_rel_residual, "negative control"
    unit = random_unit_imag(rng)
    g = klein_gordon_solution(1.0, [(unit, ONE)], n_trunc=40)
    rep2 = verify_pde(g, PdeProblem(kind="klein-gordon", lam=1.0, unit_i=unit,
                                    grid=grid))
    assert rep2.max_rel_residual < 1e-4, f"klein-gordon residual {rep2.max_rel_residual}"
    assert rep2.richardson_order > 1.9, "klein-gordon order"
    # Yukawa with a random degree-2 source
    h = MonogenicSeries([random_quaternion(rng) for _ in range(3)])
    unit2 = random_unit_imag(rng)
    fy = yukawa_solve(2.0, unit2, h)
    rep3 = verify_pde(fy, PdeProblem(kind="yukawa", lam=2.0, unit_i=unit2,
                                     rhs=h, grid=grid))
    assert rep3.max_rel_residual < 1e-9, f"yukawa residual {rep3.max_rel_residual}"
    assert rep3.negative_control > 1e-2, "yukawa negative control"
    return "helmholtz/klein-gordon/yukawa residuals on 7^3 grids"


SUITES = (
    ("quaternion", check_quaternion),
    ("series", check_series),
    ("sliceexpr", check_sliceexpr),
    ("eigensolve", check_eigensolve),
    ("monogenic", check_monogenic),
    ("pde", check_pde),
)


def run_suites(names, seed: int, out=None) -> int:
    """Run the named suites; print one line per suite; return exit code."""
    import sys
    out = out if out is not None else sys.stdout
    table = dict(SUITES)
    failures = 0
    for name in names:
        if name not in table:
            print(f"FAIL {name}: unknown suite", file=out)
            failures += 1
            continue
        rng = random.Random(seed)
        try:
            detail = table[name](rng)
        except AssertionError as exc:
            print(f"FAIL {name}: {exc}", file=out)
            failures += 1
        else:
            print(f"ok {name}: {detail}", file=out)
    status = "all suites passed" if failures == 0 else f"{failures} suite(s) failed"
    print(f"{status} (seed {seed})", file=out)
    return 0 if failures == 0 else 1
