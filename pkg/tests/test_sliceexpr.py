"""Slice functions beyond power series: stems, mu_I, slice constants."""

import random

import pytest

from slicealg import (
    DegenerateUnits,
    DomainError,
    ParseError,
    PowerSeries,
    Quaternion,
    SliceConstant,
    SliceExpr,
    StemSymmetryError,
    I,
    J,
    K,
    ONE,
    ZERO,
    constant_expr,
    exp_series,
    lift,
    mu,
    pointwise_slice_product,
    product_expr,
    recover_constants,
    slice_constant_from_two_values,
    slice_derivative_pointwise,
    slice_product,
    verify_stem_symmetry,
)

TOL = 1e-10


def rand_q(rng, scale=1.5):
    return Quaternion(*(rng.uniform(-scale, scale) for _ in range(4)))


def rand_nonreal(rng, scale=1.5):
    while True:
        x = rand_q(rng, scale)
        if x.imag_norm() > 0.2:
            return x


def rand_unit(rng):
    while True:
        v = Quaternion(0.0, *(rng.uniform(-1, 1) for _ in range(3)))
        n = v.norm()
        if n > 1e-3:
            return v * (1.0 / n)


def test_lift_agrees_with_series():
    rng = random.Random(201)
    f = PowerSeries([rand_q(rng) for _ in range(6)])
    lf = lift(f)
    assert lf.domain == "slice"
    for _ in range(40):
        x = rand_q(rng, 2.0)
        assert (lf(x) - f(x)).norm() < TOL


def test_lift_stems_independent_of_probe_unit():
    rng = random.Random(203)
    f = PowerSeries([rand_q(rng) for _ in range(5)])
    lf = lift(f)
    pts = [rand_nonreal(rng) for _ in range(25)]
    worst = verify_stem_symmetry(lf, pts)
    assert worst < 1e-10


def test_stem_symmetry_detects_fakes():
    # a "function" whose stems secretly depend on the probe unit
    def bad_stem(alpha, beta, j):
        bias = j.x1 if j is not None else 0.0
        return Quaternion(alpha + bias), Quaternion(beta)

    fake = SliceExpr(bad_stem, domain="slice", name="fake")
    pts = [Quaternion(0.3, 1.0, 0.2, 0.0), Quaternion(-0.5, 0.0, 1.5, 0.4)]
    with pytest.raises(StemSymmetryError):
        verify_stem_symmetry(fake, pts)


def test_mu_two_sided_values():
    m = mu(I)
    rng = random.Random(207)
    for _ in range(20):
        a = rng.uniform(-2, 2)
        b = rng.uniform(0.1, 2)
        up = Quaternion(a, b, 0.0, 0.0)     # C_I+
        dn = Quaternion(a, -b, 0.0, 0.0)    # C_I-
        assert m(up).norm() < TOL
        assert (m(dn) - ONE).norm() < TOL
    # constant stems (1/2, I/2)
    f1, f2 = m.stems(0.1, 0.7, J)
    assert (f1 - Quaternion(0.5)).norm() < TOL
    assert (f2 - 0.5 * I).norm() < TOL


def test_mu_undefined_on_real_axis():
    m = mu(I)
    assert m.domain == "product"
    with pytest.raises(DomainError):
        m(Quaternion(1.0))


def test_mu_is_idempotent_under_slice_product():
    # mu . mu = mu (stems (1/2, I/2) square to themselves)
    m = mu(K)
    rng = random.Random(211)
    for _ in range(20):
        x = rand_nonreal(rng)
        v = pointwise_slice_product(m, m, x)
        assert (v - m(x)).norm() < TOL


def test_slice_constant_two_value_representation():
    rng = random.Random(213)
    for _ in range(25):
        uj, uk = rand_unit(rng), rand_unit(rng)
        if (uj - uk).norm() < 0.3 or (uj + uk).norm() < 0.3:
            continue
        a1, a2 = rand_q(rng), rand_q(rng)
        g = slice_constant_from_two_values(uj, uk, a1, a2)
        assert (g(uj * 1.7) - a1).norm() < TOL      # on C_J+
        assert (g(uk * 0.4) - a2).norm() < TOL      # on C_K+
        # slice constants have zero slice derivative
        x = rand_nonreal(rng)
        assert slice_derivative_pointwise(g, x).norm() < 1e-6


def test_slice_constant_degenerate_units():
    with pytest.raises(DegenerateUnits):
        slice_constant_from_two_values(I, I, ONE, ZERO)
    # antipodal units are fine: the two half slices C_I+ and C_{-I}+ are
    # the two halves of one slice
    g = slice_constant_from_two_values(I, -I, ONE, ZERO)
    assert (g(Quaternion(0.0, 2.0, 0.0, 0.0)) - ONE).norm() < TOL
    assert g(Quaternion(0.0, -2.0, 0.0, 0.0)).norm() < TOL


def test_slice_constant_record_roundtrip():
    h = SliceConstant.on_halves(I, Quaternion(1.0, 0.0, 2.0, 0.0),
                                Quaternion(-3.0))
    rec = h.to_record()
    back = SliceConstant.from_record(rec)
    assert back == h
    u = SliceConstant.uniform(Quaternion(2.0, 1.0, 0.0, 0.0))
    assert u.is_uniform
    assert SliceConstant.from_record(u.to_record()) == u
    # collapsing case: equal half-values give a uniform constant
    c = SliceConstant.on_halves(J, Quaternion(5.0), Quaternion(5.0))
    assert c.is_uniform
    # malformed records are a ParseError, not a KeyError
    with pytest.raises(ParseError):
        SliceConstant.from_record({"i": "i", "a1": "1", "a2": "2"})
    with pytest.raises(ParseError):
        SliceConstant.from_record(["I", "a1", "a2"])


def test_slice_constant_expr_values():
    h = SliceConstant.on_halves(I, Quaternion(2.0), Quaternion(0.0, 0.0, 1.0, 0.0))
    g = h.expr()
    assert (g(Quaternion(0.3, 1.2, 0.0, 0.0)) - Quaternion(2.0)).norm() < TOL
    assert (g(Quaternion(0.3, -1.2, 0.0, 0.0)) - J).norm() < TOL
    # stems reproduce ((a1+a2)/2, I(a2-a1)/2)
    g1, g2 = h.stems()
    assert (g1 - 0.5 * (Quaternion(2.0) + J)).norm() < TOL
    assert (g2 - 0.5 * (I * (J - Quaternion(2.0)))).norm() < TOL


def test_pointwise_product_matches_series_convolution():
    rng = random.Random(217)
    for _ in range(20):
        f = PowerSeries([rand_q(rng) for _ in range(4)])
        g = PowerSeries([rand_q(rng) for _ in range(4)])
        x = rand_nonreal(rng)
        v1 = pointwise_slice_product(lift(f), lift(g), x)
        v2 = slice_product(f, g)(x)
        assert (v1 - v2).norm() < TOL


def test_product_expr_and_constant_expr():
    c = constant_expr(Quaternion(0.0, 0.0, 0.0, 2.0))
    f = lift(exp_series(I, 30))
    p = product_expr(c, f)
    x = Quaternion(0.4, 0.0, 1.1, 0.0)
    want = pointwise_slice_product(c, f, x)
    assert (p(x) - want).norm() < TOL
    # multiplying by a uniform constant on the left is plain scaling
    k = Quaternion(0.0, 0.0, 0.0, 2.0)
    assert (want - (k * exp_series(I, 30))(x)).norm() < TOL


def test_recover_constants_roundtrip():
    rng = random.Random(219)
    for _ in range(15):
        lam = rand_q(rng, 1.0)
        unit = rand_unit(rng)
        a1, a2 = rand_q(rng), rand_q(rng)
        g = SliceConstant.on_halves(unit, a1, a2)
        f = product_expr(g.expr(), lift(exp_series(lam, 60)))
        b1, b2 = recover_constants(f, lam, unit, n_trunc=60)
        assert (b1 - a1).norm() < 1e-8
        assert (b2 - a2).norm() < 1e-8


def test_slice_derivative_pointwise_on_series():
    rng = random.Random(223)
    f = PowerSeries([rand_q(rng) for _ in range(6)])
    from slicealg import slice_derivative
    df = slice_derivative(f)
    for _ in range(20):
        x = rand_nonreal(rng)
        got = slice_derivative_pointwise(lift(f), x)
        assert (got - df(x)).norm() < 1e-6
