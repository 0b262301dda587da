"""Axially monogenic solutions of Helmholtz, Klein-Gordon and Yukawa
equations, with finite-difference grid verification.

A slice-regular function u with x0-dependence controlled by its
eigenvalue data satisfies d^2 u / dx0^2 = u * lambda^2-type identities;
its Laplacian image f = Delta_4 u is axially monogenic, hence harmonic
in all four variables, so Delta_3 f = -d^2 f / dx0^2 at fixed x0.  That
single observation turns the closed-form eigenfunctions of eigensolve
into solutions of

    (Delta_3 + lambda^2) f = 0        (Helmholtz,      lambda real)
    (Delta_3 - lambda^2) f = 0        (Klein-Gordon,   exp_{I lambda})
    Delta_3 f + (a^2-b^2) f + 2ab f I = 0   (quadratic kernel, lambda_1 = a + bI)
    Delta_3 f - lambda^2 f = h        (Yukawa, h axially monogenic)

where Delta_3 acts in (x1, x2, x3).  Solutions come in two flavours:

* a *uniform* part, Delta_4 of an ordinary power series (defined on all
  of H, real axis included);
* *product-domain* terms Delta_4(h . e) with h a genuine two-valued
  slice constant; these are singular on the real axis and grids must
  carry an exclusion ball around it.

Everything a grid needs is evaluated in closed form from stems: for
slice-regular u,  Delta_4 u = -(2/beta) J (u'_s - du/dx), with both the
spherical and the slice derivative available exactly from the series
coefficients.  No finite differences enter the *construction*; FD is
used only by :func:`verify_pde` to certify the residuals independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, GridTooSmall, ParseError, ZeroEigenvalue
from .fmtio import dump_json, write_csv
from .quaternion import Quaternion, ZERO, ONE, as_quaternion, decompose, \
    format_quaternion, parse_quaternion
from .series import PowerSeries, exp_series, slice_derivative
from .sliceexpr import SliceConstant
from .eigensolve import gen_exp, S_lambda
from .monogenic import MonogenicSeries, fueter_laplacian, inv_laplacian, fd_crf

__all__ = [
    "GridSpec",
    "PdeProblem",
    "SolutionEvaluator",
    "PdeReport",
    "helmholtz_solution",
    "klein_gordon_solution",
    "general_quadratic_kernel",
    "yukawa_solve",
    "verify_pde",
]

_KINDS = ("helmholtz", "klein-gordon", "yukawa", "quadratic")

# quaternion algebra on (..., 4) component arrays ---------------------------

_CONJ = np.array([1.0, -1.0, -1.0, -1.0])


def _qmul(a, b):
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    bw, bx, by, bz = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack([
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    ], axis=-1)


def _qarr(q: Quaternion):
    return np.array(q.as_list())


def _stems_arrays(coeffs, alpha, beta):
    """Stem components (F1, F2) of sum x^n a_n at z = alpha + i beta.

    Returns two (n, 4) arrays; quaternion coefficients multiply from the
    right, so each power contributes Re(z^n) a_n and Im(z^n) a_n.
    """
    z = alpha + 1j * beta
    zp = np.ones_like(z)
    f1 = np.zeros(alpha.shape + (4,))
    f2 = np.zeros_like(f1)
    for a in coeffs:
        if not a.is_zero():
            av = _qarr(a)
            f1 += zp.real[..., None] * av
            f2 += zp.imag[..., None] * av
        zp = zp * z
    return f1, f2


def _eval_mono_components(g: MonogenicSeries, x0, x1, x2, x3):
    """Vectorized Sum_n P_n(x) m_n on component arrays."""
    xq = np.stack([x0, x1, x2, x3], axis=-1)
    xc = xq * _CONJ
    top = g.degree_bound
    xp = [np.zeros_like(xq)]
    xp[0][..., 0] = 1.0
    xcp = [xp[0]]
    for _ in range(top + 1):
        xp.append(_qmul(xp[-1], xq))
        xcp.append(_qmul(xcp[-1], xc))
    out = np.zeros_like(xq)
    for n, m in enumerate(g.coeffs):
        if m.is_zero():
            continue
        p = np.zeros_like(xq)
        for k in range(1, n + 2):
            p += float(k) * _qmul(xp[k - 1], xcp[n - k + 1])
        out += _qmul(p, _qarr(m))
    return out


# grids and problems ---------------------------------------------------------

@dataclass(frozen=True)
class GridSpec:
    """Axis-aligned sampling box in (x1, x2, x3) at fixed x0.

    ``fd_step`` is the base step of the central-difference Delta_3
    stencil (defaults to a quarter of the smallest grid spacing; the
    stencil samples the solution off-grid, so the two are independent).
    ``exclude_radius`` removes the ball |(x1,x2,x3)| < r around the
    real-axis trace; it is mandatory for product-domain solutions.
    """

    counts: Tuple[int, int, int] = (21, 21, 21)
    lo: Tuple[float, float, float] = (-1.0, -1.0, -1.0)
    hi: Tuple[float, float, float] = (1.0, 1.0, 1.0)
    x0: float = 0.0
    exclude_radius: float = 0.0
    fd_step: Optional[float] = None

    def __post_init__(self):
        if len(self.counts) != 3 or len(self.lo) != 3 or len(self.hi) != 3:
            raise ValueError("GridSpec needs three axes")
        if any(int(c) < 3 for c in self.counts):
            raise GridTooSmall(f"counts {self.counts}: need >= 3 points per axis")
        if any(h <= l for l, h in zip(self.lo, self.hi)):
            raise ValueError(f"empty box: lo={self.lo}, hi={self.hi}")
        if self.fd_step is not None and self.fd_step <= 0:
            raise ValueError("fd_step must be positive")
        if self.exclude_radius < 0:
            raise ValueError("exclude_radius must be >= 0")

    @property
    def steps(self) -> Tuple[float, float, float]:
        return tuple((h - l) / (int(c) - 1)
                     for l, h, c in zip(self.lo, self.hi, self.counts))

    @property
    def effective_fd_step(self) -> float:
        if self.fd_step is not None:
            return float(self.fd_step)
        return min(self.steps) / 4.0

    def axes(self):
        return [np.linspace(l, h, int(c))
                for l, h, c in zip(self.lo, self.hi, self.counts)]

    def to_record(self) -> dict:
        rec = {
            "counts": [int(c) for c in self.counts],
            "lo": [float(v) for v in self.lo],
            "hi": [float(v) for v in self.hi],
            "x0": float(self.x0),
            "exclude_radius": float(self.exclude_radius),
        }
        if self.fd_step is not None:
            rec["fd_step"] = float(self.fd_step)
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "GridSpec":
        try:
            return cls(
                counts=tuple(int(c) for c in rec.get("counts", (21, 21, 21))),
                lo=tuple(float(v) for v in rec.get("lo", (-1.0, -1.0, -1.0))),
                hi=tuple(float(v) for v in rec.get("hi", (1.0, 1.0, 1.0))),
                x0=float(rec.get("x0", 0.0)),
                exclude_radius=float(rec.get("exclude_radius", 0.0)),
                fd_step=(None if rec.get("fd_step") is None
                         else float(rec["fd_step"])),
            )
        except (TypeError, KeyError) as exc:
            raise ParseError(f"bad grid record: {exc}") from exc


def _real_lambda(lam) -> float:
    q = as_quaternion(lam)
    if not q.is_real():
        raise ValueError(f"lambda must be real, got {q}")
    if q.w == 0.0:
        raise ZeroEigenvalue("lambda must be nonzero")
    return q.w


def _unit_imag(u) -> Quaternion:
    q = as_quaternion(u)
    if abs(q.w) > 1e-12 or abs(q.imag_norm() - 1.0) > 1e-12:
        raise ValueError(f"expected a unit imaginary quaternion, got {q}")
    return q


@dataclass(frozen=True)
class PdeProblem:
    """A Helmholtz / Klein-Gordon / Yukawa / quadratic-kernel instance.

    ``lam`` is the real eigenvalue scale; ``unit_i`` the imaginary unit
    for Klein-Gordon exponentials or the Yukawa operator splitting;
    ``slice_constants`` the h-data (one per term); ``rhs`` the Yukawa
    source; ``lam1`` the quaternionic eigenvalue of the quadratic kernel.
    """

    kind: str
    lam: float = 1.0
    unit_i: Optional[Quaternion] = None
    slice_constants: Tuple[SliceConstant, ...] = ()
    rhs: Optional[MonogenicSeries] = None
    lam1: Optional[Quaternion] = None
    grid: GridSpec = GridSpec()
    degree: int = 40

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown problem kind {self.kind!r}")
        if self.kind == "quadratic":
            if self.lam1 is None or as_quaternion(self.lam1).is_zero():
                raise ZeroEigenvalue("quadratic kernel needs lambda_1 != 0")
        else:
            if self.lam == 0.0:
                raise ZeroEigenvalue("lambda must be nonzero")
        if self.kind in ("klein-gordon", "yukawa") and self.unit_i is None:
            raise ValueError(f"{self.kind} problems need an imaginary unit I")
        if self.kind == "yukawa" and self.rhs is None:
            raise ValueError("yukawa problems need a right-hand side")

    def to_record(self) -> dict:
        rec = {"kind": self.kind, "lambda": float(self.lam)}
        if self.unit_i is not None:
            rec["I"] = format_quaternion(self.unit_i)
        if self.lam1 is not None:
            rec["lambda1"] = format_quaternion(self.lam1)
        if self.slice_constants:
            rec["slice_constants"] = [h.to_record() for h in self.slice_constants]
        if self.rhs is not None:
            rec["rhs"] = {"basis": "P",
                          "coeffs": [c.as_list() for c in self.rhs.coeffs]}
        rec["grid"] = self.grid.to_record()
        rec["degree"] = int(self.degree)
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "PdeProblem":
        if not isinstance(rec, dict) or "kind" not in rec:
            raise ParseError("problem record must be an object with a 'kind'")
        kind = rec["kind"]
        unit_i = None
        if rec.get("I") is not None:
            unit_i = _unit_imag(parse_quaternion(rec["I"]))
        lam1 = None
        if rec.get("lambda1") is not None:
            lam1 = parse_quaternion(rec["lambda1"])
        constants = tuple(SliceConstant.from_record(r)
                          for r in rec.get("slice_constants", []))
        rhs = None
        if rec.get("rhs") is not None:
            raw = rec["rhs"]
            if not isinstance(raw, dict) or raw.get("basis") != "P":
                raise ParseError("rhs must be a P-basis monogenic series record")
            rhs = MonogenicSeries([Quaternion(*c) for c in raw.get("coeffs", [])])
        return cls(
            kind=kind,
            lam=float(rec.get("lambda", 1.0)),
            unit_i=unit_i,
            slice_constants=constants,
            rhs=rhs,
            lam1=lam1,
            grid=GridSpec.from_record(rec.get("grid", {})),
            degree=int(rec.get("degree", 40)),
        )


# solution evaluators ---------------------------------------------------------

class SolutionEvaluator:
    """Pointwise/vectorized evaluator for f = Sum_t Delta_4(h_t . e_t).

    Uniform constants are folded into a single power series u (so that
    part of f is fueter_laplacian(u), defined on all of H); genuine
    two-valued slice constants keep their stem form and restrict the
    evaluator to the product domain H \\ R.
    """

    def __init__(self, terms: Sequence[Tuple[SliceConstant, PowerSeries]],
                 name: str = ""):
        u = None
        stem_terms = []
        for h, e in terms:
            if h.is_uniform:
                if h.a1.is_zero():
                    continue
                ue = h.a1 * e
                u = ue if u is None else u + ue
            else:
                h1, h2 = h.stems()
                stem_terms.append((_qarr(h1), _qarr(h2), e, slice_derivative(e)))
        self.name = name
        self.uniform_series = u
        self.mono = fueter_laplacian(u) if u is not None else MonogenicSeries([ZERO])
        self._du = slice_derivative(u) if u is not None else None
        self._stem_terms = stem_terms

    @property
    def product_domain(self) -> bool:
        return bool(self._stem_terms)

    def eval_components(self, x0, x1, x2, x3):
        """f at the points (x0, x1, x2, x3); returns an (..., 4) array."""
        x0 = np.asarray(x0, dtype=float)
        x1 = np.asarray(x1, dtype=float)
        x2 = np.asarray(x2, dtype=float)
        x3 = np.asarray(x3, dtype=float)
        beta = np.sqrt(x1 * x1 + x2 * x2 + x3 * x3)
        off = beta > 1e-9
        if self._stem_terms and not off.all():
            raise DomainError("product-domain solution evaluated at a real "
                              "point; exclude the real axis from the grid")
        out = np.zeros(x0.shape + (4,))
        if off.any():
            a = x0[off]
            b = beta[off]
            jv = np.zeros(a.shape + (4,))
            jv[..., 1] = x1[off] / b
            jv[..., 2] = x2[off] / b
            jv[..., 3] = x3[off] / b
            acc = np.zeros(a.shape + (4,))
            if self.uniform_series is not None:
                _, f2 = _stems_arrays(self.uniform_series.coeffs, a, b)
                d1, d2 = _stems_arrays(self._du.coeffs, a, b)
                dval = d1 + _qmul(jv, d2)
                acc += (-2.0 / b)[..., None] * _qmul(jv, f2 / b[..., None] - dval)
            for h1v, h2v, e, de in self._stem_terms:
                f1, f2 = _stems_arrays(e.coeffs, a, b)
                d1, d2 = _stems_arrays(de.coeffs, a, b)
                g2 = _qmul(h1v, f2) + _qmul(h2v, f1)
                p1 = _qmul(h1v, d1) - _qmul(h2v, d2)
                p2 = _qmul(h1v, d2) + _qmul(h2v, d1)
                dval = p1 + _qmul(jv, p2)
                acc += (-2.0 / b)[..., None] * _qmul(jv, g2 / b[..., None] - dval)
            out[off] = acc
        if not off.all():
            # exact real points: the uniform part continues as a P-series
            idx = np.argwhere(~off)
            for ix in idx:
                v = self.mono(Quaternion(float(x0[tuple(ix)])))
                out[tuple(ix)] = v.as_list()
        return out

    def __call__(self, x) -> Quaternion:
        x = as_quaternion(x)
        comps = self.eval_components(
            np.array([x.w]), np.array([x.x1]),
            np.array([x.x2]), np.array([x.x3]))
        return Quaternion(*comps[0])


class _MonoEvaluator:
    """Adapter presenting a MonogenicSeries as a grid evaluator."""

    product_domain = False

    def __init__(self, g: MonogenicSeries):
        self.mono = g

    def eval_components(self, x0, x1, x2, x3):
        return _eval_mono_components(self.mono,
                                     np.asarray(x0, dtype=float),
                                     np.asarray(x1, dtype=float),
                                     np.asarray(x2, dtype=float),
                                     np.asarray(x3, dtype=float))

    def __call__(self, x) -> Quaternion:
        return self.mono(as_quaternion(x))


def _as_constant(h) -> SliceConstant:
    if isinstance(h, SliceConstant):
        return h
    return SliceConstant.uniform(as_quaternion(h))


def helmholtz_solution(lam, h1=None, h2=None, n_trunc: int = 40) -> SolutionEvaluator:
    """f = Delta_4(h1 . exp_lam) + Delta_4(h2 . exp_{-lam}), lam real != 0.

    Solves (Delta_3 + lam^2) f = 0; defaults h1 = 1, h2 = 0 give the
    fundamental entire solution Delta_4 e^{lam x}.
    """
    lam = _real_lambda(lam)
    h1 = _as_constant(ONE if h1 is None else h1)
    h2 = _as_constant(ZERO if h2 is None else h2)
    terms = [(h1, exp_series(Quaternion(lam), n_trunc)),
             (h2, exp_series(Quaternion(-lam), n_trunc))]
    return SolutionEvaluator(terms, name=f"helmholtz(lambda={lam})")


def klein_gordon_solution(lam, constants, n_trunc: int = 40) -> SolutionEvaluator:
    """f = Sum_I Delta_4(h_I . exp_{I lam}) for (I, h_I) in ``constants``.

    Solves (Delta_3 - lam^2) f = 0.  An empty list yields the zero
    evaluator.
    """
    lam = _real_lambda(lam)
    terms = []
    for unit, h in constants:
        unit = _unit_imag(unit)
        terms.append((_as_constant(h), exp_series(unit * lam, n_trunc)))
    return SolutionEvaluator(terms, name=f"klein-gordon(lambda={lam})")


def general_quadratic_kernel(lam1, h1=None, h2=None,
                             n_trunc: int = 40) -> SolutionEvaluator:
    """f = Delta_4(h1 . E_{(lam1, -lam1)}) + Delta_4(h2 . exp_{-lam1}).

    For lam1 = a + b I the result satisfies the twisted equation
    Delta_3 f + (a^2 - b^2) f + 2ab f I = 0; b = 0 reduces to Helmholtz
    and a = 0 to Klein-Gordon.
    """
    lam1 = as_quaternion(lam1)
    if lam1.is_zero():
        raise ZeroEigenvalue("quadratic kernel needs lambda_1 != 0")
    h1 = _as_constant(ONE if h1 is None else h1)
    h2 = _as_constant(ZERO if h2 is None else h2)
    terms = [(h1, gen_exp([lam1, -lam1], n_trunc)),
             (h2, exp_series(-lam1, n_trunc))]
    return SolutionEvaluator(terms, name=f"quadratic(lambda1={lam1})")


def yukawa_solve(lam, unit_i, h: MonogenicSeries) -> MonogenicSeries:
    """Particular solution of Delta_3 f - lam^2 f = h in the P-basis.

    f = -Delta_4 S_{-I lam} S_{I lam} (inv_laplacian h); everything stays
    polynomial, so the result is an exact MonogenicSeries.
    """
    lam = _real_lambda(lam)
    unit = _unit_imag(unit_i)
    u = inv_laplacian(h)
    v = S_lambda(unit * lam, u)
    w = S_lambda(-(unit * lam), v)
    return -fueter_laplacian(w)


# verification ----------------------------------------------------------------

@dataclass
class PdeReport:
    """Residual statistics from :func:`verify_pde`.

    ``rows`` holds one CSV row per verified node:
    (x0, x1, x2, x3, f_w, f_x1, f_x2, f_x3, residual_norm).
    """

    kind: str
    n_points: int
    fd_step: float
    scale: float
    max_rel_residual: float
    mean_rel_residual: float
    richardson_order: float
    negative_control: float
    monogenicity_max_rel: float
    monogenicity_order: float
    rows: list

    def summary(self) -> dict:
        order = self.richardson_order
        return {
            "max_rel_residual": float(self.max_rel_residual),
            "mean_rel_residual": float(self.mean_rel_residual),
            "richardson_order": (None if not math.isfinite(order)
                                 else float(order)),
        }

    def write_summary(self, path) -> None:
        dump_json(self.summary(), path)

    def write_csv(self, path) -> None:
        write_csv(path,
                  ["x0", "x1", "x2", "x3", "f_w", "f_x1", "f_x2", "f_x3",
                   "residual_norm"],
                  self.rows)


def _operator_residual(problem: PdeProblem, lap, fv, rhs_vals, factor: float):
    """Residual of the problem's operator; ``factor`` scales lambda^2
    (factor 4 is the deliberate lambda -> 2 lambda negative control)."""
    kind = problem.kind
    if kind == "helmholtz":
        return lap + (factor * problem.lam ** 2) * fv
    if kind == "klein-gordon":
        return lap - (factor * problem.lam ** 2) * fv
    if kind == "yukawa":
        res = lap - (factor * problem.lam ** 2) * fv
        return res - rhs_vals
    # quadratic: Delta_3 f + (a^2-b^2) f + 2ab f I = 0
    sp = decompose(as_quaternion(problem.lam1))
    a, b = sp.alpha, sp.beta
    res = lap + (factor * (a * a - b * b)) * fv
    if b != 0.0:
        iv = _qarr(sp.j)
        res = res + (factor * 2.0 * a * b) * _qmul(fv, iv)
    return res


def verify_pde(f, problem: PdeProblem) -> PdeReport:
    """Check the constructed solution against its PDE on the grid.

    The Laplacian Delta_3 is approximated by second-order central
    differences at fixed x0, at steps h and h/2 (Richardson order
    estimate); the relative residual is |residual| / max|f| over kept
    nodes.  A negative control re-evaluates the residual with
    lambda -> 2 lambda from the same samples, and monogenicity of f is
    spot-checked with fd_crf at five nodes.
    """
    ev = _MonoEvaluator(f) if isinstance(f, MonogenicSeries) else f
    grid = problem.grid
    h = grid.effective_fd_step

    ax1, ax2, ax3 = grid.axes()
    g1, g2, g3 = np.meshgrid(ax1, ax2, ax3, indexing="ij")
    x1c, x2c, x3c = g1.ravel(), g2.ravel(), g3.ravel()
    beta = np.sqrt(x1c * x1c + x2c * x2c + x3c * x3c)

    if ev.product_domain and grid.exclude_radius <= 0.0:
        raise DomainError("product-domain solutions require a grid with "
                          "exclude_radius > 0 (singular on the real axis)")
    if grid.exclude_radius > 0.0:
        keep = beta >= grid.exclude_radius + h
        x1c, x2c, x3c = x1c[keep], x2c[keep], x3c[keep]
    if x1c.size == 0:
        raise GridTooSmall("no grid nodes survive the exclusion ball")
    x0c = np.full_like(x1c, grid.x0)

    fv = ev.eval_components(x0c, x1c, x2c, x3c)

    def lap3(step):
        acc = -6.0 * fv
        for dx1, dx2, dx3 in ((step, 0.0, 0.0), (-step, 0.0, 0.0),
                              (0.0, step, 0.0), (0.0, -step, 0.0),
                              (0.0, 0.0, step), (0.0, 0.0, -step)):
            acc = acc + ev.eval_components(x0c, x1c + dx1, x2c + dx2, x3c + dx3)
        return acc / (step * step)

    rhs_vals = None
    if problem.kind == "yukawa":
        rhs_vals = _eval_mono_components(problem.rhs, x0c, x1c, x2c, x3c)

    lap_h = lap3(h)
    lap_h2 = lap3(h / 2.0)

    fnorm = np.linalg.norm(fv, axis=-1)
    scale = float(fnorm.max())
    div = scale if scale > 0.0 else 1.0

    res_h = np.linalg.norm(
        _operator_residual(problem, lap_h, fv, rhs_vals, 1.0), axis=-1)
    res_h2 = np.linalg.norm(
        _operator_residual(problem, lap_h2, fv, rhs_vals, 1.0), axis=-1)
    neg = np.linalg.norm(
        _operator_residual(problem, lap_h, fv, rhs_vals, 4.0), axis=-1)

    max_rel = float(res_h.max()) / div
    mean_rel = float(res_h.mean()) / div
    max_rel_h2 = float(res_h2.max()) / div
    if max_rel <= 1e-11 and max_rel_h2 <= 1e-11:
        order = math.inf                     # converged to roundoff
    elif max_rel_h2 == 0.0:
        order = math.inf
    else:
        order = math.log2(max_rel / max_rel_h2)

    # monogenicity spot checks
    spots = np.unique(np.linspace(0, x1c.size - 1, 5).astype(int))
    monog = 0.0
    monog_half = 0.0
    crf_h = 1e-3
    for s in spots:
        pt = Quaternion(float(x0c[s]), float(x1c[s]),
                        float(x2c[s]), float(x3c[s]))
        d1, _ = fd_crf(ev, pt, crf_h)
        d2, _ = fd_crf(ev, pt, crf_h / 2.0)
        monog = max(monog, d1.norm())
        monog_half = max(monog_half, d2.norm())
    monog_rel = monog / div
    if monog / div <= 1e-12 and monog_half / div <= 1e-12:
        monog_order = math.inf
    else:
        monog_order = math.log2(monog / monog_half) if monog_half else math.inf

    rows = [
        (float(x0c[i]), float(x1c[i]), float(x2c[i]), float(x3c[i]),
         float(fv[i, 0]), float(fv[i, 1]), float(fv[i, 2]), float(fv[i, 3]),
         float(res_h[i]))
        for i in range(x1c.size)
    ]
    return PdeReport(
        kind=problem.kind,
        n_points=int(x1c.size),
        fd_step=h,
        scale=scale,
        max_rel_residual=max_rel,
        mean_rel_residual=mean_rel,
        richardson_order=order,
        negative_control=float(neg.max()) / div,
        monogenicity_max_rel=monog_rel,
        monogenicity_order=monog_order,
        rows=rows,
    )
