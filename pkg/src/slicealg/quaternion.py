"""Quaternion arithmetic and the slice decomposition of H.

Elements of the skew field H are written x = w + x1*i + x2*j + x3*k with
the usual rules i**2 = j**2 = k**2 = -1, ij = k, jk = i, ki = j.  Every
quaternion splits as x = alpha + J*beta where alpha = w is the real part,
beta = |Im(x)| and J = Im(x)/beta is a unit imaginary quaternion
(J**2 = -1).  The pair (alpha, beta) together with J is the *slice
decomposition*; it is the coordinate system in which slice functions are
defined and evaluated throughout this package.

Real points (beta = 0) have no canonical J.  ``decompose`` flags them
instead of inventing a unit, and callers that genuinely need a J on the
real axis must supply one explicitly.
"""

from __future__ import annotations

import math
import re
from typing import NamedTuple, Optional

from .errors import ParseError

__all__ = [
    "Quaternion",
    "SlicePoint",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
    "mul",
    "commutes",
    "decompose",
    "as_quaternion",
    "parse_quaternion",
    "format_quaternion",
]


class Quaternion:
    """An element of H with four 64-bit float components.

    Values are immutable; all arithmetic returns new instances.  Mixed
    arithmetic with ints/floats treats the scalar as a real quaternion.

    >>> I * J == K
    True
    >>> (ONE + I) * (ONE + J)
    Quaternion(1.0, 1.0, 1.0, 1.0)
    """

    __slots__ = ("w", "x1", "x2", "x3")

    def __init__(self, w=0.0, x1=0.0, x2=0.0, x3=0.0):
        object.__setattr__(self, "w", float(w))
        object.__setattr__(self, "x1", float(x1))
        object.__setattr__(self, "x2", float(x2))
        object.__setattr__(self, "x3", float(x3))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_seq(cls, seq) -> "Quaternion":
        """Build from a length-4 sequence [w, x1, x2, x3]."""
        w, x1, x2, x3 = seq
        return cls(w, x1, x2, x3)

    def as_list(self):
        return [self.w, self.x1, self.x2, self.x3]

    # -- basic algebra -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Quaternion(self.w + other.w, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Quaternion(self.w - other.w, self.x1 - other.x1,
                          self.x2 - other.x2, self.x3 - other.x3)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x1, -self.x2, -self.x3)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x1 * other,
                              self.x2 * other, self.x3 * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        a, b = self, other
        return Quaternion(
            a.w * b.w - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.w * b.x1 + a.x1 * b.w + a.x2 * b.x3 - a.x3 * b.x2,
            a.w * b.x2 - a.x1 * b.x3 + a.x2 * b.w + a.x3 * b.x1,
            a.w * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.w,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x1 * other,
                              self.x2 * other, self.x3 * other)
        return NotImplemented

    def __truediv__(self, other):
        # Division is only defined for real divisors; quaternion division
        # is ambiguous (left vs right), use q * p.inverse() explicitly.
        if isinstance(other, (int, float)):
            return Quaternion(self.w / other, self.x1 / other,
                              self.x2 / other, self.x3 / other)
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x1, -self.x2, -self.x3)

    def norm2(self) -> float:
        """Squared norm |q|^2 = q * conj(q)."""
        return self.w * self.w + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    __abs__ = norm

    def inverse(self) -> "Quaternion":
        n2 = self.norm2()
        if n2 == 0.0:
            raise ZeroDivisionError("0 has no inverse in H")
        return Quaternion(self.w / n2, -self.x1 / n2, -self.x2 / n2, -self.x3 / n2)

    def trace(self) -> float:
        """t(q) = q + conj(q), always real."""
        return 2.0 * self.w

    def imag(self) -> "Quaternion":
        return Quaternion(0.0, self.x1, self.x2, self.x3)

    def imag_norm(self) -> float:
        """beta = |Im(q)|; exactly 0.0 iff the point is real."""
        return math.hypot(self.x1, self.x2, self.x3)

    def is_real(self) -> bool:
        return self.x1 == 0.0 and self.x2 == 0.0 and self.x3 == 0.0

    def is_zero(self) -> bool:
        return self.w == 0.0 and self.is_real()

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.w == other.w and self.x1 == other.x1
                and self.x2 == other.x2 and self.x3 == other.x3)

    def __hash__(self):
        return hash((self.w, self.x1, self.x2, self.x3))

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x1!r}, {self.x2!r}, {self.x3!r})"

    def __str__(self):
        return format_quaternion(self)


def _coerce(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(value)
    return NotImplemented


def as_quaternion(value) -> "Quaternion":
    """Coerce a Quaternion, int or float to Quaternion (raising TypeError)."""
    q = _coerce(value)
    if q is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a quaternion")
    return q


ZERO = Quaternion(0.0)
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product (function form of ``a * b``)."""
    return _coerce(a) * _coerce(b)


def commutes(a: Quaternion, b: Quaternion, tol: float = 1e-12) -> bool:
    """True iff |ab - ba| <= tol * (|a||b| + 1).

    Two quaternions commute exactly when they lie in a common slice
    C_J (or one of them is real).
    """
    a = _coerce(a)
    b = _coerce(b)
    return abs(a * b - b * a) <= tol * (abs(a) * abs(b) + 1.0)


class SlicePoint(NamedTuple):
    """Slice coordinates of a point x = alpha + J*beta.

    ``real`` is True when beta = 0; in that case ``j`` is whatever default
    the caller supplied to :func:`decompose` (possibly None) and must not
    be mistaken for intrinsic data.
    """

    alpha: float
    beta: float
    j: Optional[Quaternion]
    real: bool

    def to_quaternion(self) -> Quaternion:
        if self.beta == 0.0:
            return Quaternion(self.alpha)
        if self.j is None:
            raise ValueError("SlicePoint with beta > 0 has no unit J")
        return Quaternion(self.alpha) + self.j * self.beta


def decompose(x: Quaternion, default_j: Optional[Quaternion] = None) -> SlicePoint:
    """Slice decomposition x = alpha + J*beta.

    For non-real x returns (alpha, beta, J, real=False) with beta > 0 and
    J = Im(x)/beta.  For real x no J exists; the point is flagged and the
    caller-supplied ``default_j`` (default None) is passed through, never
    fabricated.

    >>> decompose(Quaternion(1, 2))
    SlicePoint(alpha=1.0, beta=2.0, j=Quaternion(0.0, 1.0, 0.0, 0.0), real=False)
    >>> decompose(Quaternion(3)).real
    True
    """
    x = _coerce(x)
    beta = x.imag_norm()
    if beta == 0.0:
        return SlicePoint(x.w, 0.0, default_j, True)
    j = Quaternion(0.0, x.x1 / beta, x.x2 / beta, x.x3 / beta)
    return SlicePoint(x.w, beta, j, False)


# -- textual literals ---------------------------------------------------------

_TERM_RE = re.compile(
    r"""\s*([+-]?)\s*
        (?:
            ((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([ijk]?)
          | ([ijk])
        )\s*""",
    re.VERBOSE,
)

_UNIT_INDEX = {"": 0, "i": 1, "j": 2, "k": 3}


def parse_quaternion(text: str) -> Quaternion:
    """Parse a literal like ``1+2i-0.5j+k`` (any subset of terms).

    >>> parse_quaternion("1+2i")
    Quaternion(1.0, 2.0, 0.0, 0.0)
    >>> parse_quaternion("-k")
    Quaternion(0.0, 0.0, 0.0, -1.0)
    """
    if not isinstance(text, str) or not text.strip():
        raise ParseError(f"empty quaternion literal: {text!r}")
    comps = [0.0, 0.0, 0.0, 0.0]
    pos = 0
    nterms = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad quaternion literal {text!r} at position {pos}")
        sign, number, unit, bare = m.groups()
        if nterms > 0 and not sign:
            raise ParseError(f"missing +/- between terms in {text!r} at position {pos}")
        value = 1.0 if number is None else float(number)
        if sign == "-":
            value = -value
        comps[_UNIT_INDEX[bare if bare is not None else unit]] += value
        nterms += 1
        pos = m.end()
    if nterms == 0:
        raise ParseError(f"empty quaternion literal: {text!r}")
    return Quaternion(*comps)


def format_quaternion(q: Quaternion) -> str:
    """Canonical literal for q, inverse of :func:`parse_quaternion`."""
    q = _coerce(q)
    parts = []
    for value, unit in zip(q.as_list(), ("", "i", "j", "k")):
        if value == 0.0:
            continue
        mag = abs(value)
        body = unit if (mag == 1.0 and unit) else f"{mag!r}{unit}"
        if not parts:
            parts.append(body if value > 0 else "-" + body)
        else:
            parts.append(("+" if value > 0 else "-") + body)
    return "".join(parts) if parts else "0"
