"""Extended-real arithmetic with explicit conventions.

Values live on [-inf, +inf].  The conventions that differ from IEEE float
semantics are implemented by rule:

    inf * 0 = 0 * inf = 0          (IEEE would give nan)
    inf - a = inf   for finite a
    a + inf = inf,  a - inf = -inf for finite a
    inf + (-inf)                   -> error (undefined, never silently nan)

``min``/``max`` on floats already realize the lattice operations (a ^ inf = a,
a v inf = inf), so no wrapper is needed for those.  NaN is rejected at every
entry point.

The module-level functions (`xmul`, `xadd`, `xsub`, ...) operate on plain
floats and are the single source of truth for the rules; `ExtReal` is a float
subclass whose operators delegate to them, used at API boundaries where a
tagged value type is wanted.
"""

from __future__ import annotations

import math
from typing import Union

Real = Union[int, float]

INF = math.inf
NEG_INF = -math.inf


def as_ext(x: Real) -> float:
    """Validate a number as an extended real (nan is rejected)."""
    v = float(x)
    if math.isnan(v):
        raise ValueError("nan is not an extended real")
    return v


def as_nonneg(x: Real) -> float:
    """Validate a number as a value in [0, inf]."""
    v = as_ext(x)
    if v < 0.0:
        raise ValueError(f"expected a value in [0, inf], got {v}")
    return v


def xmul(a: float, b: float) -> float:
    """Product under the convention inf * 0 = 0."""
    if a == 0.0 or b == 0.0:
        return 0.0
    return a * b


def xadd(a: float, b: float) -> float:
    """Sum; inf + (-inf) is undefined and raises."""
    if math.isinf(a) and math.isinf(b) and (a > 0) != (b > 0):
        raise ArithmeticError("inf + (-inf) is undefined")
    return a + b


def xsub(a: float, b: float) -> float:
    """Difference a - b; inf - inf (same sign) is undefined and raises."""
    return xadd(a, -b)


def pos_part(a: float) -> float:
    """a v 0."""
    return a if a > 0.0 else 0.0


def sign(a: float) -> float:
    """Sign in {-1.0, 0.0, 1.0}; sign(0) = 0."""
    if a > 0.0:
        return 1.0
    if a < 0.0:
        return -1.0
    return 0.0


def symmetric_max(a: float, b: float) -> float:
    """sign(a + b) * (|a| v |b|); equal magnitudes of opposite sign give 0."""
    s = sign(xadd(a, b)) if not (math.isinf(a) and math.isinf(b) and (a > 0) != (b > 0)) else 0.0
    return xmul(s, max(abs(a), abs(b)))


class ExtReal(float):
    """A tagged extended-real value: a finite 64-bit float or +/-inf.

    Arithmetic goes through the convention rules above instead of raw IEEE
    semantics, so ``ExtReal(math.inf) * 0 == 0``.  Being a float subclass, it
    orders, hashes, and serializes like a number.
    """

    __slots__ = ()

    def __new__(cls, value: Real = 0.0) -> "ExtReal":
        return super().__new__(cls, as_ext(value))

    @property
    def is_inf(self) -> bool:
        return math.isinf(self)

    @property
    def finite(self) -> bool:
        return math.isfinite(self)

    def __mul__(self, other: Real) -> "ExtReal":
        return ExtReal(xmul(float(self), as_ext(other)))

    __rmul__ = __mul__

    def __add__(self, other: Real) -> "ExtReal":
        return ExtReal(xadd(float(self), as_ext(other)))

    __radd__ = __add__

    def __sub__(self, other: Real) -> "ExtReal":
        return ExtReal(xsub(float(self), as_ext(other)))

    def __rsub__(self, other: Real) -> "ExtReal":
        return ExtReal(xsub(as_ext(other), float(self)))

    def __neg__(self) -> "ExtReal":
        return ExtReal(-float(self))

    def __abs__(self) -> "ExtReal":
        return ExtReal(abs(float(self)))

    def sign(self) -> float:
        return sign(float(self))

    def pos_part(self) -> "ExtReal":
        return ExtReal(pos_part(float(self)))

    def __repr__(self) -> str:
        return f"ExtReal({float(self)!r})"


def parse_number(x) -> float:
    """Parse a JSON-side number: a float/int, or the strings 'inf'/'-inf'."""
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "+inf", "infinity"):
            return INF
        if s in ("-inf", "-infinity"):
            return NEG_INF
        raise ValueError(f"cannot parse {x!r} as an extended real")
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ValueError(f"cannot parse {x!r} as an extended real")
    return as_ext(x)


def format_number(v: float):
    """Format an extended real for JSON: floats stay floats, infinities become strings."""
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return float(v)
