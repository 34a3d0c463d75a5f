"""Piecewise closed-form transforms with exact one-sided limits and extrema.

A ``PiecewiseMap`` is a total function on an interval extent, stored as open
pieces (lo, hi) carrying a monotone closed-form expression, plus explicit
values ("knots") at every finite piece boundary.  Because each piece's
expression is continuous and monotone on its closed span, one-sided limits and
interval infima/suprema reduce to endpoint evaluations, which makes them exact
up to float rounding.  Jumps live only at knots, where the stored value may
differ from either adjacent limit.

Expressions all take the shape  d + c * (a + b * x**g) ** e  which covers the
constructors exposed on the wire (const / affine / quad / power / affpow).
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import HypothesisError, InputError
from .extreal import INF, as_ext, parse_number
from .measures import SurvivalProfile

_MONO = ("inc", "dec", "const")
_EQ_TOL = 1e-12


def _pow(base: float, e: float) -> float:
    if e == 1.0:
        return base
    if base < 0.0:
        if e == round(e):
            return math.inf if (math.isinf(base) and e > 0) else base ** int(e)
        raise InputError(f"negative base {base} with non-integer exponent {e}")
    if base == 0.0 and e < 0.0:
        return math.inf
    try:
        return math.pow(base, e)
    except OverflowError:
        return math.inf


@dataclass(frozen=True)
class Expr:
    """Closed form d + c * (a + b * x**g) ** e with g > 0."""

    d: float = 0.0
    c: float = 0.0
    a: float = 0.0
    b: float = 0.0
    g: float = 1.0
    e: float = 1.0

    def __post_init__(self):
        for name in ("d", "c", "a", "b", "g", "e"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or math.isnan(v) or math.isinf(v):
                raise InputError(f"expression parameter {name}={v!r} must be finite")
        if self.g <= 0:
            raise InputError("inner exponent g must be positive")

    def __call__(self, x: float) -> float:
        if self.c == 0.0:
            return self.d
        if math.isinf(x):
            return self.limit_at(x)
        base = self.a + self.b * _pow(x, self.g)
        return self.d + self.c * _pow(base, self.e)

    def limit_at(self, x: float) -> float:
        """Value/limit at +-inf (and plain evaluation at finite x)."""
        if not math.isinf(x):
            return self(x)
        if self.c == 0.0 or self.b == 0.0:
            return self(0.0) if self.b == 0.0 and self.c != 0.0 else self.d
        if x < 0 and self.g != round(self.g):
            raise InputError("expression undefined toward -inf")
        inner = math.inf if x > 0 else (math.inf if self.g == round(self.g) and int(self.g) % 2 == 0 else -math.inf)
        base = inner * (1.0 if self.b > 0 else -1.0)
        val = _pow(base, self.e) if self.e != 0 else 1.0
        if val == 0.0:
            return self.d
        return self.d + self.c * val

    def deriv(self, x: float) -> float:
        if self.c == 0.0:
            return 0.0
        base = self.a + self.b * _pow(x, self.g)
        outer = _pow(base, self.e - 1.0) if self.e != 1.0 else 1.0
        inner = _pow(x, self.g - 1.0) if self.g != 1.0 else 1.0
        return self.c * self.e * outer * self.b * self.g * inner

    def reflect_negate(self) -> "Expr":
        """The expression x -> -self(-x); requires an integer inner exponent."""
        if self.b != 0.0 and self.c != 0.0 and self.g != round(self.g):
            raise InputError("cannot reflect a fractional power across 0")
        sgn = 1.0 if (self.b == 0.0 or int(self.g) % 2 == 0) else -1.0
        return Expr(-self.d, -self.c, self.a, self.b * sgn, self.g, self.e)

    def scale_input(self, s: float) -> "Expr":
        """The expression x -> self(x / s) for s > 0."""
        if s <= 0 or math.isinf(s):
            raise InputError("input scale must be positive and finite")
        return Expr(self.d, self.c, self.a, self.b / _pow(s, self.g), self.g, self.e)

    # -- wire constructors ------------------------------------------------------

    @staticmethod
    def const(v: float) -> "Expr":
        return Expr(d=as_ext(v) if math.isfinite(v) else _reject_inf(v))

    @staticmethod
    def affine(a0: float, a1: float) -> "Expr":
        return Expr(d=a0, c=a1, a=0.0, b=1.0, g=1.0, e=1.0) if a1 != 0.0 else Expr(d=a0)

    @staticmethod
    def power(coef: float, e: float) -> "Expr":
        if e <= 0:
            raise InputError("power kind requires a positive exponent")
        return Expr(d=0.0, c=coef, a=0.0, b=1.0, g=e, e=1.0)

    @staticmethod
    def quad(a: float, b: float, c: float) -> "Expr":
        if a == 0.0:
            return Expr.affine(c, b)
        # completed square: a*(x + b/(2a))**2 + (c - b**2/(4a))
        return Expr(d=c - b * b / (4.0 * a), c=a, a=b / (2.0 * a), b=1.0, g=1.0, e=2.0)

    @staticmethod
    def from_kind(kind: str, params: Sequence[float]) -> "Expr":
        p = [float(v) for v in params]
        try:
            if kind == "const":
                (v,) = p
                return Expr.const(v)
            if kind == "affine":
                a0, a1 = p
                return Expr.affine(a0, a1)
            if kind == "power":
                coef, e = p
                return Expr.power(coef, e)
            if kind == "quad":
                a, b, c = p
                return Expr.quad(a, b, c)
            if kind == "affpow":
                d, c, a, b, g, e = p
                return Expr(d, c, a, b, g, e)
        except ValueError as exc:
            raise InputError(f"wrong parameter count for kind {kind!r}: {params!r}") from exc
        raise InputError(f"unknown expression kind {kind!r}")


def _reject_inf(v: float) -> float:
    raise InputError(f"expression parameters must be finite, got {v!r}")


@dataclass(frozen=True)
class Piece:
    """Open interval (lo, hi) with a monotone expression on its closure."""

    lo: float
    hi: float
    expr: Expr
    mono: str

    def value_at_lo(self) -> float:
        return self.expr.limit_at(self.lo)

    def value_at_hi(self) -> float:
        return self.expr.limit_at(self.hi)


@dataclass(frozen=True)
class OneSidedLimits:
    """Lower/upper one-sided limits of H at a point.

    Pieces are continuous, so the lower and upper limit from a given side
    coincide; both fields are kept for interface completeness.
    """

    lower_left: float
    lower_right: float
    upper_left: float
    upper_right: float


@dataclass(frozen=True)
class SupportLine:
    """A line through (p, H(p)) with slope m dominating H: H(y) <= H(p) + m*(y-p)."""

    p: float
    slope: float
    value: float


class PiecewiseMap:
    """A total piecewise closed-form function on an interval extent."""

    __slots__ = ("pieces", "knots", "_knot_xs", "_piece_los", "xlo", "xhi", "signed")

    def __init__(self, pieces: Sequence[Piece], knots: Dict[float, float], signed: bool = False):
        if not pieces and not knots:
            raise InputError("a piecewise map needs at least one piece or knot")
        self.pieces: Tuple[Piece, ...] = tuple(pieces)
        self.knots: Dict[float, float] = dict(knots)
        self._knot_xs: Tuple[float, ...] = tuple(sorted(self.knots))
        self._piece_los: Tuple[float, ...] = tuple(p.lo for p in self.pieces)
        xs = list(self._knot_xs)
        if self.pieces:
            xs.append(self.pieces[0].lo)
            xs.append(self.pieces[-1].hi)
        self.xlo: float = min(xs)
        self.xhi: float = max(xs)
        self.signed = signed or self.xlo < 0.0

    # -- construction ------------------------------------------------------------

    @classmethod
    def from_segments(
        cls,
        segments: Sequence[Tuple[float, float, Expr, str]],
        signed: bool = False,
        validate: bool = True,
    ) -> "PiecewiseMap":
        """Build from ordered half-open segments [lo, hi) (the last one closed).

        A segment owns its left endpoint; a singleton segment (lo == hi)
        contributes only that point, and the following segment then starts
        open.  The final finite endpoint gets its segment's limit value.
        """
        if not segments:
            raise InputError("segment list is empty")
        pieces: List[Piece] = []
        knots: Dict[float, float] = {}
        prev_hi: Optional[float] = None
        for lo, hi, expr, mono in segments:
            lo, hi = as_ext(lo), as_ext(hi)
            if mono not in _MONO:
                raise InputError(f"unknown monotonicity label {mono!r}")
            if hi < lo:
                raise InputError(f"segment [{lo}, {hi}) is reversed")
            if prev_hi is not None and lo != prev_hi:
                raise InputError(f"segments must tile the domain; gap/overlap at {lo}")
            if lo == hi:
                if math.isinf(lo):
                    raise InputError("singleton segment at infinity")
                if lo in knots:
                    raise InputError(f"duplicate singleton at {lo}")
                knots[lo] = expr.limit_at(lo)
            else:
                if math.isfinite(lo) and lo not in knots:
                    knots[lo] = expr.limit_at(lo)
                pieces.append(Piece(lo, hi, expr, mono))
            prev_hi = hi
        if prev_hi is not None and math.isfinite(prev_hi) and prev_hi not in knots:
            knots[prev_hi] = pieces[-1].value_at_hi() if pieces else 0.0
        pm = cls(pieces, knots, signed=signed)
        if validate:
            pm._validate_monotone()
        return pm

    def _validate_monotone(self, samples: int = 256):
        """Sampled falsifier of each piece's declared direction (never a certificate)."""
        for piece in self.pieces:
            lo = piece.lo if math.isfinite(piece.lo) else min(piece.hi, 0.0) - 64.0
            hi = piece.hi if math.isfinite(piece.hi) else max(piece.lo, 0.0) + 64.0
            if hi <= lo:
                continue
            step = (hi - lo) / samples
            prev = piece.expr(lo)
            for i in range(1, samples + 1):
                cur = piece.expr(lo + i * step)
                if piece.mono == "inc" and cur < prev - _EQ_TOL:
                    raise InputError(f"segment ({piece.lo}, {piece.hi}) declared 'inc' but decreases")
                if piece.mono == "dec" and cur > prev + _EQ_TOL:
                    raise InputError(f"segment ({piece.lo}, {piece.hi}) declared 'dec' but increases")
                if piece.mono == "const" and abs(cur - prev) > _EQ_TOL:
                    raise InputError(f"segment ({piece.lo}, {piece.hi}) declared 'const' but varies")
                prev = cur

    @classmethod
    def from_json(cls, data: dict, validate: bool = True) -> "PiecewiseMap":
        try:
            segs = data["segments"]
            domain = data.get("domain", "nonneg")
        except (TypeError, KeyError) as exc:
            raise InputError(f"malformed transform spec: {exc}") from exc
        if domain not in ("nonneg", "real"):
            raise InputError(f"unknown domain kind {domain!r}")
        parsed = []
        for s in segs:
            try:
                lo = parse_number(s["lo"])
                hi = parse_number(s["hi"])
                expr = Expr.from_kind(s["kind"], s["params"])
                mono = s["mono"]
            except (TypeError, KeyError, ValueError) as exc:
                raise InputError(f"malformed segment {s!r}: {exc}") from exc
            parsed.append((lo, hi, expr, mono))
        pm = cls.from_segments(parsed, signed=(domain == "real"), validate=validate)
        if not pm.signed and pm.xlo < 0:
            raise InputError("nonneg-domain transform has negative support")
        return pm

    def _reparsed_knot_value(self, x: float) -> Optional[float]:
        """The value a plain segment re-parse would assign at x."""
        for p in self.pieces:
            if p.lo == x:
                return p.expr.limit_at(x)
        for p in reversed(self.pieces):
            if p.hi == x:
                return p.expr.limit_at(x)
        return None

    def to_json(self) -> dict:
        segs = []
        for x in self._knot_xs:
            # knots whose value a re-parse would not reproduce become singletons
            if self._reparsed_knot_value(x) != self.knots[x]:
                segs.append({"lo": x, "hi": x, "kind": "const", "params": [self.knots[x]], "mono": "const"})
        for p in self.pieces:
            e = p.expr
            segs.append(
                {
                    "lo": format_x(p.lo),
                    "hi": format_x(p.hi),
                    "kind": "affpow",
                    "params": [e.d, e.c, e.a, e.b, e.g, e.e],
                    "mono": p.mono,
                }
            )
        segs.sort(key=lambda s: (parse_number(s["lo"]), parse_number(s["hi"])))
        return {"segments": segs, "domain": "real" if self.signed else "nonneg"}

    # -- evaluation ---------------------------------------------------------------

    def _piece_at(self, x: float) -> Optional[Piece]:
        i = bisect_right(self._piece_los, x) - 1
        if 0 <= i < len(self.pieces):
            p = self.pieces[i]
            if p.lo < x < p.hi:
                return p
        return None

    def eval(self, x) -> float:
        x = as_ext(x)
        if x < self.xlo or x > self.xhi:
            raise InputError(f"{x} outside the transform domain [{self.xlo}, {self.xhi}]")
        hit = self.knots.get(x)
        if hit is not None:
            return hit
        if math.isinf(x):
            p = self.pieces[-1] if x > 0 else self.pieces[0]
            return p.expr.limit_at(x)
        p = self._piece_at(x)
        if p is None:
            raise InputError(f"no piece covers {x}")
        return p.expr(x)

    def __call__(self, x) -> float:
        return self.eval(x)

    def _left_piece(self, x: float) -> Optional[Piece]:
        for p in reversed(self.pieces):
            if p.hi <= x and p.lo < x:
                return p
            if p.lo < x < p.hi:
                return p
        return None

    def _right_piece(self, x: float) -> Optional[Piece]:
        for p in self.pieces:
            if p.lo >= x and p.hi > x:
                return p
            if p.lo < x < p.hi:
                return p
        return None

    def one_sided(self, p) -> OneSidedLimits:
        """One-sided lower/upper limits at p; the left limits at the domain
        origin are 0 by convention."""
        p = as_ext(p)
        if p < self.xlo or p > self.xhi:
            raise InputError(f"{p} outside the transform domain")
        if p == self.xlo:
            left = 0.0 if not self.signed else self.eval(p)
        else:
            lp = self._left_piece(p)
            left = lp.expr.limit_at(p) if lp is not None else self.eval(p)
        if p == self.xhi:
            right = self.eval(p)
        else:
            rp = self._right_piece(p)
            right = rp.expr.limit_at(p) if rp is not None else self.eval(p)
        return OneSidedLimits(left, right, left, right)

    def interval_extrema(self, lo, hi) -> Tuple[float, float]:
        """Exact (inf, sup) of the map over [lo, hi] intersected with the extent."""
        lo, hi = as_ext(lo), as_ext(hi)
        if hi < lo:
            raise InputError(f"reversed interval [{lo}, {hi}]")
        qlo, qhi = max(lo, self.xlo), min(hi, self.xhi)
        if qlo > qhi:
            raise InputError(f"interval [{lo}, {hi}] does not meet the domain [{self.xlo}, {self.xhi}]")
        cands: List[float] = []
        for x in self._knot_xs:
            if qlo <= x <= qhi:
                cands.append(self.knots[x])
        for piece in self.pieces:
            ol, oh = max(piece.lo, qlo), min(piece.hi, qhi)
            if ol < oh:
                cands.append(piece.expr.limit_at(ol))
                cands.append(piece.expr.limit_at(oh))
        if not cands:
            cands.append(self.eval(qlo))
        return (min(cands), max(cands))

    def global_extrema(self) -> Tuple[float, float]:
        return self.interval_extrema(self.xlo, self.xhi)

    def extrema_candidates(self) -> List[Tuple[float, float]]:
        """(x, value) pairs where interval extrema can be attained: all knots."""
        return [(x, self.knots[x]) for x in self._knot_xs]

    # -- structure ------------------------------------------------------------------

    def is_continuous(self, tol: float = _EQ_TOL) -> bool:
        for x in self._knot_xs:
            v = self.knots[x]
            lp = self._left_piece(x)
            if lp is not None and abs(lp.expr.limit_at(x) - v) > tol:
                return False
            rp = self._right_piece(x)
            if rp is not None and abs(rp.expr.limit_at(x) - v) > tol:
                return False
        return True

    def _events(self) -> List[Tuple[float, str]]:
        """Ordered direction labels: pieces ('inc'/'dec'/'const') and knot jumps."""
        events: List[Tuple[float, str]] = []
        for x in self._knot_xs:
            v = self.knots[x]
            lp = self._left_piece(x)
            if lp is not None:
                lv = lp.expr.limit_at(x)
                if abs(lv - v) > _EQ_TOL:
                    events.append((x, "inc" if v > lv else "dec"))
            rp = self._right_piece(x)
            if rp is not None:
                rv = rp.expr.limit_at(x)
                if abs(rv - v) > _EQ_TOL:
                    events.append((x, "inc" if rv > v else "dec"))
        for p in self.pieces:
            if p.mono != "const":
                events.append((p.lo, p.mono))
        events.sort(key=lambda t: t[0])
        return events

    def is_nondecreasing(self) -> bool:
        return all(d != "dec" for _, d in self._events())

    def is_nonincreasing(self) -> bool:
        return all(d != "inc" for _, d in self._events())

    def valley_pivot(self) -> Optional[float]:
        """If the map is nonincreasing then nondecreasing, the switch point.

        Returns the location where the nondecreasing part starts (xlo if the
        map never decreases, xhi if it never increases); None if not valley-shaped.
        """
        events = self._events()
        first_inc = None
        for x, d in events:
            if d == "inc" and first_inc is None:
                first_inc = x
            if d == "dec" and first_inc is not None:
                return None
        if first_inc is None:
            return self.xhi
        return first_inc if any(d == "dec" for _, d in events) else self.xlo

    def peak_pivot(self) -> Optional[float]:
        """Dual of valley_pivot: nondecreasing then nonincreasing."""
        events = self._events()
        first_dec = None
        for x, d in events:
            if d == "dec" and first_dec is None:
                first_dec = x
            if d == "inc" and first_dec is not None:
                return None
        if first_dec is None:
            return self.xhi
        return first_dec if any(d == "inc" for _, d in events) else self.xlo

    def _sample_xs(self, count: int = 257) -> List[float]:
        lo = self.xlo if math.isfinite(self.xlo) else -64.0
        hi = self.xhi if math.isfinite(self.xhi) else max(lo, 0.0) + 64.0
        xs = [lo + (hi - lo) * i / count for i in range(count + 1)]
        xs.extend(x for x in self._knot_xs if lo <= x <= hi)
        return sorted(set(xs))

    def is_convex_sampled(self) -> bool:
        """Midpoint-convexity falsifier on a sample grid (requires continuity)."""
        if not self.is_continuous():
            return False
        xs = self._sample_xs()
        vals = [self.eval(x) for x in xs]
        for i in range(len(xs) - 2):
            x0, x2 = xs[i], xs[i + 2]
            if x2 - x0 <= 0:
                continue
            lam = (xs[i + 1] - x0) / (x2 - x0)
            if vals[i + 1] > (1 - lam) * vals[i] + lam * vals[i + 2] + 1e-9:
                return False
        return True

    def is_concave_sampled(self) -> bool:
        if not self.is_continuous():
            return False
        xs = self._sample_xs()
        vals = [self.eval(x) for x in xs]
        for i in range(len(xs) - 2):
            x0, x2 = xs[i], xs[i + 2]
            if x2 - x0 <= 0:
                continue
            lam = (xs[i + 1] - x0) / (x2 - x0)
            if vals[i + 1] < (1 - lam) * vals[i] + lam * vals[i + 2] - 1e-9:
                return False
        return True

    # -- support lines -----------------------------------------------------------------

    def one_sided_derivatives(self, p: float) -> Tuple[Optional[float], Optional[float]]:
        p = as_ext(p)
        lp = self._left_piece(p)
        rp = self._right_piece(p)
        dl = lp.expr.deriv(p) if lp is not None else None
        dr = rp.expr.deriv(p) if rp is not None else None
        return (dl, dr)

    def support_slope(self, p: float, override: Optional[float] = None, grid: int = 1024) -> SupportLine:
        """A slope m with H(y) <= H(p) + m*(y-p), from one-sided derivatives.

        When the subdifferential is an interval the midpoint of the one-sided
        derivatives is used unless ``override`` is given.  The support
        inequality is verified on a sample grid and violations raise.
        """
        p = as_ext(p)
        hp = self.eval(p)
        if override is not None:
            m = float(override)
        else:
            dl, dr = self.one_sided_derivatives(p)
            cands = [d for d in (dl, dr) if d is not None and math.isfinite(d)]
            if not cands:
                raise HypothesisError(f"no finite one-sided derivative at {p}")
            m = sum(cands) / len(cands)
        for y in self._sample_xs(grid):
            bound = hp + m * (y - p)
            if self.eval(y) > bound + 1e-9:
                raise HypothesisError(f"not concave at {p}: support line fails at y={y}")
        return SupportLine(p, m, hp)

    # -- derived maps ----------------------------------------------------------------------

    def split_at(self, x0: float) -> "PiecewiseMap":
        """Insert a knot at x0 (splitting the covering piece); no-op if present."""
        x0 = as_ext(x0)
        if x0 in self.knots:
            return self
        piece = self._piece_at(x0)
        if piece is None:
            raise InputError(f"{x0} is not interior to any piece")
        new_pieces: List[Piece] = []
        for p in self.pieces:
            if p is piece:
                new_pieces.append(Piece(p.lo, x0, p.expr, p.mono))
                new_pieces.append(Piece(x0, p.hi, p.expr, p.mono))
            else:
                new_pieces.append(p)
        knots = dict(self.knots)
        knots[x0] = piece.expr(x0)
        return PiecewiseMap(new_pieces, knots, signed=self.signed)

    def restrict_nonneg(self) -> "PiecewiseMap":
        """The restriction to [0, xhi] as a nonneg-domain map."""
        if self.xlo > 0:
            raise InputError("domain does not contain 0")
        src = self.split_at(0.0) if self.xlo < 0 else self
        pieces = [p for p in src.pieces if p.lo >= 0.0]
        knots = {x: v for x, v in src.knots.items() if x >= 0.0}
        return PiecewiseMap(pieces, knots, signed=False)

    def reflect_negate_nonpos(self) -> "PiecewiseMap":
        """x -> -H(-x) for x >= 0, built from the nonpositive part of H."""
        if self.xlo >= 0:
            raise InputError("no nonpositive part to reflect")
        src = self.split_at(0.0) if self.xhi > 0 else self
        pieces = [
            Piece(-p.hi, -p.lo, p.expr.reflect_negate(), p.mono)
            for p in src.pieces
            if p.hi <= 0.0
        ]
        pieces.sort(key=lambda p: p.lo)
        knots = {-x: -v for x, v in src.knots.items() if x <= 0.0}
        return PiecewiseMap(pieces, knots, signed=False)

    def scale_input(self, s: float) -> "PiecewiseMap":
        """The map x -> H(x / s) for s > 0 (support stretches by s)."""
        if s <= 0:
            raise InputError("input scale must be positive")
        pieces = [Piece(p.lo * s, p.hi * s, p.expr.scale_input(s), p.mono) for p in self.pieces]
        knots = {x * s: v for x, v in self.knots.items()}
        return PiecewiseMap(pieces, knots, signed=self.signed)

    def compose_values(self, xs: Iterable[float]) -> Tuple[float, ...]:
        return tuple(self.eval(x) for x in xs)

    # -- profile view -------------------------------------------------------------------------

    def as_profile(self, lipschitz: Optional[float] = None) -> SurvivalProfile:
        """View a nonincreasing nonneg-domain map as a survival profile.

        Beyond the extent the profile is 0; the profile's threshold T is the
        extent top (which must be finite or the map must reach 0).
        """
        if self.signed:
            raise InputError("profiles live on [0, inf)")
        if not self.is_nonincreasing():
            raise InputError("a survival profile must be nonincreasing")
        upper = self.xhi
        if math.isinf(upper):
            raise InputError("profile needs a finite upper threshold")

        def evaluate(t: float, _pm=self, _hi=upper) -> float:
            if t > _hi:
                return 0.0
            return _pm.eval(t)

        return SurvivalProfile(
            evaluate=evaluate,
            upper=upper,
            breakpoints=tuple(self._knot_xs),
            lipschitz=lipschitz,
        )


def format_x(x: float):
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


# -- common constructors ----------------------------------------------------------------


def const_map(v: float, lo: float = 0.0, hi: float = INF) -> PiecewiseMap:
    return PiecewiseMap.from_segments([(lo, hi, Expr.const(v), "const")], signed=lo < 0, validate=False)


def affine_map(a0: float, a1: float, lo: float = 0.0, hi: float = INF) -> PiecewiseMap:
    mono = "inc" if a1 > 0 else ("dec" if a1 < 0 else "const")
    return PiecewiseMap.from_segments([(lo, hi, Expr.affine(a0, a1), mono)], signed=lo < 0, validate=False)


def identity_map(lo: float = 0.0, hi: float = INF) -> PiecewiseMap:
    return affine_map(0.0, 1.0, lo, hi)


def power_map(coef: float, e: float, lo: float = 0.0, hi: float = INF) -> PiecewiseMap:
    if lo < 0:
        raise InputError("power maps live on [0, inf)")
    mono = "inc" if coef > 0 else ("dec" if coef < 0 else "const")
    return PiecewiseMap.from_segments([(lo, hi, Expr.power(coef, e), mono)], validate=False)


def quad_map(a: float, b: float, c: float, lo: float = 0.0, hi: float = INF) -> PiecewiseMap:
    """Quadratic on [lo, hi], split automatically at its vertex."""
    expr = Expr.quad(a, b, c)
    if a == 0.0:
        return affine_map(c, b, lo, hi)
    vertex = -b / (2.0 * a)
    left_mono = "dec" if a > 0 else "inc"
    right_mono = "inc" if a > 0 else "dec"
    if lo < vertex < hi:
        segs = [(lo, vertex, expr, left_mono), (vertex, hi, expr, right_mono)]
    elif vertex <= lo:
        segs = [(lo, hi, expr, right_mono)]
    else:
        segs = [(lo, hi, expr, left_mono)]
    return PiecewiseMap.from_segments(segs, signed=lo < 0, validate=False)
