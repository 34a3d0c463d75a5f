"""Finite ground spaces, monotone measures, and level-set (survival) evaluation.

Subsets of a finite space are encoded as bitmasks; the element-count cap keeps
full powerset enumeration affordable for validation and property checks.
Interval-mode measures (Lebesgue-type families) are never enumerated: they
only supply closed-form survival values for profile-based integration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import InputError, NotEnumerableError
from .extreal import ExtReal, as_ext, as_nonneg

MAX_ELEMENTS = 24

Mask = int


class FiniteSpace:
    """A ground set of n elements, indexed 0..n-1; subsets are bitmasks."""

    __slots__ = ("n", "full")

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1 or n > MAX_ELEMENTS:
            raise InputError(f"space size must be an integer in [1, {MAX_ELEMENTS}], got {n!r}")
        self.n = n
        self.full: Mask = (1 << n) - 1

    def mask_of(self, indices: Iterable[int]) -> Mask:
        m = 0
        for i in indices:
            if not isinstance(i, int) or i < 0 or i >= self.n:
                raise InputError(f"element index {i!r} outside 0..{self.n - 1}")
            m |= 1 << i
        return m

    def indices_of(self, mask: Mask) -> Tuple[int, ...]:
        self.check_mask(mask)
        return tuple(i for i in range(self.n) if mask >> i & 1)

    def check_mask(self, mask: Mask) -> Mask:
        if not isinstance(mask, int) or mask < 0 or mask > self.full:
            raise InputError(f"malformed subset mask {mask!r} for n={self.n}")
        return mask

    def subsets(self) -> Iterator[Mask]:
        return iter(range(self.full + 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteSpace) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("FiniteSpace", self.n))

    def __repr__(self) -> str:
        return f"FiniteSpace({self.n})"


def iter_bits(mask: Mask) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class MonotonicityReport:
    """Outcome of a monotone-measure validation run."""

    valid: bool
    empty_set_ok: bool
    violations: Tuple[Tuple[Mask, Mask], ...]  # covering pairs (A, B), A ⊂ B, mu(A) > mu(B)


class MonotoneMeasure:
    """A set function on subsets of a finite space with mu(empty) = 0.

    Storage may be sparse.  Lookup of an absent subset is an error in
    ``strict`` mode; in ``closure`` mode it resolves to the monotone lower
    closure max{mu(C) : stored C ⊆ B}, which is monotone by construction.
    Values are nonnegative extended reals (inf allowed).
    """

    __slots__ = ("space", "mode", "_stored", "_table")

    def __init__(self, space: FiniteSpace, values: Dict[Mask, float], mode: str = "strict"):
        if mode not in ("strict", "closure"):
            raise InputError(f"unknown measure mode {mode!r}")
        self.space = space
        self.mode = mode
        stored: Dict[Mask, float] = {}
        for mask, raw in values.items():
            space.check_mask(mask)
            try:
                stored[mask] = as_nonneg(raw)
            except ValueError as exc:
                raise InputError(f"measure value for mask {mask}: {exc}") from exc
        if stored.get(0, 0.0) != 0.0:
            raise InputError("mu(empty set) must be 0")
        stored.setdefault(0, 0.0)
        self._stored = stored
        # Dense fast-path table when every subset is present; closure mode
        # always resolves through the max rule so stray stored values cannot
        # break monotonicity.
        if mode == "strict" and len(stored) == space.full + 1:
            self._table: Optional[List[float]] = [stored[m] for m in range(space.full + 1)]
        else:
            self._table = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_full_table(cls, space: FiniteSpace, table: Sequence[float], mode: str = "strict") -> "MonotoneMeasure":
        if len(table) != space.full + 1:
            raise InputError("full table must list one value per subset")
        return cls(space, {m: table[m] for m in range(space.full + 1)}, mode)

    @classmethod
    def counting(cls, space: FiniteSpace) -> "MonotoneMeasure":
        return cls(space, {m: float(bin(m).count("1")) for m in range(space.full + 1)})

    @classmethod
    def additive(cls, space: FiniteSpace, weights: Sequence[float]) -> "MonotoneMeasure":
        if len(weights) != space.n:
            raise InputError("one weight per element required")
        w = [as_nonneg(x) for x in weights]
        table = [0.0] * (space.full + 1)
        for m in range(1, space.full + 1):
            low = m & (m - 1)
            table[m] = table[low] + w[(m ^ low).bit_length() - 1]
        return cls.from_full_table(space, table)

    @classmethod
    def distorted_additive(cls, space: FiniteSpace, weights: Sequence[float], exponent: float) -> "MonotoneMeasure":
        """Concave (exponent < 1) or convex (exponent > 1) distortion of an additive base."""
        base = cls.additive(space, weights)
        assert base._table is not None
        return cls.from_full_table(space, [v**exponent for v in base._table])

    # -- evaluation ------------------------------------------------------------

    def mask_value(self, mask: Mask) -> float:
        """Raw float value (inf allowed).

        Strict mode returns stored values and errors on gaps.  Closure mode
        resolves every lookup as max{stored(C) : C ⊆ mask}, the monotone
        lower closure, which is monotone whatever was stored.
        """
        table = self._table
        if table is not None:
            return table[mask]
        stored = self._stored
        if self.mode == "strict":
            hit = stored.get(mask)
            if hit is None:
                raise InputError(f"no stored value for subset mask {mask} in strict mode")
            return hit
        best = 0.0
        for c, v in stored.items():
            if c & mask == c and v > best:
                best = v
        return best

    def value_of(self, subset) -> ExtReal:
        """Public lookup; ``subset`` is a bitmask or an iterable of indices."""
        mask = subset if isinstance(subset, int) else self.space.mask_of(subset)
        self.space.check_mask(mask)
        return ExtReal(self.mask_value(mask))

    def total(self) -> float:
        return self.mask_value(self.space.full)

    def densify(self) -> "MonotoneMeasure":
        """Materialize every subset (resolving closure) for fast repeated lookup."""
        if self._table is not None:
            return self
        table = [self.mask_value(m) for m in range(self.space.full + 1)]
        return MonotoneMeasure.from_full_table(self.space, table, mode="strict")

    # -- validation -------------------------------------------------------------

    def validate_monotone(self, max_violations: int = 64) -> MonotonicityReport:
        """Check mu(empty)=0 and monotonicity under inclusion by full enumeration.

        Violating pairs are reported as single-element covers (A, A v {i});
        a monotonicity failure exists iff a covering failure exists.
        """
        space = self.space
        violations: List[Tuple[Mask, Mask]] = []
        empty_ok = self.mask_value(0) == 0.0
        for b in range(1, space.full + 1):
            vb = self.mask_value(b)
            m = b
            while m:
                bit = m & (-m)
                a = b ^ bit
                if self.mask_value(a) > vb:
                    violations.append((a, b))
                    if len(violations) >= max_violations:
                        return MonotonicityReport(False, empty_ok, tuple(violations))
                m ^= bit
        return MonotonicityReport(empty_ok and not violations, empty_ok, tuple(violations))


def level_mask(f: Sequence[float], A: Mask, t: float) -> Mask:
    """Bitmask of A ∩ {x : f(x) >= t}."""
    m = 0
    i = 0
    a = A
    while a:
        if a & 1 and f[i] >= t:
            m |= 1 << i
        a >>= 1
        i += 1
    return m


def survival(measure: MonotoneMeasure, A: Mask, f: Sequence[float], t) -> ExtReal:
    """mu(A ∩ {f >= t}); nonincreasing in t."""
    measure.space.check_mask(A)
    if len(f) != measure.space.n:
        raise InputError("function length must equal the space size")
    return ExtReal(measure.mask_value(level_mask(f, A, as_ext(t))))


def check_function(space: FiniteSpace, f: Sequence[float], nonneg: bool = True) -> Tuple[float, ...]:
    """Validate a per-element function; returns it as a float tuple."""
    if len(f) != space.n:
        raise InputError(f"function must have {space.n} values, got {len(f)}")
    if nonneg:
        return tuple(as_nonneg(v) for v in f)
    return tuple(as_ext(v) for v in f)


# -- measure-property predicates -------------------------------------------------

_PRED_TOL = 1e-12  # absorbs float noise from distorted constructions


@dataclass(frozen=True)
class PredicateResult:
    holds: bool
    witness: Optional[Tuple[Mask, ...]] = None  # violating subset(s), if any

    def __bool__(self) -> bool:
        return self.holds


def is_weakly_subadditive(measure: MonotoneMeasure, A: Mask) -> PredicateResult:
    """mu(A) <= mu(A ∩ B) + mu(A ∩ B^c) for every B (checked over the powerset)."""
    space = measure.space
    space.check_mask(A)
    mu_a = measure.mask_value(A)
    comp = space.full
    for b in range(comp + 1):
        if measure.mask_value(A & b) + measure.mask_value(A & ~b & comp) < mu_a - _PRED_TOL:
            return PredicateResult(False, (b,))
    return PredicateResult(True)


def is_weakly_superadditive(measure: MonotoneMeasure, A: Mask) -> PredicateResult:
    """mu(A) >= mu(A ∩ B) + mu(A ∩ B^c) for every B."""
    space = measure.space
    space.check_mask(A)
    mu_a = measure.mask_value(A)
    comp = space.full
    for b in range(comp + 1):
        if measure.mask_value(A & b) + measure.mask_value(A & ~b & comp) > mu_a + _PRED_TOL:
            return PredicateResult(False, (b,))
    return PredicateResult(True)


def _iter_disjoint_pairs(full: Mask):
    for b in range(1, full + 1):
        comp = full & ~b
        c = comp
        while c:
            yield b, c
            c = (c - 1) & comp


def is_subadditive(measure: MonotoneMeasure) -> PredicateResult:
    """mu(B u C) <= mu(B) + mu(C) over all disjoint pairs (monotone measures:
    disjoint subadditivity implies the general form)."""
    val = measure.mask_value
    for b, c in _iter_disjoint_pairs(measure.space.full):
        if val(b | c) > val(b) + val(c) + _PRED_TOL:
            return PredicateResult(False, (b, c))
    return PredicateResult(True)


def is_superadditive(measure: MonotoneMeasure) -> PredicateResult:
    """mu(B u C) >= mu(B) + mu(C) over all disjoint pairs."""
    val = measure.mask_value
    for b, c in _iter_disjoint_pairs(measure.space.full):
        if val(b | c) < val(b) + val(c) - _PRED_TOL:
            return PredicateResult(False, (b, c))
    return PredicateResult(True)


# -- interval mode -------------------------------------------------------------


@dataclass(frozen=True)
class IntervalMeasure:
    """A parametric measure of real intervals with closed-form evaluation.

    Families: ``lebesgue`` (length), ``lebesgue_pow`` (length**q), and
    ``counting`` (cardinality: 0 for empty, 1 for a point, inf otherwise).
    There is deliberately no powerset view of these.
    """

    family: str
    q: float = 1.0

    def __post_init__(self):
        if self.family not in ("lebesgue", "lebesgue_pow", "counting"):
            raise InputError(f"unknown interval measure family {self.family!r}")
        if self.family == "lebesgue_pow" and self.q <= 0:
            raise InputError("lebesgue_pow requires q > 0")

    def interval_value(self, lo: float, hi: float) -> float:
        lo, hi = as_ext(lo), as_ext(hi)
        if hi < lo:
            return 0.0
        length = hi - lo
        if self.family == "lebesgue":
            return length
        if self.family == "lebesgue_pow":
            return length**self.q if not math.isinf(length) else math.inf
        if length == 0.0:
            return 1.0
        return math.inf

    def validate_monotone(self):
        raise NotEnumerableError("interval-mode measures are not enumerable")


@dataclass(frozen=True)
class SurvivalProfile:
    """t -> mu(A ∩ {f >= t}) as a closed-form evaluator on [0, T].

    ``evaluate`` must be nonincreasing and 0 beyond ``upper`` (the threshold T).
    ``breakpoints`` list known discontinuities/kinks so the search can split
    there; ``lipschitz`` optionally bounds |G'| on smooth pieces.
    """

    evaluate: Callable[[float], float]
    upper: Optional[float] = None
    breakpoints: Tuple[float, ...] = ()
    lipschitz: Optional[float] = None

    def __call__(self, t: float) -> float:
        return self.evaluate(t)

    def check_nonincreasing(self, samples: int = 512) -> Optional[Tuple[float, float]]:
        """Sample-based falsifier; returns a violating (t1, t2) pair or None."""
        if self.upper is None or not math.isfinite(self.upper) or self.upper <= 0:
            return None
        ts = [self.upper * i / samples for i in range(samples + 1)]
        ts.extend(b for b in self.breakpoints if 0.0 <= b <= self.upper)
        ts.sort()
        prev_t, prev_v = ts[0], self.evaluate(ts[0])
        for t in ts[1:]:
            v = self.evaluate(t)
            if v > prev_v + 1e-12:
                return (prev_t, t)
            prev_t, prev_v = t, v
        return None
