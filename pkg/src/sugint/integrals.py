"""Evaluation of the threshold-supremum integral and its named specializations.

Discrete instances are evaluated exactly: for a nondecreasing operation with
a o 0 = 0 the survival function is a step function constant on each interval
between consecutive distinct function values, closed on the right, so the
supremum over every interval is attained at its right endpoint.  The candidate
set {0} u {distinct values of f on A} therefore realizes the supremum.  When
the operation's first section is not declared left-continuous, the result is
reported in ``approximate`` mode and machine-step probes just below each
candidate are evaluated as well (they can never exceed the candidate values;
the mode is a contract, not a numerical concession).

Profile instances are evaluated by branch-and-bound on [0, T]: on a cell
[l, r], monotonicity gives the certified bound  t o G(t) <= r o G(l), so cells
that cannot beat the incumbent are pruned and the rest are split.  The
returned value is always a true lower bound of the supremum (it is a max of
evaluated points) and the reported error bound is the certified gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .binops import MIN, PRODUCT, OpSpec, UnitOpSpec, fuzzy_conjunction_to_circ, semicopula_to_circ
from .errors import HypothesisError, InputError, SearchError
from .extreal import ExtReal
from .measures import Mask, MonotoneMeasure, SurvivalProfile, level_mask


@dataclass(frozen=True)
class IntegralResult:
    """Value of one integral evaluation.

    ``exact`` results carry no error bound.  ``approximate`` values are
    certified lower bounds of the true supremum with gap at most
    ``error_bound``; ``argmax_t`` is the threshold realizing the value
    (smallest in case of ties for discrete instances).
    """

    value: ExtReal
    mode: str
    error_bound: Optional[float]
    argmax_t: float

    def __post_init__(self):
        if self.mode not in ("exact", "approximate"):
            raise InputError(f"unknown result mode {self.mode!r}")
        if self.mode == "exact" and self.error_bound is not None:
            raise InputError("exact results carry no error bound")


def generalized_integral(op: OpSpec, measure: MonotoneMeasure, A: Mask, f: Sequence[float]) -> IntegralResult:
    """sup over t >= 0 of t o mu(A ∩ {f >= t}) on a discrete instance."""
    if not op.flags.nondecreasing:
        raise HypothesisError(f"{op.name} is not declared nondecreasing")
    if not op.flags.zero_absorbing:
        raise HypothesisError(f"{op.name} lacks a o 0 = 0; the supremum is ill-defined")
    measure.space.check_mask(A)
    if len(f) != measure.space.n:
        raise InputError("function length must equal the space size")
    if any(f[i] < 0.0 for i in range(measure.space.n) if A >> i & 1):
        if any(f[i] < -1e-12 for i in range(measure.space.n) if A >> i & 1):
            raise InputError("function must be nonnegative on A; split signed functions first")
        f = tuple(0.0 if v < 0.0 else v for v in f)  # absorb float cancellation noise
    fn = op.fn
    candidates = sorted({f[i] for i in range(measure.space.n) if A >> i & 1 and f[i] > 0.0})
    best = fn(0.0, measure.mask_value(A))
    arg = 0.0
    for t in candidates:
        m = measure.mask_value(level_mask(f, A, t))
        v = fn(t, m)
        if v > best:
            best, arg = v, t
    if op.flags.left_cont_first:
        return IntegralResult(ExtReal(best), "exact", None, arg)
    for t in candidates:
        if math.isfinite(t):
            t_eps = math.nextafter(t, -math.inf)
            if t_eps > 0.0:
                v = fn(t_eps, measure.mask_value(level_mask(f, A, t_eps)))
                if v > best:
                    best, arg = v, t_eps
    return IntegralResult(ExtReal(best), "approximate", 0.0, arg)


def sugeno(measure: MonotoneMeasure, A: Mask, f: Sequence[float]) -> IntegralResult:
    """sup_t {t ^ mu(A ∩ {f >= t})}; always exact on discrete instances."""
    return generalized_integral(MIN, measure, A, f)


def shilkret(measure: MonotoneMeasure, A: Mask, f: Sequence[float]) -> IntegralResult:
    """sup_t {t * mu(A ∩ {f >= t})} under the convention inf * 0 = 0."""
    return generalized_integral(PRODUCT, measure, A, f)


def q_integral(conj: UnitOpSpec, measure: MonotoneMeasure, f: Sequence[float]) -> IntegralResult:
    """sup over t in [0,1] of mu({f >= t}) conj t (measure is the left operand)."""
    full = measure.space.full
    if measure.mask_value(full) > 1.0:
        raise InputError("q-integral requires a measure with range in [0, 1]")
    if any(v < 0.0 or v > 1.0 for v in f):
        raise InputError("q-integral requires function values in [0, 1]")
    return generalized_integral(fuzzy_conjunction_to_circ(conj), measure, full, f)


def seminormed(semi: UnitOpSpec, measure: MonotoneMeasure, A: Mask, f: Sequence[float]) -> IntegralResult:
    """sup over t in [0,1] of S(t, mu(A ∩ {f >= t})) for a semicopula S."""
    if measure.mask_value(measure.space.full) > 1.0:
        raise InputError("seminormed integral requires a measure with range in [0, 1]")
    if any(v < 0.0 or v > 1.0 for v in f):
        raise InputError("seminormed integral requires function values in [0, 1]")
    return generalized_integral(semicopula_to_circ(semi), measure, A, f)


# -- profile mode ------------------------------------------------------------------

_INITIAL_CELLS = 1024
_MAX_ROUNDS = 60
_SPLIT = 8
_MAX_ACTIVE = 65536


def _detect_upper(profile: SurvivalProfile) -> float:
    t = 1.0
    for _ in range(41):
        if profile.evaluate(t) == 0.0:
            return t
        t *= 2.0
    raise SearchError("profile has no declared upper threshold and no decay was detected")


def _phi_lipschitz(op: OpSpec, hi: float, g_lo: float, lip_g: Optional[float]) -> Optional[float]:
    """Lipschitz bound for t -> t o G(t) on a cell, when derivable from the hint."""
    if lip_g is None or not math.isfinite(g_lo):
        return None
    if op.name == "min":
        return max(1.0, lip_g)
    if op.name == "product":
        return g_lo + hi * lip_g
    return None


def integrate_profile(op: OpSpec, profile: SurvivalProfile, tol: float = 1e-9, validate: bool = True) -> IntegralResult:
    """Approximate sup over t in [0, T] of t o G(t) with a certified gap.

    The profile must be nonincreasing with G(t) = 0 for t > T.  The result is
    the best evaluated point (never above the true supremum); ``error_bound``
    is the certified remaining gap, at most ``tol`` unless the round cap hit.
    """
    if not (tol > 0.0) or math.isnan(tol):
        raise SearchError(f"tolerance must be positive, got {tol}")
    if not op.flags.nondecreasing or not op.flags.zero_absorbing:
        raise HypothesisError(f"{op.name} must be nondecreasing with a o 0 = 0")
    upper = profile.upper
    if upper is None or math.isinf(upper):
        upper = _detect_upper(profile)
    if upper < 0:
        raise InputError("profile upper threshold must be nonnegative")
    if validate:
        bad = profile.check_nonincreasing()
        if bad is not None:
            raise InputError(f"profile increases between t={bad[0]} and t={bad[1]}")
    g = profile.evaluate
    fn = op.fn

    if upper == 0.0:
        v = fn(0.0, g(0.0))
        return IntegralResult(ExtReal(v), "approximate", 0.0, 0.0)

    edges = {0.0, upper}
    edges.update(b for b in profile.breakpoints if 0.0 < b < upper)
    bounds_sorted = sorted(edges)

    best = -math.inf
    arg = 0.0

    def visit(t: float):
        nonlocal best, arg
        v = fn(t, g(t))
        if v > best:
            best, arg = v, t

    cells: List[Tuple[float, float]] = []
    for lo, hi in zip(bounds_sorted, bounds_sorted[1:]):
        span = hi - lo
        visit(lo)
        for i in range(1, _INITIAL_CELLS):
            visit(lo + span * i / _INITIAL_CELLS)
        cells.extend((lo + span * i / _INITIAL_CELLS, lo + span * (i + 1) / _INITIAL_CELLS) for i in range(_INITIAL_CELLS))
    visit(upper)

    # Cells are pruned only when their certified bound cannot exceed the
    # incumbent at all, so the final gap certificate never loses mass.
    error = math.inf
    stuck_ub = -math.inf  # bounds of cells that hit float resolution
    for _ in range(_MAX_ROUNDS):
        scored: List[Tuple[float, float, float]] = []
        worst = best
        for lo, hi in cells:
            g_lo = g(lo)
            ub = fn(hi, g_lo)
            lip = _phi_lipschitz(op, hi, g_lo, profile.lipschitz)
            if lip is not None:
                ub = min(ub, max(fn(lo, g_lo), fn(hi, g(hi))) + lip * (hi - lo) * 0.5)
            if ub > worst:
                worst = ub
            if ub > best:
                scored.append((ub, lo, hi))
        error = max(worst, stuck_ub) - best
        if not scored or error <= tol:
            break
        if len(scored) > _MAX_ACTIVE:
            scored.sort(reverse=True)
            for ub, _, _ in scored[_MAX_ACTIVE:]:
                stuck_ub = max(stuck_ub, ub)
            scored = scored[:_MAX_ACTIVE]
        next_cells: List[Tuple[float, float]] = []
        for ub, lo, hi in scored:
            span = hi - lo
            if span <= 0.0 or lo + span / _SPLIT == lo:
                stuck_ub = max(stuck_ub, ub)
                continue  # cell at float resolution
            prev = lo
            for i in range(1, _SPLIT + 1):
                cut = hi if i == _SPLIT else lo + span * i / _SPLIT
                visit(cut)
                next_cells.append((prev, cut))
                prev = cut
        if not next_cells:
            break
        cells = next_cells
    error = max(error, stuck_ub - best, 0.0)

    return IntegralResult(ExtReal(best), "approximate", error, arg)


def scale_profile(profile: SurvivalProfile, m: float) -> SurvivalProfile:
    """Survival profile of m*f given the profile of f, for m > 0."""
    if not (m > 0.0) or math.isinf(m):
        raise InputError("scale must be positive and finite")
    base = profile.evaluate
    upper = None if profile.upper is None else profile.upper * m
    return SurvivalProfile(
        evaluate=lambda t: base(t / m),
        upper=upper,
        breakpoints=tuple(b * m for b in profile.breakpoints),
        lipschitz=None if profile.lipschitz is None else profile.lipschitz / m,
    )


def shift_profile(profile: SurvivalProfile, m: float, c: float, mu_A: float) -> SurvivalProfile:
    """Survival profile of (m*(f - c))^+ given the profile of f, for m > 0.

    {(m(f-c))^+ >= t} equals {f >= c + t/m} for t > 0 and is everything at
    t = 0; thresholds below 0 clamp to the full survival value mu(A).
    """
    if not (m > 0.0) or math.isinf(m):
        raise InputError("slope must be positive and finite for profile shifting")
    base = profile.evaluate
    f_upper = profile.upper
    if f_upper is None:
        raise InputError("shifting needs the base profile's upper threshold")
    upper = max(0.0, (f_upper - c) * m)

    def evaluate(t: float) -> float:
        if t <= 0.0:
            return mu_A
        s = c + t / m
        return base(s) if s > 0.0 else mu_A

    breaks = [max(0.0, (b - c) * m) for b in profile.breakpoints]
    if c < 0.0:
        breaks.append(-c * m)
    return SurvivalProfile(
        evaluate=evaluate,
        upper=upper,
        breakpoints=tuple(sorted({b for b in breaks if 0.0 <= b <= upper})),
        lipschitz=None if profile.lipschitz is None else profile.lipschitz / m,
    )
