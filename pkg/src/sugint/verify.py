"""Randomized verification: generators, an independent oracle, witnesses, fuzzing.

The oracle re-evaluates the threshold supremum from its definition on a dense
grid (distinct values, midpoints, machine-step offsets) and deliberately shares
no code with the integral engine.  The fuzzer draws random instances, filters
each bound by its hypothesis predicates, and reports violations as
reproducible counterexamples, shrunk while the violation and the hypotheses
both persist.  Everything is deterministic given the seed.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .binops import (
    MIN,
    OVEE,
    PLUS,
    PRODUCT,
    MixedOpSpec,
    OpSpec,
    TNORM_LUKASIEWICZ,
    TNORM_MIN,
    TNORM_PRODUCT,
    UnitOpSpec,
)
from .bounds import check_bound, bound_ids, resolve
from .errors import InputError
from .extreal import format_number
from .instances import BoundContext, DiscreteInstance
from .measures import (
    FiniteSpace,
    Mask,
    MonotoneMeasure,
    is_subadditive,
    is_superadditive,
    is_weakly_subadditive,
    is_weakly_superadditive,
)
from .transforms import Expr, PiecewiseMap, affine_map, const_map, identity_map, power_map, quad_map

__all__ = [
    "FuzzConfig",
    "FuzzReport",
    "Violation",
    "WitnessResult",
    "attainability_witness",
    "draw_trial",
    "fuzz",
    "is_subadditive",
    "is_superadditive",
    "is_weakly_subadditive",
    "is_weakly_superadditive",
    "oracle_integral",
    "random_measure",
    "witness_sweep",
]

_EXACT = 0.0  # witness side conditions are checked exactly so equality is bitwise


# -- measure generation -----------------------------------------------------------


def random_measure(rng: random.Random, n: int, kind: str = "general", scale: float = 1.0) -> MonotoneMeasure:
    """A random monotone measure; kind-tagged measures re-verify their predicate."""
    space = FiniteSpace(n)
    if kind == "general":
        table = [0.0] * (space.full + 1)
        for m in range(1, space.full + 1):
            raw = rng.uniform(0.0, scale)
            best = raw
            sub = m
            while sub:
                bit = sub & (-sub)
                prev = table[m ^ bit]
                if prev > best:
                    best = prev
                sub ^= bit
            table[m] = best
        return MonotoneMeasure.from_full_table(space, table)
    if kind in ("subadditive", "superadditive"):
        for _ in range(32):
            weights = [rng.uniform(0.05, 1.0) for _ in range(n)]
            alpha = rng.uniform(0.3, 0.9) if kind == "subadditive" else rng.uniform(1.2, 2.5)
            measure = MonotoneMeasure.distorted_additive(space, weights, alpha)
            check = is_subadditive(measure) if kind == "subadditive" else is_superadditive(measure)
            if check.holds:
                return measure
        raise InputError(f"resample budget exhausted for kind {kind!r}")
    if kind in ("weakly_sub", "weakly_super"):
        # rejection-sample against the predicate on a random nonempty subset
        for _ in range(200):
            measure = random_measure(rng, n, "general", scale)
            a = rng.randrange(1, space.full + 1)
            pred = is_weakly_subadditive if kind == "weakly_sub" else is_weakly_superadditive
            if pred(measure, a).holds:
                return measure
        raise InputError(f"resample budget exhausted for kind {kind!r}")
    raise InputError(f"unknown measure kind {kind!r}")


def _random_subset(rng: random.Random, n: int) -> Mask:
    mask = rng.getrandbits(n)
    if mask == 0:
        mask = 1 << rng.randrange(n)
    return mask


# -- transform pools ----------------------------------------------------------------


def _h_pool_nonneg(rng: random.Random, scale: float) -> PiecewiseMap:
    kind = rng.randrange(9)
    if kind == 0:
        return affine_map(rng.uniform(0.0, scale), rng.uniform(0.2, 2.0))
    if kind == 1:
        return power_map(rng.uniform(0.2, 2.0), rng.choice([0.5, 1.0, 2.0, 3.0]))
    if kind == 2:  # decreasing to 0, then flat
        a = rng.uniform(0.5, 2.0) * scale
        b = rng.uniform(0.25, 2.0)
        cut = a / b
        return PiecewiseMap.from_segments(
            [(0.0, cut, Expr.affine(a, -b), "dec"), (cut, math.inf, Expr.const(0.0), "const")],
            validate=False,
        )
    if kind == 3:
        return const_map(rng.uniform(0.0, scale))
    if kind == 4:  # convex valley a*(x - v)^2 + offset
        v = rng.uniform(0.2, scale)
        a = rng.uniform(0.25, 2.0)
        return quad_map(a, -2.0 * a * v, a * v * v + rng.uniform(0.0, 0.5))
    if kind == 5:  # peak then flat zero tail
        c = rng.uniform(0.5, 1.5) * scale
        amp = rng.uniform(0.5, 2.0)
        return PiecewiseMap.from_segments(
            [
                (0.0, c / 2.0, Expr.quad(-amp, amp * c, 0.0), "inc"),
                (c / 2.0, c, Expr.quad(-amp, amp * c, 0.0), "dec"),
                (c, math.inf, Expr.const(0.0), "const"),
            ],
            validate=False,
        )
    if kind == 6:  # jump: flat, a singleton value, then a rising branch
        s = rng.uniform(0.3, 1.2) * scale
        v1 = rng.uniform(0.0, 0.5) * scale
        v2 = v1 + rng.uniform(0.1, 1.0)
        return PiecewiseMap.from_segments(
            [
                (0.0, s, Expr.const(v1), "const"),
                (s, s, Expr.const(v2), "const"),
                (s, math.inf, Expr(d=v2, c=1.0, a=-s, b=1.0, g=1.0, e=2.0), "inc"),
            ],
            validate=False,
        )
    if kind == 7:  # concave: shifted square root
        return PiecewiseMap.from_segments(
            [(0.0, math.inf, Expr(d=0.0, c=rng.uniform(0.5, 2.0), a=rng.uniform(0.0, 1.0), b=1.0, g=1.0, e=0.5), "inc")],
            validate=False,
        )
    # concave: min(slope*x, cap)
    slope = rng.uniform(0.5, 2.0)
    cap = rng.uniform(0.5, 2.0) * scale
    cut = cap / slope
    return PiecewiseMap.from_segments(
        [(0.0, cut, Expr.affine(0.0, slope), "inc"), (cut, math.inf, Expr.const(cap), "const")],
        validate=False,
    )


def _h_pool_unit(rng: random.Random) -> PiecewiseMap:
    kind = rng.randrange(6)
    if kind == 0:
        return power_map(1.0, rng.choice([0.5, 1.0, 2.0, 3.0]), hi=1.0)
    if kind == 1:
        return const_map(rng.uniform(0.0, 1.0), hi=1.0)
    if kind == 2:  # unit valley (x - v)^2, capped inside [0,1]
        v = rng.uniform(0.2, 0.8)
        return quad_map(1.0, -2.0 * v, v * v, hi=1.0)
    if kind == 3:  # concave cap
        slope = rng.uniform(0.8, 2.0)
        cap = rng.uniform(0.4, 1.0)
        cut = cap / slope
        if cut >= 1.0:
            return affine_map(0.0, slope if slope <= 1.0 else 1.0, hi=1.0)
        return PiecewiseMap.from_segments(
            [(0.0, cut, Expr.affine(0.0, slope), "inc"), (cut, 1.0, Expr.const(cap), "const")],
            validate=False,
        )
    if kind == 4:  # square root (concave, slope <= 1 past 1/4)
        return power_map(1.0, 0.5, hi=1.0)
    return affine_map(rng.uniform(0.0, 0.3), rng.uniform(0.2, 0.7), hi=1.0)


def _h_pool_signed(rng: random.Random) -> PiecewiseMap:
    kind = rng.randrange(3)
    if kind == 0:
        return identity_map(lo=-math.inf)
    if kind == 1:  # cubic through the origin
        return PiecewiseMap.from_segments(
            [(-math.inf, math.inf, Expr.power(rng.uniform(0.5, 1.5), 3.0), "inc")],
            signed=True,
            validate=False,
        )
    s1, s2 = rng.uniform(0.5, 2.5), rng.uniform(0.5, 2.5)
    return PiecewiseMap.from_segments(
        [(-math.inf, 0.0, Expr.affine(0.0, s1), "inc"), (0.0, math.inf, Expr.affine(0.0, s2), "inc")],
        signed=True,
        validate=False,
    )


def _h_pool_vee(rng: random.Random) -> PiecewiseMap:
    kind = rng.randrange(3)
    if kind == 0:  # |x| with asymmetric slopes
        s1, s2 = rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0)
        return PiecewiseMap.from_segments(
            [(-math.inf, 0.0, Expr.affine(0.0, -s1), "dec"), (0.0, math.inf, Expr.affine(0.0, s2), "inc")],
            signed=True,
            validate=False,
        )
    if kind == 1:  # x^2
        return quad_map(rng.uniform(0.5, 2.0), 0.0, 0.0, lo=-math.inf)
    s = rng.uniform(0.5, 2.0)  # even power 4
    return PiecewiseMap.from_segments(
        [(-math.inf, 0.0, Expr.power(s, 4.0), "dec"), (0.0, math.inf, Expr.power(s, 4.0), "inc")],
        signed=True,
        validate=False,
    )


# -- trial instances -------------------------------------------------------------------


@dataclass
class Trial:
    """One fuzz trial: a shared measure plus per-family functions/transforms."""

    measure: MonotoneMeasure
    A: Mask
    f: Tuple[float, ...]
    H: PiecewiseMap
    op: OpSpec
    unit_measure: MonotoneMeasure
    unit_A: Mask
    unit_f: Tuple[float, ...]
    unit_H: PiecewiseMap
    conj: UnitOpSpec
    semi: UnitOpSpec
    signed_f: Tuple[float, ...]
    signed_H: PiecewiseMap
    vee_H: PiecewiseMap
    star: MixedOpSpec
    tol: float = 1e-9
    _ctxs: Dict[str, BoundContext] = field(default_factory=dict)

    def context_for(self, bound_id: str) -> BoundContext:
        family = _FAMILY.get(resolve(bound_id).bound_id, "main")
        if family not in self._ctxs:
            if family == "unit":
                ctx = BoundContext(
                    DiscreteInstance(self.unit_measure, self.unit_A, self.unit_f),
                    self.unit_H,
                    conj=self.conj,
                    semi=self.semi,
                    tol=self.tol,
                )
            elif family == "signed":
                ctx = BoundContext(
                    DiscreteInstance(self.measure, self.A, self.signed_f),
                    self.signed_H,
                    star=self.star,
                    tol=self.tol,
                )
            elif family == "vee":
                ctx = BoundContext(
                    DiscreteInstance(self.measure, self.A, self.signed_f), self.vee_H, tol=self.tol
                )
            else:
                ctx = BoundContext(
                    DiscreteInstance(self.measure, self.A, self.f), self.H, op=self.op, tol=self.tol
                )
            self._ctxs[family] = ctx
        return self._ctxs[family]

    def serialize(self, bound_id: str) -> dict:
        family = _FAMILY.get(resolve(bound_id).bound_id, "main")
        if family == "unit":
            measure, a, f, h = self.unit_measure, self.unit_A, self.unit_f, self.unit_H
        elif family == "signed":
            measure, a, f, h = self.measure, self.A, self.signed_f, self.signed_H
        elif family == "vee":
            measure, a, f, h = self.measure, self.A, self.signed_f, self.vee_H
        else:
            measure, a, f, h = self.measure, self.A, self.f, self.H
        out = {
            "instance": serialize_measure_instance(measure, a, f),
            "H": h.to_json(),
            "op": self.op.name,
            "star": self.star.name,
            "tnorm": self.conj.name,
            "semicopula": self.semi.name,
        }
        return out


_FAMILY = {
    "qint": "unit",
    "seminormed": "unit",
    "comono": "unit",
    "b001": "signed",
    "mixed_lower": "vee",
    "mixed_upper": "vee",
}


def serialize_measure_instance(measure: MonotoneMeasure, A: Mask, f: Sequence[float]) -> dict:
    space = measure.space
    values = {}
    for m in range(space.full + 1):
        key = ",".join(str(i) for i in space.indices_of(m))
        values[key] = format_number(measure.mask_value(m))
    return {
        "n": space.n,
        "measure": values,
        "A": list(space.indices_of(A)),
        "f": [format_number(v) for v in f],
        "mode": "strict",
    }


def random_instance(cfg: "FuzzConfig", trial: int = 0) -> Trial:
    """The trial the fuzzer would draw for (cfg.seed, trial); byte-stable."""
    return draw_trial(random.Random(cfg.seed * 1_000_003 + trial), cfg)


def draw_trial(rng: random.Random, cfg: "FuzzConfig") -> Trial:
    n = rng.randint(cfg.n_min, cfg.n_max)
    scale = rng.uniform(0.5, cfg.max_scale)
    measure = random_measure(rng, n, cfg.measure_kind, scale)
    space = measure.space
    A = _random_subset(rng, n)

    def draw_value() -> float:
        r = rng.random()
        if r < 0.1:
            return 0.0
        return rng.uniform(0.0, scale * 1.5)

    f = tuple(draw_value() for _ in range(n))
    if rng.random() < 0.3 and n >= 2:  # encourage duplicate levels
        f = f[:-1] + (f[rng.randrange(n - 1)],)
    unit_measure = random_measure(rng, n, "general", 1.0)
    unit_A = _random_subset(rng, n)
    unit_f = tuple(min(1.0, max(0.0, rng.random())) for _ in range(n))
    signed_f = tuple(rng.uniform(-scale, scale) for _ in range(n))
    return Trial(
        measure=measure,
        A=A,
        f=f,
        H=_h_pool_nonneg(rng, scale),
        op=rng.choice([MIN, PRODUCT]),
        unit_measure=unit_measure,
        unit_A=unit_A,
        unit_f=unit_f,
        unit_H=_h_pool_unit(rng),
        conj=rng.choice([TNORM_MIN, TNORM_PRODUCT, TNORM_LUKASIEWICZ]),
        semi=rng.choice([TNORM_MIN, TNORM_PRODUCT, TNORM_LUKASIEWICZ]),
        signed_f=signed_f,
        signed_H=_h_pool_signed(rng),
        vee_H=_h_pool_vee(rng),
        star=rng.choice([PLUS, OVEE]),
        tol=cfg.tol,
    )


# -- independent oracle -------------------------------------------------------------------


def oracle_integral(
    op: OpSpec, measure: MonotoneMeasure, A: Mask, f: Sequence[float], grid_density: int = 0
) -> float:
    """Dense-threshold evaluation of sup_t {t o mu(A ∩ {f >= t})}.

    Shares no code with the integral engine: level sets are rebuilt by
    scanning indices, and the grid covers all distinct values, midpoints,
    machine-step offsets, and 0; ``grid_density`` adds that many extra evenly
    spaced thresholds per gap.
    """
    space = measure.space
    members = [i for i in range(space.n) if A >> i & 1]
    values = sorted({f[i] for i in members})
    grid = {0.0}
    for v in values:
        grid.add(v)
        if math.isfinite(v):
            grid.add(math.nextafter(v, -math.inf))
            grid.add(math.nextafter(v, math.inf))
    for lo, hi in zip(values, values[1:]):
        if math.isfinite(hi):
            grid.add((lo + hi) / 2.0)
            for k in range(1, grid_density + 1):
                grid.add(lo + (hi - lo) * k / (grid_density + 1))
    best = -math.inf
    for t in sorted(grid):
        if t < 0.0:
            continue
        level = [i for i in members if f[i] >= t]
        mu = float(measure.value_of(space.mask_of(level)))
        v = op.fn(t, mu)
        if v > best:
            best = v
    return best


# -- attainability witnesses ------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessResult:
    bound_id: str
    f: Optional[Tuple[float, ...]]
    conditions: Tuple[Tuple[str, bool], ...]

    @property
    def verified(self) -> bool:
        return self.f is not None and all(ok for _, ok in self.conditions)


def _indicator(space: FiniteSpace, mask: Mask, value: float) -> Tuple[float, ...]:
    return tuple(value if mask >> i & 1 else 0.0 for i in range(space.n))


def _argmin_candidates(H: PiecewiseMap) -> List[float]:
    target = H.global_extrema()[0]
    return [x for x, v in H.extrema_candidates() if v == target]


def _argmax_candidates(H: PiecewiseMap) -> List[float]:
    target = H.global_extrema()[1]
    return [x for x, v in H.extrema_candidates() if v == target]


def attainability_witness(
    bound_id: str,
    measure: MonotoneMeasure,
    A: Mask,
    H: PiecewiseMap,
    star: Optional[MixedOpSpec] = None,
) -> WitnessResult:
    """Construct the equality witness for a bound's sharpness clause.

    Side conditions are checked exactly (float equality), which is what makes
    the resulting slack vanish bitwise; unmet conditions yield no witness.
    """
    from .bounds import left_continuous_at, right_continuous_at  # local to avoid import noise

    bid = resolve(bound_id).bound_id
    space = measure.space
    mu_a = measure.mask_value(A)
    conds: List[Tuple[str, bool]] = []

    if bid in ("tw1i", "ss1", "tw2ii", "ss4"):
        if not math.isfinite(mu_a):
            return WitnessResult(bid, None, (("muA_finite", False),))
        f = _indicator(space, A, mu_a)
        p = mu_a
        if bid in ("tw1i", "ss1"):
            conds.append(("H_value_matches_tail_infimum", H.interval_extrema(p, math.inf)[0] == H.eval(p)))
            if bid == "tw1i":
                conds.append(("H_left_continuous_at_p", left_continuous_at(H, p, _EXACT)))
        else:
            conds.append(("H_value_matches_tail_supremum", H.interval_extrema(p, math.inf)[1] == H.eval(p)))
            if bid == "tw2ii":
                conds.append(("H_left_continuous_at_p", left_continuous_at(H, p, _EXACT)))
        ok = all(c for _, c in conds)
        return WitnessResult(bid, f if ok else None, tuple(conds))

    if bid in ("tw1ii", "ss3", "tw2i", "ss2"):
        lower = bid in ("tw1ii", "ss3")
        y_candidates = _argmin_candidates(H) if lower else _argmax_candidates(H)
        if not y_candidates:
            return WitnessResult(bid, None, (("extremum_attained_at_a_breakpoint", False),))
        for y0 in y_candidates:
            if not math.isfinite(y0):
                continue
            f = _indicator(space, A, y0)
            p = min(y0, mu_a)
            conds = []
            if lower:
                conds.append(("H_value_matches_head_infimum", H.interval_extrema(0.0, p)[0] == H.eval(p)))
                conds.append(("H_at_y0_is_global_infimum", H.eval(y0) == H.global_extrema()[0]))
                if bid == "tw1ii":
                    conds.append(("H_right_continuous_at_p", right_continuous_at(H, p, _EXACT)))
            else:
                conds.append(("H_value_matches_head_supremum", H.interval_extrema(0.0, p)[1] == H.eval(p)))
                conds.append(("H_at_y0_is_global_supremum", H.eval(y0) == H.global_extrema()[1]))
                if bid == "tw2i":
                    conds.append(("H_right_continuous_at_p", right_continuous_at(H, p, _EXACT)))
            if all(c for _, c in conds):
                return WitnessResult(bid, f, tuple(conds))
        return WitnessResult(bid, None, tuple(conds))

    if bid == "b001":
        sub_b = A
        while True:
            b_mask = sub_b
            rest = A & ~b_mask
            mu_b = measure.mask_value(b_mask)
            mu_rest = measure.mask_value(rest)
            if (
                math.isfinite(mu_b)
                and math.isfinite(mu_rest)
                and mu_b > 0.0
                and H.xlo <= -mu_rest
                and H.xhi >= mu_b
                and H.eval(mu_b) == mu_b
            ):
                f = tuple(
                    mu_b if b_mask >> i & 1 else (-mu_rest if rest >> i & 1 else 0.0)
                    for i in range(space.n)
                )
                return WitnessResult(bid, f, (("H_fixes_mu_B", True), ("parts_finite", True)))
            if sub_b == 0:
                break
            sub_b = (sub_b - 1) & A
        return WitnessResult(bid, None, (("H_fixes_mu_B", False),))

    raise InputError(f"no witness construction registered for bound {bound_id!r}")


def witness_sweep(
    bound_id: str,
    pairs: int = 200,
    seed: int = 0,
    op: OpSpec = MIN,
    star: MixedOpSpec = PLUS,
    n_range: Tuple[int, int] = (2, 5),
) -> Tuple[int, int, float]:
    """Generate (measure, H) pairs, build witnesses, and measure equality slack.

    Returns (verified_count, attempted, max_abs_slack_over_verified).
    """
    bid = resolve(bound_id).bound_id
    worst = 0.0
    verified = 0
    rng = random.Random(seed)
    for _ in range(pairs):
        n = rng.randint(*n_range)
        measure = random_measure(rng, n, "general", rng.uniform(0.5, 2.0))
        A = _random_subset(rng, n)
        if bid == "b001":
            H = _h_pool_signed(rng)
        else:
            H = _h_pool_nonneg(rng, 1.0)
        w = attainability_witness(bid, measure, A, H, star=star)
        if not w.verified:
            continue
        if bid == "b001":
            ctx = BoundContext(DiscreteInstance(measure, A, w.f), H, star=star)
        else:
            ctx = BoundContext(DiscreteInstance(measure, A, w.f), H, op=op)
        report = check_bound(ctx, bid)
        verified += 1
        worst = max(worst, abs(report.slack))
    return verified, pairs, worst


# -- fuzzing -----------------------------------------------------------------------------------


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    trials: int = 100
    n_min: int = 2
    n_max: int = 6
    measure_kind: str = "general"
    bounds: Tuple[str, ...] = ()
    tol: float = 1e-9
    resample_budget: int = 100
    max_scale: float = 4.0

    def __post_init__(self):
        if self.trials < 1:
            raise InputError("trials must be >= 1")
        if not (1 <= self.n_min <= self.n_max <= 12):
            raise InputError("space sizes must satisfy 1 <= n_min <= n_max <= 12")


@dataclass(frozen=True)
class Violation:
    bound_id: str
    lhs: float
    rhs: float
    slack: float
    refutable: bool
    trial: int
    instance: dict
    hypotheses: Tuple[Tuple[str, bool, str], ...]
    shrink_steps: int


@dataclass(frozen=True)
class FuzzReport:
    config: FuzzConfig
    evaluated: Dict[str, int]
    skipped: Dict[str, int]
    violations: Tuple[Violation, ...]
    digest: str

    @property
    def clean(self) -> bool:
        """True when no violations were found (refutable claims included)."""
        return not self.violations


def _report_digest(payload: dict) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:16]


def _shrink(trial: Trial, bound_id: str, cfg: FuzzConfig) -> Tuple[Trial, int]:
    """Shrink a violating trial: drop elements, zero entries, quantize the measure."""

    def still_violates(t: Trial) -> bool:
        try:
            rep = check_bound(t.context_for(bound_id), bound_id, cfg.tol)
        except Exception:
            return False
        return rep.hypotheses_ok and not rep.holds

    def rebuild(t: Trial, measure, A, f, signed_f, unit_measure, unit_A, unit_f) -> Trial:
        return Trial(
            measure=measure,
            A=A,
            f=f,
            H=t.H,
            op=t.op,
            unit_measure=unit_measure,
            unit_A=unit_A,
            unit_f=unit_f,
            unit_H=t.unit_H,
            conj=t.conj,
            semi=t.semi,
            signed_f=signed_f,
            signed_H=t.signed_H,
            vee_H=t.vee_H,
            star=t.star,
            tol=t.tol,
        )

    def drop_element(t: Trial, i: int) -> Optional[Trial]:
        n = t.measure.space.n
        if n <= 1:
            return None
        new_space = FiniteSpace(n - 1)

        def shrink_mask(mask: Mask) -> Mask:
            low = mask & ((1 << i) - 1)
            high = (mask >> (i + 1)) << i
            return low | high

        def embed(mask: Mask) -> Mask:
            low = mask & ((1 << i) - 1)
            high = (mask >> i) << (i + 1)
            return low | high

        def restrict(measure: MonotoneMeasure) -> MonotoneMeasure:
            table = [measure.mask_value(embed(m)) for m in range(new_space.full + 1)]
            return MonotoneMeasure.from_full_table(new_space, table)

        new_A = shrink_mask(t.A & ~(1 << i)) if t.A & (1 << i) else shrink_mask(t.A)
        new_unit_A = shrink_mask(t.unit_A & ~(1 << i)) if t.unit_A & (1 << i) else shrink_mask(t.unit_A)
        if new_A == 0 or new_unit_A == 0:
            return None
        drop = lambda xs: tuple(v for j, v in enumerate(xs) if j != i)
        return rebuild(
            t,
            restrict(t.measure),
            new_A,
            drop(t.f),
            drop(t.signed_f),
            restrict(t.unit_measure),
            new_unit_A,
            drop(t.unit_f),
        )

    steps = 0
    current = trial
    improved = True
    while improved and steps < 200:
        improved = False
        for i in range(current.measure.space.n):
            candidate = drop_element(current, i)
            if candidate is not None and still_violates(candidate):
                current, steps, improved = candidate, steps + 1, True
                break
        if improved:
            continue
        for i in range(current.measure.space.n):
            if current.f[i] != 0.0 or current.signed_f[i] != 0.0:
                zeroed = rebuild(
                    current,
                    current.measure,
                    current.A,
                    current.f[:i] + (0.0,) + current.f[i + 1 :],
                    current.signed_f[:i] + (0.0,) + current.signed_f[i + 1 :],
                    current.unit_measure,
                    current.unit_A,
                    current.unit_f,
                )
                if still_violates(zeroed):
                    current, steps, improved = zeroed, steps + 1, True
                    break
        if improved:
            continue
        space = current.measure.space
        quantized = MonotoneMeasure.from_full_table(
            space,
            [round(current.measure.mask_value(m) * 64.0) / 64.0 for m in range(space.full + 1)],
        )
        if any(
            quantized.mask_value(m) != current.measure.mask_value(m) for m in range(space.full + 1)
        ):
            candidate = rebuild(
                current,
                quantized,
                current.A,
                current.f,
                current.signed_f,
                current.unit_measure,
                current.unit_A,
                current.unit_f,
            )
            if still_violates(candidate):
                current, steps, improved = candidate, steps + 1, True
    return current, steps


def fuzz(cfg: FuzzConfig) -> FuzzReport:
    """Hypothesis-filtered randomized checking of the registered bounds."""
    ids = list(cfg.bounds) if cfg.bounds else bound_ids(include_refutable=False)
    for b in ids:
        resolve(b)
    evaluated = {b: 0 for b in ids}
    skipped = {b: 0 for b in ids}
    violations: List[Violation] = []
    for i in range(cfg.trials):
        rng = random.Random(cfg.seed * 1_000_003 + i)
        cache: List[Trial] = [draw_trial(rng, cfg)]
        for bound_id in ids:
            hit = None
            for k in range(cfg.resample_budget + 1):
                if k == len(cache):
                    cache.append(draw_trial(rng, cfg))
                trial = cache[k]
                report = check_bound(trial.context_for(bound_id), bound_id, cfg.tol)
                if report.hypotheses_ok:
                    hit = (trial, report)
                    break
            if hit is None:
                skipped[bound_id] += 1
                continue
            trial, report = hit
            evaluated[bound_id] += 1
            if not report.holds:
                shrunk, steps = _shrink(trial, bound_id, cfg)
                final = check_bound(shrunk.context_for(bound_id), bound_id, cfg.tol)
                violations.append(
                    Violation(
                        bound_id=bound_id,
                        lhs=float(final.lhs),
                        rhs=float(final.rhs),
                        slack=final.slack,
                        refutable=resolve(bound_id).refutable,
                        trial=i,
                        instance=shrunk.serialize(bound_id),
                        hypotheses=tuple((h.name, h.holds, h.detail) for h in final.hypotheses),
                        shrink_steps=steps,
                    )
                )
    violations.sort(key=lambda v: _report_digest(v.instance))
    digest = _report_digest(
        {
            "seed": cfg.seed,
            "trials": cfg.trials,
            "bounds": ids,
            "evaluated": evaluated,
            "skipped": skipped,
            "violations": [
                {"bound": v.bound_id, "lhs": v.lhs, "rhs": v.rhs, "instance": v.instance}
                for v in violations
            ],
        }
    )
    return FuzzReport(cfg, evaluated, skipped, tuple(violations), digest)
