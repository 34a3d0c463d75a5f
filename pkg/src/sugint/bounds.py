"""Closed-form lower/upper bound evaluators with hypothesis checking.

Each registered bound pairs a formula with the predicates its validity rests
on.  Hypothesis checks never block evaluation: every report carries the full
(name, holds, detail) list so callers can study bounds outside their
hypotheses.  A report "holds" when the inequality is satisfied within the
tolerance; two registered bounds (``naive_convex`` and ``nn1``) encode claims
that are known to be invalid and exist so the fuzzer can exhibit violations.

Bound identifiers (wire/CLI ids):

    tw1i, tw1ii     general lower bounds via one-sided lower limits
    flo             monotone lower bound H(p) ^ p
    convex          the corrected convex lower bound (valid for p past the minimum)
    shilkret        product-form lower bound H(p) * p
    qint            quasiconvex lower bound for the q-integral
    seminormed      lower bound for the seminormed integral
    tw2i, tw2ii     general upper bounds via one-sided upper limits
    co2             upper bound for increasing-then-decreasing H
    ss1..ss4        continuity-of-measure variants (no continuity of the op)
    noo1, in3a      combined two-sided variants under (sub/super)additivity
    tw4             translation-augmented upper bound minimized over a shift grid
    in99, l1, comono  concave upper bounds via support lines
    in80            product-form concave upper bound
    b001 (alias 001)  upper bound for the sign-symmetric integral
    mixed_lower, mixed_upper  bounds for V-shaped transforms of signed functions
    naive_convex, nn1  refutable claims kept for counterexample reproduction
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .binops import MIN, PRODUCT, OpSpec
from .errors import HypothesisError, InputError
from .extreal import ExtReal, INF, pos_part, xadd, xmul, xsub
from .instances import BoundContext
from .transforms import PiecewiseMap, SupportLine

_EQ = 1e-12


@dataclass(frozen=True)
class BoundInputs:
    """Inputs of the general-form evaluators."""

    p: float
    mu_A: float
    H: PiecewiseMap
    op: OpSpec
    support: Optional[SupportLine] = None
    c_pivot: Optional[float] = None
    a0: Optional[float] = None


@dataclass(frozen=True)
class Hypothesis:
    name: str
    holds: bool
    detail: str = ""


@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    direction: str
    lhs: ExtReal
    rhs: ExtReal
    hypotheses: Tuple[Hypothesis, ...]
    holds: bool
    slack: float
    hypotheses_ok: bool
    minimizer: Optional[float] = None
    notes: Tuple[str, ...] = ()


@dataclass
class Outcome:
    lhs: float
    rhs: float
    hyps: List[Hypothesis]
    minimizer: Optional[float] = None
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class BoundDef:
    bound_id: str
    direction: str
    evaluate: Callable[[BoundContext], Outcome]
    refutable: bool = False


# -- continuity / shape helpers -------------------------------------------------


def left_continuous_at(H: PiecewiseMap, p: float, tol: float = _EQ) -> bool:
    if p <= H.xlo:
        return True
    return abs(H.one_sided(p).lower_left - H.eval(p)) <= tol


def right_continuous_at(H: PiecewiseMap, p: float, tol: float = _EQ) -> bool:
    if p >= H.xhi:
        return True
    return abs(H.one_sided(p).lower_right - H.eval(p)) <= tol


def support_line_valid(H: PiecewiseMap, line: SupportLine, tol: float = 1e-9) -> bool:
    if abs(H.eval(line.p) - line.value) > max(tol, 1e-9):
        return False
    try:
        for y in H._sample_xs(512):
            if H.eval(y) > line.value + line.slope * (y - line.p) + tol:
                return False
    except InputError:
        return False
    return True


def monotone_on_sampled(H: PiecewiseMap, lo: float, hi: float, direction: str, samples: int = 257) -> bool:
    """Sampled falsifier of (non)monotonicity of H on [lo, hi] ∩ extent."""
    lo = max(lo, H.xlo if math.isfinite(H.xlo) else -64.0)
    hi = min(hi, H.xhi if math.isfinite(H.xhi) else 64.0)
    if hi <= lo:
        return True
    xs = sorted({lo + (hi - lo) * i / samples for i in range(samples + 1)} | {x for x in H.knots if lo <= x <= hi})
    prev = H.eval(xs[0])
    for x in xs[1:]:
        cur = H.eval(x)
        if direction == "inc" and cur < prev - _EQ:
            return False
        if direction == "dec" and cur > prev + _EQ:
            return False
        prev = cur
    return True


def _shape(ctx: BoundContext, key: str):
    H = ctx.require_H()
    checks = {
        "nondecreasing": H.is_nondecreasing,
        "nonincreasing": H.is_nonincreasing,
        "continuous": H.is_continuous,
        "convex": H.is_convex_sampled,
        "concave": H.is_concave_sampled,
        "valley": H.valley_pivot,
        "peak": H.peak_pivot,
    }
    return ctx._memo(("shape", key), checks[key])


def _support(ctx: BoundContext, p: float) -> Tuple[SupportLine, Hypothesis]:
    """A support line at p (override honored) plus its validity row."""
    H = ctx.require_H()
    if ctx.m_p is not None:
        line = SupportLine(p, float(ctx.m_p), H.eval(p))
    else:
        dl, dr = H.one_sided_derivatives(p)
        cands = [d for d in (dl, dr) if d is not None and math.isfinite(d)]
        if not cands:
            return (
                SupportLine(p, 0.0, H.eval(p)),
                Hypothesis("support_line_valid", False, f"no finite one-sided derivative at p={p}"),
            )
        line = SupportLine(p, sum(cands) / len(cands), H.eval(p))
    ok = support_line_valid(H, line)
    detail = f"slope {line.slope} at p={p}" + ("" if ok else " violates H(y) <= H(p) + m(y-p)")
    return (line, Hypothesis("support_line_valid", ok, detail))


# -- hypothesis row builders -------------------------------------------------------


def _op_rows(op: OpSpec, left: bool = False, right: bool = False, subdist: bool = False) -> List[Hypothesis]:
    rows = [
        Hypothesis("op_nondecreasing", op.flags.nondecreasing, f"{op.name}: declared"),
        Hypothesis("op_zero_absorbing", op.flags.zero_absorbing, f"{op.name}: declared"),
    ]
    if left:
        rows.append(Hypothesis("op_left_continuous_first", op.flags.left_cont_first, f"{op.name}: declared"))
    if right:
        rows.append(Hypothesis("op_right_continuous_first", op.flags.right_cont_first, f"{op.name}: declared"))
    if subdist:
        rows.append(Hypothesis("op_subdistributive_add", op.flags.subdistributive_add, f"{op.name}: declared"))
    return rows


def _p_row(p: float, name: str = "p_finite") -> Hypothesis:
    return Hypothesis(name, math.isfinite(p), f"p={p}")


def _pred_row(name: str, result: Tuple[bool, str]) -> Hypothesis:
    return Hypothesis(name, result[0], result[1])


# -- formula evaluators (one per registered bound family) --------------------------------


def lower_general(inp: BoundInputs) -> ExtReal:
    """[ (H(p_-) ^ inf H([p,inf])) o p ] v [ inf H o mu(A) ]."""
    H, op = inp.H, inp.op
    h_left = H.one_sided(inp.p).lower_left
    inf_tail = H.interval_extrema(inp.p, INF)[0]
    inf_all = H.global_extrema()[0]
    return ExtReal(max(op.fn(min(h_left, inf_tail), inp.p), op.fn(inf_all, inp.mu_A)))


def lower_weak_subadditive(inp: BoundInputs) -> ExtReal:
    """[ (H(p_+) ^ inf H([0,p])) o (mu(A) - p) ] v [ inf H o mu(A) ]."""
    H, op = inp.H, inp.op
    h_right = H.one_sided(inp.p).lower_right
    inf_head = H.interval_extrema(0.0, inp.p)[0]
    inf_all = H.global_extrema()[0]
    return ExtReal(max(op.fn(min(h_right, inf_head), xsub(inp.mu_A, inp.p)), op.fn(inf_all, inp.mu_A)))


def lower_monotone(H: PiecewiseMap, p: float) -> ExtReal:
    """H(p) ^ p, the sharp bound for nondecreasing left-continuous H."""
    return ExtReal(min(H.eval(p), p))


def lower_convex(H: PiecewiseMap, p: float, pivot: float) -> ExtReal:
    """H(p) ^ p, valid for convex H past its minimizer."""
    if p < pivot:
        raise HypothesisError(f"p={p} left of the minimizer {pivot}")
    return lower_monotone(H, p)


def lower_scaling(H: PiecewiseMap, p: float) -> ExtReal:
    """H(p) * p, the product-form lower bound."""
    return ExtReal(xmul(H.eval(p), p))


def lower_q_conjunction(conj, H: PiecewiseMap, p: float, pivot: float) -> ExtReal:
    """p conj H(p_-), for quasiconvex H with minimum at the pivot, p >= pivot."""
    if p < pivot:
        raise HypothesisError(f"p={p} left of the minimizer {pivot}")
    h_left = H.one_sided(p).lower_left
    return ExtReal(conj.fn(min(p, 1.0), min(max(h_left, 0.0), 1.0)))


def lower_seminormed(semi, H: PiecewiseMap, p_s: float, a0: float) -> ExtReal:
    """S(H(p_S), p_S) for a semicopula S."""
    if p_s < a0:
        raise HypothesisError(f"p_S={p_s} left of the threshold {a0}")
    return ExtReal(semi.fn(min(max(H.eval(p_s), 0.0), 1.0), min(p_s, 1.0)))


def upper_general(inp: BoundInputs) -> ExtReal:
    """[ (H(p^+) v sup H([0,p])) o mu(A) ] v [ sup H o p ]."""
    H, op = inp.H, inp.op
    h_right = H.one_sided(inp.p).upper_right
    sup_head = H.interval_extrema(0.0, inp.p)[1]
    sup_all = H.global_extrema()[1]
    return ExtReal(max(op.fn(max(h_right, sup_head), inp.mu_A), op.fn(sup_all, inp.p)))


def upper_weak_superadditive(inp: BoundInputs) -> ExtReal:
    """[ (H(p^-) v sup H([p,inf])) o mu(A) ] v [ sup H o (mu(A) - p) ]."""
    H, op = inp.H, inp.op
    h_left = H.one_sided(inp.p).upper_left
    sup_tail = H.interval_extrema(inp.p, INF)[1]
    sup_all = H.global_extrema()[1]
    return ExtReal(max(op.fn(max(h_left, sup_tail), inp.mu_A), op.fn(sup_all, xsub(inp.mu_A, inp.p))))


def upper_peaked(H: PiecewiseMap, p: float, c: float, mu_A: float, weakly_superadd: bool) -> ExtReal:
    """Upper bound for continuous H increasing on [0,c] and decreasing beyond."""
    hc = H.eval(min(c, H.xhi))
    if p <= c:
        return ExtReal(min(max(H.eval(p), p), hc, mu_A))
    if not weakly_superadd or math.isinf(p):
        raise HypothesisError("p past the peak requires weak superadditivity on A and finite p")
    return ExtReal(min(max(H.eval(p), xsub(mu_A, p)), hc, mu_A))


def bound_continuous_measure(inp: BoundInputs, which: str) -> ExtReal:
    """The four bounds that trade op-continuity for continuity of the measure."""
    H, op, p, mu_A = inp.H, inp.op, inp.p, inp.mu_A
    if which == "ss1":
        return ExtReal(max(op.fn(H.interval_extrema(p, INF)[0], p), op.fn(H.global_extrema()[0], mu_A)))
    if which == "ss2":
        return ExtReal(max(op.fn(H.interval_extrema(0.0, p)[1], mu_A), op.fn(H.global_extrema()[1], p)))
    if which == "ss3":
        return ExtReal(
            max(op.fn(H.interval_extrema(0.0, p)[0], xsub(mu_A, p)), op.fn(H.global_extrema()[0], mu_A))
        )
    if which == "ss4":
        return ExtReal(
            max(op.fn(H.interval_extrema(p, INF)[1], mu_A), op.fn(H.global_extrema()[1], xsub(mu_A, p)))
        )
    raise InputError(f"unknown variant {which!r}")


def lower_subadditive_continuous(inp: BoundInputs) -> ExtReal:
    """Three-term lower bound for subadditive measures and continuous H."""
    H, op, p, mu_A = inp.H, inp.op, inp.p, inp.mu_A
    return ExtReal(
        max(
            op.fn(H.interval_extrema(p, INF)[0], p),
            op.fn(H.interval_extrema(0.0, p)[0], xsub(mu_A, p)),
            op.fn(H.global_extrema()[0], mu_A),
        )
    )


def upper_superadditive_quasiconcave(inp: BoundInputs) -> ExtReal:
    """Four-term upper bound for superadditive measures and continuous quasiconcave H."""
    H, op, p, mu_A = inp.H, inp.op, inp.p, inp.mu_A
    sup_all = H.global_extrema()[1]
    return ExtReal(
        max(
            op.fn(H.interval_extrema(0.0, p)[1], mu_A),
            op.fn(H.interval_extrema(p, INF)[1], mu_A),
            op.fn(sup_all, p),
            op.fn(sup_all, xsub(mu_A, p)),
        )
    )


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def upper_support_line(
    op: OpSpec,
    H: PiecewiseMap,
    p: float,
    mu_A: float,
    line: SupportLine,
    f_max: float,
    shifted_integral: Callable[[float, float], float],
    grid_points: int = 257,
    refinements: int = 20,
) -> Tuple[ExtReal, float]:
    """min over shifts c of [ (H(p) + m(c-p))^+ o mu(A) ] + integral of (m(f-c))^+.

    Every evaluated shift yields a valid upper bound, so the grid minimum is
    sound regardless of the grid.  The default grid spans
    [-2 mu(A) max(1, m), max f] plus {0, p}, then a golden-section polish
    around the incumbent.
    """
    m, hp = line.slope, line.value

    def g(c: float) -> float:
        return xadd(op.fn(pos_part(hp + m * (c - p)), mu_A), shifted_integral(m, c))

    scale = max(1.0, abs(m))
    if math.isfinite(mu_A):
        lo = -2.0 * mu_A * scale
    else:
        lo = -2.0 * scale * max(1.0, p if math.isfinite(p) else 1.0, f_max if math.isfinite(f_max) else 1.0)
    hi = f_max if math.isfinite(f_max) else max(lo + 1.0, p + 1.0)
    if hi <= lo:
        hi = lo + 1.0
    step = (hi - lo) / (grid_points - 1)
    best_c, best_v = lo, g(lo)
    for i in range(1, grid_points):
        c = lo + i * step
        v = g(c)
        if v < best_v:
            best_v, best_c = v, c
    for c in (0.0, p):
        if math.isfinite(c):
            v = g(c)
            if v < best_v:
                best_v, best_c = v, c
    a, b = best_c - step, best_c + step
    c1 = b - _INVPHI * (b - a)
    c2 = a + _INVPHI * (b - a)
    f1, f2 = g(c1), g(c2)
    for _ in range(refinements):
        if f1 <= f2:
            b, c2, f2 = c2, c1, f1
            c1 = b - _INVPHI * (b - a)
            f1 = g(c1)
        else:
            a, c1, f1 = c1, c2, f2
            c2 = a + _INVPHI * (b - a)
            f2 = g(c2)
        for c, v in ((c1, f1), (c2, f2)):
            if v < best_v:
                best_v, best_c = v, c
    return ExtReal(best_v), best_c


def upper_concave(
    variant: str,
    H: PiecewiseMap,
    p: float,
    mu_A: float,
    line: SupportLine,
    sugeno_shifted: Callable[[float, float], float],
    sugeno_scaled: Callable[[float], float],
) -> ExtReal:
    """Support-line upper bounds for concave H under the min-form integral."""
    m, hp = line.slope, line.value
    if variant == "in99":
        return ExtReal(xadd(min(hp, mu_A), sugeno_shifted(m, p)))
    if variant == "l1":
        return ExtReal(xadd(min(pos_part(hp - p * m), mu_A), sugeno_scaled(m)))
    if variant == "comono":
        if not (0.0 < m <= 1.0):
            raise HypothesisError(f"slope {m} outside (0, 1]")
        return ExtReal(xadd(min(pos_part(hp - p * m), mu_A), min(m, p)))
    raise InputError(f"unknown variant {variant!r}")


def upper_shilkret_concave(H: PiecewiseMap, p: float, mu_A: float, dp: float) -> ExtReal:
    """H(p) mu(A) + [ (H'(p))^+ - H'(p) mu(A) ] p; equals H(p) when mu(A)=1, H'(p)>=0."""
    if not math.isfinite(mu_A):
        return ExtReal(INF)
    return ExtReal(xadd(xmul(H.eval(p), mu_A), xmul(pos_part(dp) - dp * mu_A, p)))


def upper_symmetric(H: PiecewiseMap, p1: float, p2: float, mu_A: float, star) -> ExtReal:
    """[ (H(p1) v p1) ^ mu(A) ] star [ H(-p2) v (-p2) ]."""
    first = min(max(H.eval(p1), p1), mu_A)
    second = max(H.eval(-p2), -p2)
    return ExtReal(star.fn(first, second))


# -- registry -----------------------------------------------------------------------------


_REGISTRY: Dict[str, BoundDef] = {}

ALIASES = {
    "001": "b001",
    "comonotone": "comono",
    "pp1": "shilkret",
    "in2a": "convex",
    "in8": "tw4",
    "in1": "tw1i",
    "in2": "tw1ii",
    "in3": "tw2i",
    "in4": "tw2ii",
}


def _bound(bound_id: str, direction: str, refutable: bool = False):
    def deco(fn):
        _REGISTRY[bound_id] = BoundDef(bound_id, direction, fn, refutable)
        return fn

    return deco


def bound_ids(include_refutable: bool = True) -> List[str]:
    return [b for b, d in _REGISTRY.items() if include_refutable or not d.refutable]


def resolve(bound_id: str) -> BoundDef:
    key = ALIASES.get(bound_id, bound_id)
    try:
        return _REGISTRY[key]
    except KeyError:
        raise InputError(f"unknown bound id {bound_id!r}; known: {sorted(_REGISTRY)}") from None


@_bound("tw1i", "lower")
def _eval_tw1i(ctx: BoundContext) -> Outcome:
    H, op = ctx.require_H(), ctx.op
    p, mu_A = ctx.p_sugeno(), ctx.mu_A
    lhs = ctx.lhs_H(op)
    rhs = float(lower_general(BoundInputs(p, mu_A, H, op))) if math.isfinite(p) else 0.0
    return Outcome(lhs, rhs, _op_rows(op, left=True) + [_p_row(p)])


@_bound("tw1ii", "lower")
def _eval_tw1ii(ctx: BoundContext) -> Outcome:
    H, op = ctx.require_H(), ctx.op
    p, mu_A = ctx.p_sugeno(), ctx.mu_A
    lhs = ctx.lhs_H(op)
    rhs = float(lower_weak_subadditive(BoundInputs(p, mu_A, H, op))) if math.isfinite(p) else 0.0
    hyps = _op_rows(op, left=True) + [
        _p_row(p),
        _pred_row("measure_weakly_subadditive_on_A", ctx.weakly_subadditive_on_A()),
    ]
    return Outcome(lhs, rhs, hyps)


@_bound("flo", "lower")
def _eval_flo(ctx: BoundContext) -> Outcome:
    H = ctx.require_H()
    p = ctx.p_sugeno()
    lhs = ctx.lhs_H(MIN)
    rhs = float(lower_monotone(H, p)) if math.isfinite(p) else 0.0
    hyps = [
        Hypothesis("H_nondecreasing", _shape(ctx, "nondecreasing")),
        Hypothesis("H_left_continuous_at_p", left_continuous_at(H, p) if math.isfinite(p) else False),
        _p_row(p),
    ]
    return Outcome(lhs, rhs, hyps)


@_bound("convex", "lower")
def _eval_convex(ctx: BoundContext) -> Outcome:
    H = ctx.require_H()
    p = ctx.p_sugeno()
    lhs = ctx.lhs_H(MIN)
    rhs = float(lower_monotone(H, p)) if math.isfinite(p) else 0.0
    pivot = ctx.a0 if ctx.a0 is not None else _shape(ctx, "valley")
    has_pivot = pivot is not None
    hyps = [
        Hypothesis("H_convex", _shape(ctx, "convex"), "sampled midpoint check"),
        Hypothesis("H_attains_minimum", has_pivot, f"minimizer near {pivot}" if has_pivot else "no valley shape"),
        Hypothesis("p_at_or_past_minimizer", has_pivot and p >= pivot, f"p={p}"),
        _p_row(p),
    ]
    return Outcome(lhs, rhs, hyps)


@_bound("shilkret", "lower")
def _eval_shilkret_bound(ctx: BoundContext) -> Outcome:
    H = ctx.require_H()
    p, mu_A = ctx.p_sugeno(), ctx.mu_A
    lhs = ctx.lhs_H(PRODUCT)
    rhs = float(lower_scaling(H, p)) if math.isfinite(p) else 0.0
    hyps = [
        Hypothesis("H_nondecreasing", _shape(ctx, "nondecreasing")),
        Hypothesis("H_left_continuous_at_p", left_continuous_at(H, p) if math.isfinite(p) else False),
        Hypothesis("muA_finite", math.isfinite(mu_A), f"mu(A)={mu_A}"),
        _p_row(p),
    ]
    return Outcome(lhs, rhs, hyps)


@_bound("qint", "lower")
def _eval_qint(ctx: BoundContext) -> Outcome:
    H = ctx.require_H()
    if ctx.conj is None:
        raise HypothesisError("qint needs a fuzzy conjunction")
    p = ctx.q_p()
    lhs = ctx.q_lhs()
    pivot = ctx.a0 if ctx.a0 is not None else _shape(ctx, "valley")
    has_pivot = pivot is not None
    h_left = H.one_sided(p).lower_left
    rhs = float(ctx.conj.fn(min(p, 1.0), min(max(h_left, 0.0), 1.0)))
    lo, hi = H.global_extrema()
    hyps = [
        Hypothesis("conj_left_continuous_second", ctx.conj.left_cont_second, "declared"),
        Hypothesis("H_quasiconvex", has_pivot, f"minimizer near {pivot}" if has_pivot else "no valley shape"),
        Hypothesis("H_unit_range", H.xhi <= 1.0 and 0.0 <= lo and hi <= 1.0, "H: [0,1] -> [0,1]"),
        Hypothesis("p_at_or_past_minimizer", has_pivot and p >= pivot, f"p={p}"),
    ]
    return Outcome(lhs, rhs, hyps)


@_bound("seminormed", "lower")
def _eval_seminormed(ctx: BoundContext) -> Outcome:
    H = ctx.require_H()
    if ctx.semi is None:
        raise HypothesisError("seminormed needs a semicopula")
    p_s = ctx.semi_p()
    lhs = ctx.semi_lhs()
    a0 = ctx.a0 if ctx.a0 is not None else 0.0
    rhs = float(ctx.semi.fn(min(max(H.eval(p_s), 0.0), 1.0), min(p_s, 1.0)))
    lo, hi = H.global_extrema()
    nondecr = monotone_on_sampled(H, a0, 1.0, "inc")
    left_cont = all(
        left_continuous_at(H, x) for x in H.knots if a0 < x <= min(1.0, H.xhi)
    )
    hyps = [
        Hypothesis("semi_is_semicopula", ctx.semi.is_semicopula(), "boundary + neutral element checked"),
        Hypothesis("semi_left_continuous_first", ctx.semi.left_cont_first, "declared"),
        Hypothesis("H_unit_range", H.xhi <= 1.0 and 0.0 <= lo and hi <= 1.0, "H: [0,1] -> [0,1]"),
        Hypothesis("H_nondecreasing_left_continuous_above_a0", nondecr and left_cont, f"a0={a0}"),
        Hypothesis("p_at_or_past_a0", p_s >= a0, f"p_S={p_s}"),
    ]
    return Outcome(lhs, rhs, hyps)


@_bound("tw2i", "upper")
def _eval_tw2i(ctx: BoundContext) -> Outcome:
    H, op = ctx.require_H(), ctx.op
    p, mu_A = ctx.p_sugeno(), ctx.mu_A
    lhs = ctx.lhs_H(op)
    rhs = float(upper_general(BoundInputs(p, mu_A, H, op))) if math.isfinite(p) else INF
    return Outcome(lhs, rhs, _op_rows(op, right=True) + [_p_row(p)])


@_bound("tw2ii", "upper")
def _eval_tw2ii(ctx: BoundContext) -> Outcome:
    H, op = ctx.require_H(), ctx.op
    p, mu_A = ctx.p_sugeno(), ctx.mu_A
    lhs = ctx.lhs_H(op)
    rhs = float(upper_weak_superadditive(BoundInputs(p, mu_A, H, op))) if math.isfinite(p) else INF
    hyps = _op_rows(op, right=True) + [
        _p_row(p),
        _pred_row("measure_weakly_superadditive_on_A", ctx.weakly_superadditive_on_A()),
    ]
    return Outcome(lhs, rhs, hyps)


@_bound("co2", "upper")
def _eval_co2(ctx: BoundContext) -> Outcome:
    H = ctx.require_H()
    p, mu_A = ctx.p_sugeno(), ctx.mu_A
    lhs = ctx.lhs_H(MIN)
    c = ctx.c_pivot if ctx.c_pivot is not None else _shape(ctx, "peak")
    has_peak = c is not None
    hyps = [
        Hypothesis("H_continuous", _shape(ctx, "continuous")),
        Hypothesis("H_increasing_then_decreasing", has_peak, f"peak near {c}" if has_peak else "no peak shape"),
        _p_row(p),
    ]
    if not has_peak or not math.isfinite(p):
        return Outcome(lhs, INF, hyps + [Hypothesis("c_finite", False, "no usable peak")])
    hyps.append(Hypothesis("c_finite", math.isfinite(c), f"c={c}"))
    if p <= c:
        rhs = float(upper_peaked(H, p, c, mu_A, False))
    else:
        ws = ctx.weakly_superadditive_on_A()
        hyps.append(_pred_row("measure_weakly_superadditive_on_A", ws))
        rhs = float(min(max(H.eval(p), xsub(mu_A, p)), H.eval(min(c, H.xhi)), mu_A))
    return Outcome(lhs, rhs, hyps)


def _eval_ss(ctx: BoundContext, which: str, direction: str, extra: Optional[str]) -> Outcome:
    H, op = ctx.require_H(), ctx.op
    p, mu_A = ctx.p_sugeno(), ctx.mu_A
    lhs = ctx.lhs_H(op)
    if math.isfinite(p):
        rhs = float(bound_continuous_measure(BoundInputs(p, mu_A, H, op), which))
    else:
        rhs = 0.0 if direction == "lower" else INF
    hyps = _op_rows(op) + [_p_row(p), _pred_row("measure_continuous", ctx.measure_continuous())]
    if extra == "weak_sub":
        hyps.append(_pred_row("measure_weakly_subadditive_on_A", ctx.weakly_subadditive_on_A()))
    elif extra == "weak_super":
        hyps.append(_pred_row("measure_weakly_superadditive_on_A", ctx.weakly_superadditive_on_A()))
    return Outcome(lhs, rhs, hyps)


@_bound("ss1", "lower")
def _eval_ss1(ctx):
    return _eval_ss(ctx, "ss1", "lower", None)


@_bound("ss2", "upper")
def _eval_ss2(ctx):
    return _eval_ss(ctx, "ss2", "upper", None)


@_bound("ss3", "lower")
def _eval_ss3(ctx):
    return _eval_ss(ctx, "ss3", "lower", "weak_sub")


@_bound("ss4", "upper")
def _eval_ss4(ctx):
    return _eval_ss(ctx, "ss4", "upper", "weak_super")


@_bound("noo1", "lower")
def _eval_noo1(ctx: BoundContext) -> Outcome:
    H, op = ctx.require_H(), ctx.op
    p, mu_A = ctx.p_sugeno(), ctx.mu_A
    lhs = ctx.lhs_H(op)
    rhs = float(lower_subadditive_continuous(BoundInputs(p, mu_A, H, op))) if math.isfinite(p) else 0.0
    hyps = _op_rows(op, left=True) + [
        _p_row(p),
        Hypothesis("H_continuous", _shape(ctx, "continuous")),
        _pred_row("measure_subadditive", ctx.subadditive()),
    ]
    return Outcome(lhs, rhs, hyps)


@_bound("in3a", "upper")
def _eval_in3a(ctx: BoundContext) -> Outcome:
    H, op = ctx.require_H(), ctx.op
    p, mu_A = ctx.p_sugeno(), ctx.mu_A
    lhs = ctx.lhs_H(op)
    rhs = float(upper_superadditive_quasiconcave(BoundInputs(p, mu_A, H, op))) if math.isfinite(p) else INF
    peak = _shape(ctx, "peak")
    hyps = _op_rows(op, right=True) + [
        _p_row(p),
        Hypothesis("H_continuous", _shape(ctx, "continuous")),
        Hypothesis("H_quasiconcave", peak is not None, f"peak near {peak}" if peak is not None else "no peak"),
        _pred_row("measure_superadditive", ctx.superadditive()),
    ]
    return Outcome(lhs, rhs, hyps)


@_bound("tw4", "upper")
def _eval_tw4(ctx: BoundContext) -> Outcome:
    H, op = ctx.require_H(), ctx.op
    companion = ctx.companion
    p, mu_A = ctx.integral_f(companion), ctx.mu_A
    lhs = ctx.lhs_H(op)
    hyps = _op_rows(op, subdist=True) + [_p_row(p)]
    if not math.isfinite(p):
        return Outcome(lhs, INF, hyps + [Hypothesis("support_line_valid", False, "p not finite")])
    line, support_row = _support(ctx, p)
    hyps.append(support_row)
    f_max = ctx.f_range()[1]
    rhs, c_star = upper_support_line(
        op, H, p, mu_A, line, f_max, lambda m, c: ctx.integral_pos_shifted(op, m, c)
    )
    return Outcome(lhs, float(rhs), hyps, minimizer=c_star)


def _eval_concave_family(ctx: BoundContext, variant: str) -> Outcome:
    H = ctx.require_H()
    p, mu_A = ctx.p_sugeno(), ctx.mu_A
    lhs = ctx.lhs_H(MIN)
    hyps = [Hypothesis("H_concave", _shape(ctx, "concave"), "sampled midpoint check"), _p_row(p)]
    if not math.isfinite(p):
        return Outcome(lhs, INF, hyps + [Hypothesis("support_line_valid", False, "p not finite")])
    line, support_row = _support(ctx, p)
    hyps.append(support_row)
    m = line.slope
    if variant == "comono":
        f_lo, f_hi = ctx.f_range()
        hyps.append(Hypothesis("slope_in_unit_interval", 0.0 < m <= 1.0, f"m={m}"))
        hyps.append(Hypothesis("f_range_unit", f_lo >= 0.0 and f_hi <= 1.0, f"range [{f_lo}, {f_hi}]"))
        rhs = xadd(min(pos_part(line.value - p * m), mu_A), min(m, p))
    elif variant == "l1":
        rhs = xadd(min(pos_part(line.value - p * m), mu_A), ctx.sugeno_scaled(m))
    else:  # in99
        rhs = xadd(min(line.value, mu_A), ctx.integral_pos_shifted(MIN, m, p))
    return Outcome(lhs, float(rhs), hyps)


@_bound("in99", "upper")
def _eval_in99(ctx):
    return _eval_concave_family(ctx, "in99")


@_bound("l1", "upper")
def _eval_l1(ctx):
    return _eval_concave_family(ctx, "l1")


@_bound("comono", "upper")
def _eval_comono(ctx):
    return _eval_concave_family(ctx, "comono")


@_bound("in80", "upper")
def _eval_in80(ctx: BoundContext) -> Outcome:
    H = ctx.require_H()
    p, mu_A = ctx.p_shilkret(), ctx.mu_A
    lhs = ctx.lhs_H(PRODUCT)
    hyps = [
        Hypothesis("H_concave", _shape(ctx, "concave"), "sampled midpoint check"),
        _p_row(p),
        Hypothesis("muA_finite", math.isfinite(mu_A), f"mu(A)={mu_A}"),
    ]
    if not math.isfinite(p):
        return Outcome(lhs, INF, hyps + [Hypothesis("H_differentiable_at_p", False, "p not finite")])
    if ctx.m_p is not None:
        dp = float(ctx.m_p)
        hyps.append(Hypothesis("H_differentiable_at_p", True, f"slope override {dp}"))
    else:
        dl, dr = H.one_sided_derivatives(p)
        ok = dl is not None and dr is not None and math.isfinite(dl) and math.isfinite(dr) and abs(dl - dr) <= 1e-9
        dp = (dl + dr) / 2.0 if ok else (dr if dr is not None else (dl or 0.0))
        hyps.append(Hypothesis("H_differentiable_at_p", ok, f"one-sided derivatives {dl}, {dr}"))
    rhs = float(upper_shilkret_concave(H, p, mu_A, dp))
    return Outcome(lhs, rhs, hyps)


@_bound("b001", "upper")
def _eval_b001(ctx: BoundContext) -> Outcome:
    H = ctx.require_H()
    star = ctx.star
    mu_A = ctx.mu_A
    p1, p2 = ctx.p_parts()
    s1, s2 = ctx.hf_part_integrals()
    lhs = star.fn(s1, -s2)
    sup_h = H.global_extrema()[1]
    finite = math.isfinite(p1) and math.isfinite(p2)
    rhs = float(upper_symmetric(H, p1, p2, mu_A, star)) if finite else INF
    hyps = [
        Hypothesis("H_nondecreasing", _shape(ctx, "nondecreasing")),
        Hypothesis("H_zero_at_zero", abs(H.eval(0.0)) <= _EQ, f"H(0)={H.eval(0.0)}"),
        Hypothesis("star_nondecreasing", ctx.star.nondecreasing, f"{star.name}: declared"),
        _pred_row("measure_continuous", ctx.measure_continuous()),
        Hypothesis("p1_within_sup_H", p1 <= sup_h, f"p1={p1}, sup H={sup_h}"),
        Hypothesis("part_integrals_finite", finite, f"p1={p1}, p2={p2}"),
    ]
    return Outcome(float(lhs), rhs, hyps)


def _eval_mixed(ctx: BoundContext, upper: bool) -> Outcome:
    H = ctx.require_H()
    hyps = [
        Hypothesis("H_nonincreasing_on_nonpositives", monotone_on_sampled(H, H.xlo, 0.0, "dec")),
        Hypothesis("H_nondecreasing_on_nonnegatives", monotone_on_sampled(H, 0.0, H.xhi, "inc")),
        Hypothesis("H_zero_at_zero", abs(H.eval(0.0)) <= _EQ, f"H(0)={H.eval(0.0)}"),
        Hypothesis("H_nonnegative", H.global_extrema()[0] >= -_EQ),
    ]
    lhs = ctx.lhs_H(MIN)
    a = ctx.sugeno_H_of(lambda v: H.eval(max(v, 0.0)), "H_fplus")
    b = ctx.sugeno_H_of(lambda v: H.eval(min(v, 0.0)), "Htilde_fminus")
    if upper:
        hyps.append(_pred_row("measure_subadditive", ctx.subadditive()))
        return Outcome(lhs, xadd(a, b), hyps)
    return Outcome(lhs, max(a, b), hyps)


@_bound("mixed_lower", "lower")
def _eval_mixed_lower(ctx):
    return _eval_mixed(ctx, upper=False)


@_bound("mixed_upper", "upper")
def _eval_mixed_upper(ctx):
    return _eval_mixed(ctx, upper=True)


@_bound("naive_convex", "lower", refutable=True)
def _eval_naive_convex(ctx: BoundContext) -> Outcome:
    """The uncorrected convex claim: integral of H(f) >= H(p).  Known invalid."""
    H = ctx.require_H()
    p = ctx.p_sugeno()
    lhs = ctx.lhs_H(MIN)
    rhs = H.eval(p) if math.isfinite(p) else 0.0
    hyps = [Hypothesis("H_convex", _shape(ctx, "convex"), "sampled midpoint check"), _p_row(p)]
    return Outcome(lhs, rhs, hyps, notes=("refutable claim: expected to fail on suitable instances",))


@_bound("nn1", "upper", refutable=True)
def _eval_nn1(ctx: BoundContext) -> Outcome:
    """The concave upper claim rhs = [m(b - p) + H(p)] / (m + 1).  Known invalid for m > 0."""
    H = ctx.require_H()
    p = ctx.p_sugeno()
    lhs = ctx.lhs_H(MIN)
    hyps = [Hypothesis("H_concave", _shape(ctx, "concave"), "sampled midpoint check"), _p_row(p)]
    if not math.isfinite(p):
        return Outcome(lhs, INF, hyps)
    line, support_row = _support(ctx, p)
    hyps.append(support_row)
    hyps.append(Hypothesis("slope_positive", line.slope > 0.0, f"m={line.slope}"))
    b = ctx.f_range()[1]
    m = line.slope
    rhs = (m * (b - p) + line.value) / (m + 1.0) if math.isfinite(b) else INF
    return Outcome(lhs, rhs, hyps, notes=("refutable claim: expected to fail on suitable instances",))


# -- report assembly ------------------------------------------------------------------------


def _signed_gap(a: float, b: float) -> float:
    """a - b with equal infinities treated as gap 0."""
    if a == b:
        return 0.0
    return xsub(a, b)


def check_bound(ctx: BoundContext, bound_id: str, tol: Optional[float] = None) -> BoundReport:
    """Evaluate one bound on one instance and assemble the report."""
    bd = resolve(bound_id)
    out = bd.evaluate(ctx)
    tolerance = ctx.tol if tol is None else tol
    if bd.direction == "lower":
        slack = _signed_gap(out.lhs, out.rhs)
    else:
        slack = _signed_gap(out.rhs, out.lhs)
    holds = slack >= -tolerance
    return BoundReport(
        bound_id=bd.bound_id,
        direction=bd.direction,
        lhs=ExtReal(out.lhs),
        rhs=ExtReal(out.rhs),
        hypotheses=tuple(out.hyps),
        holds=holds,
        slack=slack,
        hypotheses_ok=all(h.holds for h in out.hyps),
        minimizer=out.minimizer,
        notes=out.notes,
    )
