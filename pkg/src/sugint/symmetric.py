"""Sign-splitting machinery: symmetric and asymmetric integrals of signed functions.

A signed function splits into positive/negative parts f+ = f v 0 and
f- = (-f) v 0; the star-symmetric integral is Su(f+) star (-Su(f-)) for a
nondecreasing mixing operation star (addition, or the symmetric maximum whose
tie at equal magnitudes resolves to 0 because sign(0) = 0).

A nondecreasing transform H with H(0) = 0 splits into H1(x) = H(x) and
H2(x) = -H(-x) on [0, inf), giving the pointwise identities
(H(f))^+ = H1(f+) and (-H(f)) v 0 = H2(f-).
"""

from __future__ import annotations

import math
from typing import Optional, Sequence, Tuple

from .binops import MIN, MixedOpSpec, OpSpec
from .bounds import upper_symmetric
from .errors import HypothesisError, InputError
from .extreal import ExtReal, pos_part
from .instances import BoundContext, DiscreteInstance
from .integrals import generalized_integral
from .measures import Mask, MonotoneMeasure
from .transforms import PiecewiseMap


def split_parts(f: Sequence[float]) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    """(f+, f-) with f = f+ - f- and min(f+, f-) = 0 pointwise."""
    fplus = tuple(pos_part(v) for v in f)
    fminus = tuple(pos_part(-v) for v in f)
    return fplus, fminus


def split_transform(H: PiecewiseMap) -> Tuple[PiecewiseMap, PiecewiseMap]:
    """(H1, H2) with H1 = H on [0, inf) and H2(x) = -H(-x).

    Requires H nondecreasing with H(0) = 0; both parts are then nondecreasing
    maps into [0, inf] vanishing at 0.
    """
    if H.xlo >= 0:
        raise InputError("split needs a transform defined on negative arguments")
    if abs(H.eval(0.0)) > 1e-12:
        raise InputError(f"split requires H(0) = 0, got {H.eval(0.0)}")
    if not H.is_nondecreasing():
        raise InputError("split requires a nondecreasing transform")
    return H.restrict_nonneg(), H.reflect_negate_nonpos()


def symmetric_integral(
    measure: MonotoneMeasure, A: Mask, f: Sequence[float], star: MixedOpSpec
) -> ExtReal:
    """Su(f+) star (-Su(f-)); both part integrals must be finite."""
    fplus, fminus = split_parts(f)
    p1 = float(generalized_integral(MIN, measure, A, fplus).value)
    p2 = float(generalized_integral(MIN, measure, A, fminus).value)
    if math.isinf(p1) or math.isinf(p2):
        raise HypothesisError("symmetric integral needs both part integrals finite")
    return ExtReal(star.fn(p1, -p2))


def asymmetric_integral(
    op: OpSpec,
    star: MixedOpSpec,
    mu: MonotoneMeasure,
    nu: MonotoneMeasure,
    A: Mask,
    g: Sequence[float],
) -> ExtReal:
    """Positive part under mu, negative part under nu, joined by star."""
    gplus, gminus = split_parts(g)
    p1 = float(generalized_integral(op, mu, A, gplus).value)
    p2 = float(generalized_integral(op, nu, A, gminus).value)
    if math.isinf(p1) or math.isinf(p2):
        raise HypothesisError("asymmetric integral needs both part integrals finite")
    return ExtReal(star.fn(p1, -p2))


def upper_bound_001(
    H: PiecewiseMap, p1: float, p2: float, mu_A: float, star: MixedOpSpec
) -> ExtReal:
    """[ (H(p1) v p1) ^ mu(A) ] star [ H(-p2) v (-p2) ]."""
    sup_h = H.global_extrema()[1]
    if p1 > sup_h:
        raise HypothesisError(f"p1={p1} exceeds sup H={sup_h}")
    if not (math.isfinite(p1) and math.isfinite(p2)):
        raise HypothesisError("both part integrals must be finite")
    return upper_symmetric(H, p1, p2, mu_A, star)


def mixed_monotone_bounds(
    measure: MonotoneMeasure, A: Mask, f: Sequence[float], H: PiecewiseMap
) -> Tuple[ExtReal, Optional[ExtReal]]:
    """(lower, upper) bounds of Su(H(f)) for V-shaped H (H(0)=0, nonneg).

    lower = Su(H(f+)) v Su(H~(f-)) always; upper = their sum, only meaningful
    for subadditive measures (the caller checks; None is returned when the
    sum is not finite-safe).
    """
    ctx = BoundContext(DiscreteInstance(measure, A, tuple(float(v) for v in f)), H)
    a = ctx.sugeno_H_of(lambda v: H.eval(max(v, 0.0)), "H_fplus")
    b = ctx.sugeno_H_of(lambda v: H.eval(min(v, 0.0)), "Htilde_fminus")
    lower = ExtReal(max(a, b))
    upper = ExtReal(a + b) if math.isfinite(a) and math.isfinite(b) else None
    return lower, upper
