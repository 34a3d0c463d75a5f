"""Instance model shared by the bound evaluators, the fuzzer, and the wire layer.

A *discrete* instance is a monotone measure on a finite space, a subset A, and
a per-element function (signed values are allowed; the nonnegative-function
integrals reject them, the sign-splitting ones consume them).  An *interval*
instance carries closed-form survival profiles instead; whatever profile is
missing makes the bounds that need it structurally inapplicable.

``BoundContext`` bundles an instance with the transform H and the operations
under study and caches every integral and measure predicate, since one fuzz
trial evaluates many bounds against the same data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Optional, Tuple

from .binops import MIN, PRODUCT, PLUS, MixedOpSpec, OpSpec, UnitOpSpec
from .errors import HypothesisError, InputError
from .extreal import pos_part
from .integrals import (
    generalized_integral,
    integrate_profile,
    q_integral,
    scale_profile,
    seminormed,
    shift_profile,
)
from .measures import (
    Mask,
    MonotoneMeasure,
    SurvivalProfile,
    is_subadditive,
    is_superadditive,
    is_weakly_subadditive,
    is_weakly_superadditive,
)
from .transforms import PiecewiseMap


@dataclass(frozen=True)
class DiscreteInstance:
    measure: MonotoneMeasure
    A: Mask
    f: Tuple[float, ...]

    def __post_init__(self):
        self.measure.space.check_mask(self.A)
        if len(self.f) != self.measure.space.n:
            raise InputError("function length must equal the space size")


@dataclass(frozen=True)
class IntervalInstance:
    """Closed-form instance: profiles stand in for (measure, A, f).

    ``declared`` carries measure properties that cannot be enumerated in
    interval mode (e.g. "continuous", "subadditive", "weakly_subadditive_on_A").
    """

    mu_A: float
    f_profile: Optional[SurvivalProfile] = None
    hf_profile: Optional[SurvivalProfile] = None
    f_range: Optional[Tuple[float, float]] = None
    fplus_profile: Optional[SurvivalProfile] = None
    fminus_profile: Optional[SurvivalProfile] = None
    h1f_profile: Optional[SurvivalProfile] = None
    h2f_profile: Optional[SurvivalProfile] = None
    declared: FrozenSet[str] = frozenset()


Instance = object  # DiscreteInstance | IntervalInstance


class BoundContext:
    """An instance plus (H, operations, knobs), with cached evaluations."""

    def __init__(
        self,
        instance,
        H: Optional[PiecewiseMap] = None,
        op: OpSpec = MIN,
        conj: Optional[UnitOpSpec] = None,
        semi: Optional[UnitOpSpec] = None,
        star: MixedOpSpec = PLUS,
        companion: Optional[OpSpec] = None,
        m_p: Optional[float] = None,
        c_pivot: Optional[float] = None,
        a0: Optional[float] = None,
        tol: float = 1e-9,
        profile_tol: float = 1e-10,
    ):
        if not isinstance(instance, (DiscreteInstance, IntervalInstance)):
            raise InputError("instance must be discrete or interval")
        self.instance = instance
        self.H = H
        self.op = op
        self.conj = conj
        self.semi = semi
        self.star = star
        self.companion = companion if companion is not None else op
        self.m_p = m_p
        self.c_pivot = c_pivot
        self.a0 = a0
        self.tol = tol
        self.profile_tol = profile_tol
        self._cache: Dict = {}

    # -- basics -----------------------------------------------------------------

    @property
    def discrete(self) -> bool:
        return isinstance(self.instance, DiscreteInstance)

    def _memo(self, key, compute):
        cache = self._cache
        if key not in cache:
            cache[key] = compute()
        return cache[key]

    @property
    def mu_A(self) -> float:
        if self.discrete:
            return self.instance.measure.mask_value(self.instance.A)
        return self.instance.mu_A

    def f_on_A(self) -> Tuple[float, ...]:
        if not self.discrete:
            raise HypothesisError("pointwise values are unavailable in interval mode")
        inst = self.instance
        return self._memo("f_on_A", lambda: tuple(inst.f[i] for i in range(inst.measure.space.n) if inst.A >> i & 1))

    def f_range(self) -> Tuple[float, float]:
        if self.discrete:
            vals = self.f_on_A()
            if not vals:
                return (0.0, 0.0)
            return (min(vals), max(vals))
        if self.instance.f_range is None:
            raise HypothesisError("interval instance lacks a declared function range")
        return self.instance.f_range

    def f_nonneg(self) -> bool:
        if self.discrete:
            return all(v >= 0.0 for v in self.f_on_A())
        rng = self.instance.f_range
        return rng is None or rng[0] >= 0.0

    def require_H(self) -> PiecewiseMap:
        if self.H is None:
            raise HypothesisError("no transform H supplied")
        return self.H

    def hf_values(self) -> Tuple[float, ...]:
        """H applied pointwise to f (full space, off-A values included)."""
        H = self.require_H()
        inst = self.instance
        if not self.discrete:
            raise HypothesisError("pointwise values are unavailable in interval mode")
        return self._memo("hf_values", lambda: tuple(H.eval(v) for v in inst.f))

    # -- integrals ----------------------------------------------------------------

    def _profile_integral(self, op: OpSpec, profile: SurvivalProfile, key) -> float:
        return self._memo(
            ("prof", op.name, key),
            lambda: float(integrate_profile(op, profile, self.profile_tol, validate=False).value),
        )

    def integral_f(self, op: OpSpec) -> float:
        """Integral of f itself under ``op`` (the p of most bounds)."""
        if self.discrete:
            inst = self.instance
            return self._memo(
                ("p", op.name),
                lambda: float(generalized_integral(op, inst.measure, inst.A, inst.f).value),
            )
        prof = self.instance.f_profile
        if prof is None:
            raise HypothesisError("interval instance lacks a profile for f")
        return self._profile_integral(op, prof, "f")

    def p_sugeno(self) -> float:
        return self.integral_f(MIN)

    def p_shilkret(self) -> float:
        return self.integral_f(PRODUCT)

    def lhs_H(self, op: OpSpec) -> float:
        """Integral of H(f) under ``op`` (the left-hand side of most bounds)."""
        if self.discrete:
            inst = self.instance
            values = self.hf_values()
            return self._memo(
                ("lhs", op.name),
                lambda: float(generalized_integral(op, inst.measure, inst.A, values).value),
            )
        prof = self.instance.hf_profile
        if prof is None:
            raise HypothesisError("interval instance lacks a profile for H(f)")
        return self._profile_integral(op, prof, "hf")

    def q_p(self) -> float:
        if self.conj is None:
            raise HypothesisError("no fuzzy conjunction supplied")
        inst = self.instance
        if not self.discrete:
            raise HypothesisError("the q-integral is defined on finite spaces")
        return self._memo("q_p", lambda: float(q_integral(self.conj, inst.measure, inst.f).value))

    def q_lhs(self) -> float:
        if self.conj is None:
            raise HypothesisError("no fuzzy conjunction supplied")
        inst = self.instance
        values = self.hf_values()
        return self._memo("q_lhs", lambda: float(q_integral(self.conj, inst.measure, values).value))

    def semi_p(self) -> float:
        if self.semi is None:
            raise HypothesisError("no semicopula supplied")
        inst = self.instance
        return self._memo("semi_p", lambda: float(seminormed(self.semi, inst.measure, inst.A, inst.f).value))

    def semi_lhs(self) -> float:
        if self.semi is None:
            raise HypothesisError("no semicopula supplied")
        inst = self.instance
        values = self.hf_values()
        return self._memo(
            "semi_lhs", lambda: float(seminormed(self.semi, inst.measure, inst.A, values).value)
        )

    def integral_pos_shifted(self, op: OpSpec, m: float, c: float) -> float:
        """Integral of (m*(f - c))^+ under ``op``."""
        if m == 0.0:
            return 0.0
        if self.discrete:
            inst = self.instance
            values = tuple(pos_part(m * (v - c)) for v in inst.f)
            return float(generalized_integral(op, inst.measure, inst.A, values).value)
        prof = self.instance.f_profile
        if prof is None:
            raise HypothesisError("interval instance lacks a profile for f")
        if m < 0.0:
            raise HypothesisError("negative slopes need pointwise values; unavailable in interval mode")
        shifted = shift_profile(prof, m, c, self.mu_A)
        return float(integrate_profile(op, shifted, self.profile_tol, validate=False).value)

    def sugeno_scaled(self, m: float) -> float:
        """Sugeno integral of max(m, 0) * f."""
        m = pos_part(m)
        if m == 0.0:
            return 0.0
        if self.discrete:
            inst = self.instance
            values = tuple(m * v for v in inst.f)
            return float(generalized_integral(MIN, inst.measure, inst.A, values).value)
        prof = self.instance.f_profile
        if prof is None:
            raise HypothesisError("interval instance lacks a profile for f")
        return float(integrate_profile(MIN, scale_profile(prof, m), self.profile_tol, validate=False).value)

    # -- sign splitting ---------------------------------------------------------------

    def p_parts(self) -> Tuple[float, float]:
        """(Sugeno of f^+, Sugeno of f^-)."""
        if self.discrete:
            inst = self.instance

            def compute():
                fplus = tuple(pos_part(v) for v in inst.f)
                fminus = tuple(pos_part(-v) for v in inst.f)
                p1 = float(generalized_integral(MIN, inst.measure, inst.A, fplus).value)
                p2 = float(generalized_integral(MIN, inst.measure, inst.A, fminus).value)
                return (p1, p2)

            return self._memo("p_parts", compute)
        inst = self.instance
        if inst.fplus_profile is None or inst.fminus_profile is None:
            raise HypothesisError("interval instance lacks profiles for the parts of f")
        return (
            self._profile_integral(MIN, inst.fplus_profile, "fplus"),
            self._profile_integral(MIN, inst.fminus_profile, "fminus"),
        )

    def hf_part_integrals(self) -> Tuple[float, float]:
        """(Sugeno of (H(f))^+, Sugeno of (-H(f))^+), the split of H(f)."""
        if self.discrete:
            inst = self.instance

            def compute():
                hf = self.hf_values()
                plus = tuple(pos_part(v) for v in hf)
                minus = tuple(pos_part(-v) for v in hf)
                s1 = float(generalized_integral(MIN, inst.measure, inst.A, plus).value)
                s2 = float(generalized_integral(MIN, inst.measure, inst.A, minus).value)
                return (s1, s2)

            return self._memo("hf_parts", compute)
        inst = self.instance
        if inst.h1f_profile is None or inst.h2f_profile is None:
            raise HypothesisError("interval instance lacks profiles for the parts of H(f)")
        return (
            self._profile_integral(MIN, inst.h1f_profile, "h1f"),
            self._profile_integral(MIN, inst.h2f_profile, "h2f"),
        )

    def sugeno_H_of(self, transform: Callable[[float], float], key) -> float:
        """Sugeno integral of x -> transform(f(x)) (pointwise; discrete only)."""
        if not self.discrete:
            raise HypothesisError("pointwise transforms are unavailable in interval mode")
        inst = self.instance
        return self._memo(
            ("sugeno_of", key),
            lambda: float(
                generalized_integral(MIN, inst.measure, inst.A, tuple(transform(v) for v in inst.f)).value
            ),
        )

    # -- measure predicates --------------------------------------------------------------

    def _predicate(self, name: str, compute) -> Tuple[bool, str]:
        if self.discrete:
            def run():
                res = compute()
                detail = "checked over the powerset" if res.holds else f"witness subset mask(s): {res.witness}"
                return (res.holds, detail)

            return self._memo(("pred", name), run)
        declared = self.instance.declared
        if name in declared:
            return (True, "declared for this interval instance")
        return (False, "not declared; interval measures are not enumerable")

    def weakly_subadditive_on_A(self) -> Tuple[bool, str]:
        return self._predicate(
            "weakly_subadditive_on_A",
            lambda: is_weakly_subadditive(self.instance.measure, self.instance.A),
        )

    def weakly_superadditive_on_A(self) -> Tuple[bool, str]:
        return self._predicate(
            "weakly_superadditive_on_A",
            lambda: is_weakly_superadditive(self.instance.measure, self.instance.A),
        )

    def subadditive(self) -> Tuple[bool, str]:
        return self._predicate("subadditive", lambda: is_subadditive(self.instance.measure))

    def superadditive(self) -> Tuple[bool, str]:
        return self._predicate("superadditive", lambda: is_superadditive(self.instance.measure))

    def measure_continuous(self) -> Tuple[bool, str]:
        if self.discrete:
            return (True, "finite space: set sequences stabilize, continuity is automatic")
        if "continuous" in self.instance.declared:
            return (True, "declared for this interval instance")
        return (False, "not declared")
