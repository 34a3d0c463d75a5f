import math
import random

import pytest

from sugint.binops import CEIL_MIN, MIN, PRODUCT, OpFlags, OpSpec, unit_op
from sugint.errors import HypothesisError, InputError, SearchError
from sugint.extreal import INF
from sugint.integrals import (
    generalized_integral,
    integrate_profile,
    q_integral,
    scale_profile,
    seminormed,
    shift_profile,
    shilkret,
    sugeno,
)
from sugint.measures import FiniteSpace, MonotoneMeasure, SurvivalProfile
from sugint.transforms import Expr, PiecewiseMap
from sugint.verify import oracle_integral, random_measure


def counting_five():
    space = FiniteSpace(5)
    return MonotoneMeasure.counting(space), space.full, (1.0, 2.0, 3.0, 4.0, 5.0)


class TestDiscreteExact:
    def test_counting_identity(self):
        measure, A, f = counting_five()
        res = sugeno(measure, A, f)
        assert res.value == 3.0 and res.mode == "exact" and res.argmax_t == 3.0
        assert res.error_bound is None

    def test_counting_quadratic_transform(self):
        measure, A, f = counting_five()
        hf = tuple(v * v / 3.0 for v in f)
        assert sugeno(measure, A, hf).value == 3.0

    def test_constant_function(self):
        measure = MonotoneMeasure.counting(FiniteSpace(3))
        res = generalized_integral(MIN, measure, 0b111, (0.8, 0.8, 0.8))
        assert res.value == pytest.approx(min(0.8, 3.0))
        res = generalized_integral(PRODUCT, measure, 0b111, (0.8, 0.8, 0.8))
        assert res.value == pytest.approx(0.8 * 3.0)

    def test_scaled_indicator_reaches_mu(self):
        space = FiniteSpace(4)
        measure = MonotoneMeasure.counting(space)
        A = 0b0110
        mu_a = float(measure.value_of(A))
        f = tuple(mu_a if A >> i & 1 else 0.0 for i in range(4))
        assert sugeno(measure, A, f).value == mu_a

    def test_product_two_point_frozen(self):
        # closure fills mu({0}) = 0; candidates t=1 -> 1*2, t=2 -> 2*1
        space = FiniteSpace(2)
        measure = MonotoneMeasure(space, {0: 0.0, 0b10: 1.0, 0b11: 2.0}, mode="closure")
        res = generalized_integral(PRODUCT, measure, 0b11, (1.0, 2.0))
        assert res.value == 2.0
        assert res.argmax_t == 1.0  # smallest maximizing candidate

    def test_signed_function_rejected(self):
        measure = MonotoneMeasure.counting(FiniteSpace(2))
        with pytest.raises(InputError):
            sugeno(measure, 0b11, (-0.5, 1.0))

    def test_infinite_value_candidate(self):
        space = FiniteSpace(3)
        measure = MonotoneMeasure.counting(space)
        res = sugeno(measure, 0b111, (1.0, INF, 2.0))
        assert res.value == 2.0  # t=2 beats t=inf (inf ^ 1 = 1)
        assert res.value == oracle_integral(MIN, measure, 0b111, (1.0, INF, 2.0))
        res = generalized_integral(PRODUCT, measure, 0b111, (1.0, INF, 2.0))
        assert res.value == INF

    def test_missing_zero_absorption_is_hypothesis_error(self):
        bad = OpSpec("shifted", lambda a, b: a + b, OpFlags(zero_absorbing=False))
        measure = MonotoneMeasure.counting(FiniteSpace(2))
        with pytest.raises(HypothesisError):
            generalized_integral(bad, measure, 0b11, (1.0, 2.0))

    def test_non_left_continuous_reports_approximate(self):
        measure = MonotoneMeasure.counting(FiniteSpace(3))
        res = generalized_integral(CEIL_MIN, measure, 0b111, (0.5, 1.5, 2.5))
        assert res.mode == "approximate" and res.error_bound == 0.0
        assert res.value == oracle_integral(CEIL_MIN, measure, 0b111, (0.5, 1.5, 2.5))


class TestNamedIntegrals:
    def test_shilkret_counting_frozen(self):
        measure, A, f = counting_five()
        assert shilkret(measure, A, f).value == 9.0  # max of t * (6 - t) on {1..5}

    def test_shilkret_dominates_squared_sugeno(self):
        rng = random.Random(2)
        for _ in range(100):
            n = rng.randint(2, 5)
            measure = random_measure(rng, n, "general", 2.0)
            A = rng.getrandbits(n) or 1
            f = tuple(rng.uniform(0, 2) for _ in range(n))
            assert float(shilkret(measure, A, f).value) >= float(sugeno(measure, A, f).value) ** 2 - 1e-12

    def test_q_integral_min_matches_sugeno_on_unit_instances(self):
        rng = random.Random(3)
        for _ in range(50):
            n = rng.randint(2, 5)
            measure = random_measure(rng, n, "general", 1.0)
            f = tuple(rng.random() for _ in range(n))
            q = q_integral(unit_op("min"), measure, f)
            s = sugeno(measure, measure.space.full, f)
            assert float(q.value) == pytest.approx(float(s.value), abs=1e-12)

    def test_q_integral_product_two_candidates_frozen(self):
        space = FiniteSpace(2)
        measure = MonotoneMeasure(space, {0: 0.0, 0b01: 0.25, 0b10: 0.25, 0b11: 1.0})
        res = q_integral(unit_op("product"), measure, (0.5, 1.0))
        assert res.value == pytest.approx(0.5)  # max(1*0.5, 0.25*1)

    def test_q_integral_zero_function(self):
        measure = MonotoneMeasure.counting(FiniteSpace(2))  # range exceeds [0,1]
        with pytest.raises(InputError):
            q_integral(unit_op("min"), measure, (0.0, 0.0))
        unit = MonotoneMeasure(FiniteSpace(2), {0: 0.0, 1: 0.5, 2: 0.5, 3: 1.0})
        assert q_integral(unit_op("min"), unit, (0.0, 0.0)).value == 0.0

    def test_seminormed_specializations(self):
        rng = random.Random(4)
        for _ in range(40):
            n = rng.randint(2, 5)
            measure = random_measure(rng, n, "general", 1.0)
            A = rng.getrandbits(n) or 1
            f = tuple(rng.random() for _ in range(n))
            s_min = seminormed(unit_op("min"), measure, A, f)
            s_prod = seminormed(unit_op("product"), measure, A, f)
            assert float(s_min.value) == pytest.approx(float(sugeno(measure, A, f).value), abs=1e-12)
            assert float(s_prod.value) == pytest.approx(float(shilkret(measure, A, f).value), abs=1e-12)

    def test_seminormed_without_neutral_element(self):
        from sugint.binops import UnitOpSpec

        prod_sq = UnitOpSpec("prod_sq", lambda a, b: a * b * b)
        measure = MonotoneMeasure(FiniteSpace(1), {0: 0.0, 1: 1.0})
        assert seminormed(prod_sq, measure, 1, (1.0,)).value == 1.0

    def test_range_validation(self):
        measure = MonotoneMeasure(FiniteSpace(2), {0: 0.0, 1: 0.5, 2: 0.5, 3: 1.0})
        with pytest.raises(InputError):
            seminormed(unit_op("min"), measure, 0b11, (0.5, 1.5))


class TestMonotonicityProperties:
    def test_monotone_in_function_and_measure(self):
        rng = random.Random(9)
        ops = [MIN, PRODUCT]
        for _ in range(60):
            n = rng.randint(2, 5)
            measure = random_measure(rng, n, "general", 2.0)
            bigger = MonotoneMeasure.from_full_table(
                measure.space,
                [measure.mask_value(m) + (0.3 if m else 0.0) for m in range(measure.space.full + 1)],
            )
            A = rng.getrandbits(n) or 1
            f = tuple(rng.uniform(0, 2) for _ in range(n))
            g = tuple(v + rng.uniform(0, 0.5) for v in f)
            for op in ops:
                base = float(generalized_integral(op, measure, A, f).value)
                assert float(generalized_integral(op, measure, A, g).value) >= base - 1e-12
                assert float(generalized_integral(op, bigger, A, f).value) >= base - 1e-12

    def test_sugeno_bounded_by_mu_and_max(self):
        rng = random.Random(10)
        for _ in range(60):
            n = rng.randint(2, 5)
            measure = random_measure(rng, n, "general", 2.0)
            A = rng.getrandbits(n) or 1
            f = tuple(rng.uniform(0, 3) for _ in range(n))
            val = float(sugeno(measure, A, f).value)
            assert val <= float(measure.value_of(A)) + 1e-12
            assert val <= max(f[i] for i in range(n) if A >> i & 1) + 1e-12


class TestOracleEquivalence:
    @pytest.mark.parametrize("op", [MIN, PRODUCT], ids=["min", "product"])
    def test_engine_matches_oracle_exactly(self, op):
        rng = random.Random(205)
        for _ in range(150):
            n = rng.randint(2, 6)
            measure = random_measure(rng, n, "general", rng.uniform(0.5, 4.0))
            A = rng.getrandbits(n) or 1
            f = tuple(0.0 if rng.random() < 0.15 else rng.uniform(0, 4) for _ in range(n))
            engine = float(generalized_integral(op, measure, A, f).value)
            assert engine == oracle_integral(op, measure, A, f)


def profile_from_segments(segments, lipschitz=None):
    return PiecewiseMap.from_segments(segments, validate=False).as_profile(lipschitz)


class TestProfileSearch:
    def test_linear_decay_exact_peak(self):
        prof = profile_from_segments([(0.0, 5.0, Expr.affine(5.0, -1.0), "dec")], lipschitz=1.0)
        res = integrate_profile(MIN, prof, 1e-10)
        assert float(res.value) == 2.5
        assert res.error_bound <= 1e-10
        assert res.argmax_t == pytest.approx(2.5, abs=1e-9)

    def test_two_piece_convex_transform(self):
        prof = profile_from_segments(
            [
                (0.0, 0.25, Expr(d=5.0, c=-2.0, a=0.0, b=1.0, g=0.5, e=1.0), "dec"),
                (0.25, 20.25, Expr(d=4.5, c=-1.0, a=0.0, b=1.0, g=0.5, e=1.0), "dec"),
            ]
        )
        res = integrate_profile(MIN, prof, 1e-10)
        assert float(res.value) == pytest.approx((10.0 - math.sqrt(19.0)) / 2.0, abs=1e-9)

    def test_sqrt_transform_profile(self):
        prof = profile_from_segments([(0.0, math.sqrt(5.0), Expr(d=5.0, c=-1.0, a=0.0, b=1.0, g=2.0, e=1.0), "dec")])
        res = integrate_profile(MIN, prof, 1e-10)
        assert float(res.value) == pytest.approx((-1.0 + math.sqrt(21.0)) / 2.0, abs=1e-9)

    def test_product_profile_quarter(self):
        prof = profile_from_segments([(0.0, 1.0, Expr.affine(1.0, -1.0), "dec")], lipschitz=1.0)
        res = integrate_profile(PRODUCT, prof, 1e-10)
        assert float(res.value) == pytest.approx(0.25, abs=1e-9)

    def test_value_never_exceeds_true_supremum(self):
        prof = profile_from_segments([(0.0, 5.0, Expr.affine(5.0, -1.0), "dec")])
        for tol in (1e-3, 1e-6, 1e-9):
            res = integrate_profile(MIN, prof, tol)
            assert float(res.value) <= 2.5
            assert 2.5 - float(res.value) <= res.error_bound

    def test_plateau_profile_prunes(self):
        # G = 3 up to 4, then 0: sup t ^ G(t) = 3, with a long plateau
        prof = profile_from_segments([(0.0, 4.0, Expr.const(3.0), "const")])
        res = integrate_profile(MIN, prof, 1e-12)
        assert float(res.value) == 3.0
        assert res.error_bound <= 1e-12

    def test_jump_profile(self):
        # G = 2 at 0, 1 on (0,1], 2 - sqrt(t) on (1,4]
        prof = PiecewiseMap.from_segments(
            [
                (0.0, 0.0, Expr.const(2.0), "const"),
                (0.0, 1.0, Expr.const(1.0), "const"),
                (1.0, 4.0, Expr(d=2.0, c=-1.0, a=0.0, b=1.0, g=0.5, e=1.0), "dec"),
            ],
            validate=False,
        ).as_profile()
        res = integrate_profile(MIN, prof, 1e-10)
        assert float(res.value) == pytest.approx(1.0, abs=1e-9)

    def test_upper_threshold_detection(self):
        prof = SurvivalProfile(evaluate=lambda t: max(0.0, 3.0 - t), upper=None)
        res = integrate_profile(MIN, prof, 1e-8)
        assert float(res.value) == pytest.approx(1.5, abs=1e-7)
        never_zero = SurvivalProfile(evaluate=lambda t: 1.0, upper=None)
        with pytest.raises(SearchError):
            integrate_profile(MIN, never_zero, 1e-8)

    def test_bad_tolerance(self):
        prof = profile_from_segments([(0.0, 1.0, Expr.affine(1.0, -1.0), "dec")])
        with pytest.raises(SearchError):
            integrate_profile(MIN, prof, 0.0)

    def test_increasing_profile_rejected(self):
        bad = SurvivalProfile(evaluate=lambda t: t, upper=5.0)
        with pytest.raises(InputError):
            integrate_profile(MIN, bad, 1e-9)


class TestProfileTransforms:
    def test_scale_profile(self):
        prof = profile_from_segments([(0.0, 5.0, Expr.affine(5.0, -1.0), "dec")])
        doubled = scale_profile(prof, 2.0)
        res = integrate_profile(MIN, doubled, 1e-9)
        # sup t ^ (5 - t/2): t = 10/3
        assert float(res.value) == pytest.approx(10.0 / 3.0, abs=1e-8)

    def test_shift_profile_matches_closed_form(self):
        prof = profile_from_segments([(0.0, 5.0, Expr.affine(5.0, -1.0), "dec")])
        m = 1.0 / math.sqrt(10.0)
        shifted = shift_profile(prof, m, -2.5, 5.0)
        res = integrate_profile(MIN, shifted, 1e-10)
        expected = max(min(-m * -2.5, 5.0), m / (m + 1.0) * 7.5)
        assert float(res.value) == pytest.approx(expected, abs=1e-9)

    def test_shift_profile_threshold_zero_is_full_mass(self):
        prof = profile_from_segments([(0.0, 5.0, Expr.affine(5.0, -1.0), "dec")])
        shifted = shift_profile(prof, 2.0, 3.0, 5.0)
        assert shifted(0.0) == 5.0
        assert shifted(1e-9) == pytest.approx(2.0, abs=1e-6)
