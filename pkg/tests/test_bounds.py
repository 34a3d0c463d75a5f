import math
import random

import pytest

from sugint.binops import MIN, unit_op
from sugint.bounds import (
    BoundInputs,
    bound_continuous_measure,
    bound_ids,
    check_bound,
    left_continuous_at,
    lower_general,
    lower_monotone,
    lower_q_conjunction,
    lower_scaling,
    lower_seminormed,
    lower_subadditive_continuous,
    lower_weak_subadditive,
    resolve,
    upper_general,
    upper_peaked,
    upper_shilkret_concave,
    upper_superadditive_quasiconcave,
    upper_weak_superadditive,
)
from sugint.errors import HypothesisError, InputError
from sugint.extreal import INF
from sugint.instances import BoundContext, DiscreteInstance, IntervalInstance
from sugint.measures import FiniteSpace, MonotoneMeasure
from sugint.transforms import Expr, PiecewiseMap, affine_map, const_map, identity_map, power_map, quad_map
from sugint.verify import random_measure


class TestLowerFormulas:
    def test_general_counting_example(self):
        inp = BoundInputs(p=3.0, mu_A=5.0, H=power_map(1.0 / 3.0, 2.0), op=MIN)
        assert lower_general(inp) == pytest.approx(3.0)

    def test_general_zero_transform(self):
        inp = BoundInputs(p=2.0, mu_A=5.0, H=const_map(0.0), op=MIN)
        assert lower_general(inp) == 0.0

    def test_general_convex_instance(self):
        inp = BoundInputs(p=2.5, mu_A=5.0, H=quad_map(1.0, -1.0, 0.25), op=MIN)
        assert lower_general(inp) == pytest.approx(2.5)

    def test_weak_subadditive_nondecreasing_vanishes(self):
        H = power_map(1.0, 2.0)  # H(0) = 0, nondecreasing
        for p in (0.5, 1.0, 3.0):
            inp = BoundInputs(p=p, mu_A=4.0, H=H, op=MIN)
            assert lower_weak_subadditive(inp) == 0.0

    def test_weak_subadditive_constant(self):
        inp = BoundInputs(p=1.0, mu_A=3.0, H=const_map(0.7), op=MIN)
        assert lower_weak_subadditive(inp) == pytest.approx(min(0.7, 3.0))

    def test_weak_subadditive_decreasing_frozen(self):
        H = affine_map(2.0, -1.0, hi=2.0)
        inp = BoundInputs(p=1.0, mu_A=2.0, H=H, op=MIN)
        assert lower_weak_subadditive(inp) == pytest.approx(1.0)

    def test_monotone_bound(self):
        assert lower_monotone(power_map(1.0 / 3.0, 2.0), 3.0) == pytest.approx(3.0)
        assert lower_monotone(identity_map(), 1.7) == pytest.approx(1.7)
        q = 2.0
        H = power_map(1.0, 1.0 / q)
        assert lower_monotone(H, 0.5**q) == pytest.approx(min(0.5, 0.5**q))

    def test_scaling_bound(self):
        q = 2.0
        assert lower_scaling(power_map(1.0, 1.0 / q), 0.5**q) == pytest.approx(0.5 ** (q + 1.0))
        assert lower_scaling(affine_map(0.0, 2.0), 3.0) == pytest.approx(2.0 * 9.0)
        assert lower_scaling(power_map(1.0, 0.5), 0.0) == 0.0

    def test_q_conjunction_bound(self):
        H = power_map(1.0, 2.0, hi=1.0)
        assert lower_q_conjunction(unit_op("min"), H, 0.6, 0.0) == pytest.approx(min(0.6, 0.36))
        assert lower_q_conjunction(unit_op("product"), H, 0.5, 0.0) == pytest.approx(0.125)
        assert lower_q_conjunction(unit_op("min"), const_map(0.3, hi=1.0), 0.6, 0.0) == pytest.approx(0.3)
        with pytest.raises(HypothesisError):
            lower_q_conjunction(unit_op("min"), H, 0.2, 0.5)

    def test_seminormed_bound(self):
        H = power_map(1.0, 0.5, hi=1.0)
        assert lower_seminormed(unit_op("min"), H, 0.25, 0.0) == pytest.approx(0.25)
        assert lower_seminormed(unit_op("product"), H, 0.25, 0.0) == pytest.approx(0.125)
        ident = identity_map(hi=1.0)
        assert lower_seminormed(unit_op("product"), ident, 0.7, 0.0) == pytest.approx(0.49)


class TestUpperFormulas:
    def test_general_nondecreasing(self):
        H = power_map(1.0 / 3.0, 2.0)
        inp = BoundInputs(p=3.0, mu_A=5.0, H=H, op=MIN)
        # (H(p) ^ muA) v (sup H ^ p) = 3 v 3
        assert upper_general(inp) == pytest.approx(3.0)

    def test_general_constant(self):
        inp = BoundInputs(p=1.0, mu_A=4.0, H=const_map(2.0), op=MIN)
        assert upper_general(inp) == pytest.approx(2.0)

    def test_weak_superadditive_decreasing_frozen(self):
        H = affine_map(2.0, -1.0, hi=2.0)
        inp = BoundInputs(p=1.0, mu_A=2.0, H=H, op=MIN)
        assert upper_weak_superadditive(inp) == pytest.approx(1.0)

    def test_weak_superadditive_constant(self):
        inp = BoundInputs(p=1.0, mu_A=4.0, H=const_map(2.0), op=MIN)
        assert upper_weak_superadditive(inp) == pytest.approx(2.0)

    def test_peaked_formula(self):
        H = PiecewiseMap.from_segments(
            [
                (0.0, 1.0, Expr.quad(-1.0, 2.0, 0.0), "inc"),
                (1.0, 2.0, Expr.quad(-1.0, 2.0, 0.0), "dec"),
                (2.0, INF, Expr.const(0.0), "const"),
            ]
        )
        assert upper_peaked(H, 0.5, 1.0, 2.0, False) == pytest.approx(0.75)
        assert upper_peaked(H, 1.0, 1.0, 2.0, False) == pytest.approx(1.0)
        with pytest.raises(HypothesisError):
            upper_peaked(H, 1.5, 1.0, 2.0, False)
        assert upper_peaked(H, 1.5, 1.0, 2.0, True) == pytest.approx(min(max(0.75, 0.5), 1.0, 2.0))

    def test_shilkret_concave_formula(self):
        H = power_map(1.0, 0.5)
        assert upper_shilkret_concave(H, 0.25, 2.0, 1.0) == pytest.approx(0.75)
        assert upper_shilkret_concave(H, 0.25, 1.0, 1.0) == pytest.approx(0.5)  # = H(p)
        lin = affine_map(0.0, 3.0)
        assert upper_shilkret_concave(lin, 0.4, 1.0, 3.0) == pytest.approx(1.2)  # a * p


class TestMeasureContinuityFamily:
    def jump_H(self):
        return PiecewiseMap.from_segments(
            [
                (0.0, 1.0, Expr.const(0.0), "const"),
                (1.0, 1.0, Expr.const(0.5), "const"),
                (1.0, 2.0, Expr.power(1.0, 2.0), "inc"),
            ]
        )

    def test_ss1_beats_general_on_jump(self):
        H = self.jump_H()
        inp = BoundInputs(p=1.0, mu_A=2.0, H=H, op=MIN)
        ss1 = bound_continuous_measure(inp, "ss1")
        in1 = lower_general(inp)
        assert ss1 == pytest.approx(0.5)
        assert in1 == 0.0  # left limit at the jump point kills the first term
        assert ss1 > in1

    def test_ss2_constant(self):
        inp = BoundInputs(p=1.0, mu_A=4.0, H=const_map(2.0), op=MIN)
        assert bound_continuous_measure(inp, "ss2") == pytest.approx(2.0)

    def test_ss3_ss4_formulas(self):
        H = affine_map(2.0, -1.0, hi=2.0)
        inp = BoundInputs(p=1.0, mu_A=2.0, H=H, op=MIN)
        assert bound_continuous_measure(inp, "ss3") == pytest.approx(1.0)
        assert bound_continuous_measure(inp, "ss4") == pytest.approx(1.0)
        with pytest.raises(InputError):
            bound_continuous_measure(inp, "ss9")

    def test_noo1_on_convex_instance(self):
        inp = BoundInputs(p=2.5, mu_A=5.0, H=quad_map(1.0, -1.0, 0.25), op=MIN)
        assert lower_subadditive_continuous(inp) == pytest.approx(2.5)

    def test_in3a_constant(self):
        inp = BoundInputs(p=1.0, mu_A=4.0, H=const_map(2.0), op=MIN)
        assert upper_superadditive_quasiconcave(inp) == pytest.approx(2.0)


def make_ctx(measure, A, f, H, **kw):
    return BoundContext(DiscreteInstance(measure, A, tuple(float(v) for v in f)), H, **kw)


class TestCheckBound:
    def counting_ctx(self, H=None, **kw):
        space = FiniteSpace(5)
        measure = MonotoneMeasure.counting(space)
        return make_ctx(measure, space.full, (1, 2, 3, 4, 5), H or power_map(1.0 / 3.0, 2.0), **kw)

    def test_flo_sharp_on_counting(self):
        report = check_bound(self.counting_ctx(), "flo")
        assert report.holds and report.hypotheses_ok
        assert report.slack == 0.0
        assert float(report.lhs) == 3.0 and float(report.rhs) == 3.0

    def test_aliases(self):
        assert resolve("001").bound_id == "b001"
        assert resolve("pp1").bound_id == "shilkret"
        assert resolve("in2a").bound_id == "convex"
        assert resolve("comonotone").bound_id == "comono"
        with pytest.raises(InputError):
            resolve("tw9")

    def test_unknown_hypotheses_reported_not_blocking(self):
        # convex bound on a non-convex H: rhs still computed, hypothesis row false
        H = PiecewiseMap.from_segments(
            [
                (0.0, 1.0, Expr.quad(-1.0, 2.0, 0.0), "inc"),
                (1.0, 2.0, Expr.quad(-1.0, 2.0, 0.0), "dec"),
                (2.0, INF, Expr.const(0.0), "const"),
            ]
        )
        report = check_bound(self.counting_ctx(H), "convex")
        assert not report.hypotheses_ok
        assert any(h.name == "H_convex" and not h.holds for h in report.hypotheses)

    def test_comono_frozen_example(self):
        space = FiniteSpace(2)
        measure = MonotoneMeasure(space, {0: 0.0, 1: 0.6, 2: 0.6, 3: 1.0})
        f = (0.25, 0.25)
        ctx = make_ctx(measure, 0b11, f, power_map(1.0, 0.5, hi=1.0))
        report = check_bound(ctx, "comono")
        # p = 0.25, slope H'(0.25) = 1: rhs = (0.5 - 0.25) ^ 1 + (1 ^ 0.25)
        assert float(report.rhs) == pytest.approx(0.5)
        assert report.holds and report.hypotheses_ok

    def test_l1_linear_transform_reduces_to_scaled_integral(self):
        space = FiniteSpace(3)
        measure = MonotoneMeasure.counting(space)
        f = (0.5, 1.5, 2.5)
        m = 0.75
        ctx = make_ctx(measure, 0b111, f, affine_map(0.0, m))
        report = check_bound(ctx, "l1")
        assert float(report.rhs) == pytest.approx(ctx.sugeno_scaled(m))
        assert report.holds

    def test_in80_identity_when_mu_is_one(self):
        space = FiniteSpace(2)
        measure = MonotoneMeasure(space, {0: 0.0, 1: 0.5, 2: 0.7, 3: 1.0})
        ctx = make_ctx(measure, 0b11, (0.3, 0.8), power_map(1.0, 0.5))
        report = check_bound(ctx, "in80")
        p = ctx.p_shilkret()
        assert float(report.rhs) == pytest.approx(math.sqrt(p))
        assert report.holds and report.hypotheses_ok

    def test_b001_identity_transform(self):
        space = FiniteSpace(3)
        measure = MonotoneMeasure.counting(space)
        ctx = make_ctx(measure, 0b111, (-1.0, 0.5, 2.0), identity_map(lo=-INF))
        report = check_bound(ctx, "b001")
        p1, p2 = ctx.p_parts()
        assert float(report.rhs) == pytest.approx(min(p1, 3.0) - p2)
        assert report.holds

    def test_mixed_bounds_on_three_point_instance(self):
        space = FiniteSpace(3)
        values = {0: 0.0, 1: 0.1, 2: 0.25, 4: 0.2, 3: 0.4, 5: 0.3, 6: 0.6, 7: 1.0}
        measure = MonotoneMeasure(space, values)
        H = PiecewiseMap.from_segments(
            [(-INF, 0.0, Expr.affine(0.0, -1.0), "dec"), (0.0, INF, Expr.affine(0.0, 1.0), "inc")],
            signed=True,
        )
        ctx = make_ctx(measure, 0b111, (-1.0, 0.3, 1.0), H)
        report = check_bound(ctx, "mixed_lower")
        assert float(report.rhs) == pytest.approx(0.3)
        assert report.holds and report.hypotheses_ok

    def test_tw4_minimizer_reported(self):
        ctx = self.counting_ctx(power_map(1.0, 0.5))
        report = check_bound(ctx, "tw4")
        assert report.minimizer is not None
        assert report.holds and report.hypotheses_ok
        in99 = check_bound(ctx, "in99")
        assert float(in99.rhs) >= float(report.rhs) - 1e-9

    def test_registry_lists_all_ids(self):
        ids = bound_ids(include_refutable=True)
        for required in (
            "tw1i", "tw1ii", "flo", "convex", "shilkret", "qint", "seminormed",
            "tw2i", "tw2ii", "co2", "ss1", "ss2", "ss3", "ss4", "noo1", "in3a",
            "tw4", "in99", "l1", "comono", "in80", "b001", "mixed_lower",
            "mixed_upper", "naive_convex", "nn1",
        ):
            assert required in ids
        sound = bound_ids(include_refutable=False)
        assert "naive_convex" not in sound and "nn1" not in sound


class TestStructuralProperties:
    def test_flo_rhs_monotone_in_p_for_nondecreasing_H(self):
        H = power_map(1.0, 2.0)
        values = [float(lower_monotone(H, p)) for p in [0.0, 0.25, 0.5, 1.0, 2.0, 4.0]]
        assert values == sorted(values)

    def test_tw1i_dominates_flo_for_min(self):
        rng = random.Random(77)
        H = power_map(1.0, 2.0)
        for _ in range(50):
            n = rng.randint(2, 5)
            measure = random_measure(rng, n, "general", 2.0)
            A = rng.getrandbits(n) or 1
            f = tuple(rng.uniform(0, 2) for _ in range(n))
            ctx = make_ctx(measure, A, f, H)
            tw1 = check_bound(ctx, "tw1i")
            flo = check_bound(ctx, "flo")
            assert float(tw1.rhs) >= float(flo.rhs) - 1e-12

    def test_left_continuity_helper(self):
        H = PiecewiseMap.from_segments(
            [
                (0.0, 1.0, Expr.const(0.0), "const"),
                (1.0, 1.0, Expr.const(0.5), "const"),
                (1.0, 2.0, Expr.power(1.0, 2.0), "inc"),
            ]
        )
        assert not left_continuous_at(H, 1.0)
        assert left_continuous_at(H, 0.5)
        assert left_continuous_at(H, 0.0)


class TestIntervalContexts:
    def test_interval_without_profiles_is_inapplicable(self):
        inst = IntervalInstance(mu_A=5.0)
        ctx = BoundContext(inst, power_map(1.0, 2.0))
        with pytest.raises(HypothesisError):
            check_bound(ctx, "flo")

    def test_declared_properties_feed_hypotheses(self):
        from sugint.fixtures import _cex2_6_instance

        inst, H = _cex2_6_instance()
        ctx = BoundContext(inst, H)
        report = check_bound(ctx, "noo1")
        row = next(h for h in report.hypotheses if h.name == "measure_subadditive")
        assert row.holds and "declared" in row.detail
        assert report.holds
