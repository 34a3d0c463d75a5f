import math
import random

import pytest

from sugint.binops import MIN, OVEE, PLUS
from sugint.errors import HypothesisError, InputError
from sugint.extreal import INF
from sugint.instances import BoundContext, DiscreteInstance
from sugint.integrals import sugeno
from sugint.measures import FiniteSpace, MonotoneMeasure
from sugint.symmetric import (
    asymmetric_integral,
    mixed_monotone_bounds,
    split_parts,
    split_transform,
    symmetric_integral,
    upper_bound_001,
)
from sugint.transforms import Expr, PiecewiseMap, identity_map, power_map
from sugint.verify import attainability_witness, random_measure


def three_point_signed():
    space = FiniteSpace(3)
    values = {0: 0.0, 1: 0.1, 2: 0.25, 4: 0.2, 3: 0.4, 5: 0.3, 6: 0.6, 7: 1.0}
    return MonotoneMeasure(space, values), space.full, (-1.0, 0.3, 1.0)


def cubic_signed():
    return PiecewiseMap.from_segments(
        [(-INF, INF, Expr.power(1.0, 3.0), "inc")], signed=True, validate=False
    )


def kinked_signed():
    return PiecewiseMap.from_segments(
        [(-INF, 0.0, Expr.affine(0.0, 2.0), "inc"), (0.0, INF, Expr.affine(0.0, 1.0), "inc")],
        signed=True,
    )


class TestSplitParts:
    def test_example_values(self):
        fplus, fminus = split_parts((-1.0, 0.3, 1.0))
        assert fplus == (0.0, 0.3, 1.0)
        assert fminus == (1.0, 0.0, 0.0)

    def test_nonnegative_function(self):
        fplus, fminus = split_parts((0.5, 2.0))
        assert fplus == (0.5, 2.0) and fminus == (0.0, 0.0)

    def test_reconstruction_property(self):
        rng = random.Random(8)
        for _ in range(100):
            f = tuple(rng.uniform(-3, 3) for _ in range(rng.randint(1, 6)))
            fplus, fminus = split_parts(f)
            assert all(p - m == v for p, m, v in zip(fplus, fminus, f))
            assert all(min(p, m) == 0.0 for p, m in zip(fplus, fminus))


class TestSplitTransform:
    def test_cubic_split_is_symmetric(self):
        h1, h2 = split_transform(cubic_signed())
        for x in (0.0, 0.4, 1.3):
            assert h1.eval(x) == pytest.approx(x**3)
            assert h2.eval(x) == pytest.approx(x**3)

    def test_kinked_split(self):
        h1, h2 = split_transform(kinked_signed())
        for x in (0.0, 0.7, 2.0):
            assert h1.eval(x) == pytest.approx(x)
            assert h2.eval(x) == pytest.approx(2.0 * x)

    def test_split_identity_pointwise(self):
        H = kinked_signed()
        h1, h2 = split_transform(H)
        for x in [-2.0, -0.5, 0.0, 0.3, 1.5]:
            hx = H.eval(x)
            assert max(hx, 0.0) == pytest.approx(h1.eval(max(x, 0.0)))
            assert max(-hx, 0.0) == pytest.approx(h2.eval(max(-x, 0.0)))

    def test_requirements(self):
        with pytest.raises(InputError):
            split_transform(power_map(1.0, 2.0).scale_input(1.0))  # H(0)=0 holds but domain nonneg: H2 == H1
        shifted = PiecewiseMap.from_segments(
            [(-INF, INF, Expr.affine(1.0, 1.0), "inc")], signed=True
        )
        with pytest.raises(InputError):
            split_transform(shifted)  # H(0) != 0


class TestSymmetricIntegral:
    def test_three_point_example(self):
        measure, A, f = three_point_signed()
        hf = tuple(v**3 for v in f)
        assert symmetric_integral(measure, A, hf, PLUS) == pytest.approx(0.1)
        assert symmetric_integral(measure, A, hf, OVEE) == pytest.approx(0.2)

    def test_nonnegative_reduces_to_sugeno(self):
        measure = MonotoneMeasure.counting(FiniteSpace(3))
        f = (0.5, 1.5, 2.5)
        assert symmetric_integral(measure, 0b111, f, PLUS) == pytest.approx(
            float(sugeno(measure, 0b111, f).value)
        )

    def test_ovee_sign_symmetry(self):
        rng = random.Random(21)
        for _ in range(60):
            n = rng.randint(2, 5)
            measure = random_measure(rng, n, "general", 2.0)
            A = rng.getrandbits(n) or 1
            f = tuple(rng.uniform(-2, 2) for _ in range(n))
            neg = tuple(-v for v in f)
            a = float(symmetric_integral(measure, A, f, OVEE))
            b = float(symmetric_integral(measure, A, neg, OVEE))
            assert a == pytest.approx(-b, abs=1e-12)

    def test_infinite_part_rejected(self):
        space = FiniteSpace(2)
        measure = MonotoneMeasure(space, {0: 0.0, 1: math.inf, 2: 1.0, 3: math.inf})
        with pytest.raises(HypothesisError):
            symmetric_integral(measure, 0b11, (math.inf, -1.0), PLUS)


class TestAsymmetricIntegral:
    def test_shared_measure_reduces_to_symmetric(self):
        measure, A, f = three_point_signed()
        hf = tuple(v**3 for v in f)
        assert asymmetric_integral(MIN, PLUS, measure, measure, A, hf) == pytest.approx(
            float(symmetric_integral(measure, A, hf, PLUS))
        )

    def test_null_second_measure_keeps_positive_part(self):
        measure, A, f = three_point_signed()
        space = measure.space
        null = MonotoneMeasure(space, {m: 0.0 for m in range(space.full + 1)})
        fplus, _ = split_parts(f)
        expected = float(sugeno(measure, A, fplus).value)
        assert asymmetric_integral(MIN, PLUS, measure, null, A, f) == pytest.approx(expected)


class TestUpperBound001:
    def test_literal_formula(self):
        H = cubic_signed()
        rhs = upper_bound_001(H, 0.3, 0.1, 1.0, PLUS)
        assert rhs == pytest.approx(0.299)
        rhs = upper_bound_001(H, 0.3, 0.1, 1.0, OVEE)
        assert rhs == pytest.approx(0.3)

    def test_hypothesis_errors(self):
        H = kinked_signed()
        with pytest.raises(HypothesisError):
            upper_bound_001(H, INF, 0.1, 1.0, PLUS)

    def test_soundness_on_random_instances(self):
        rng = random.Random(31)
        for _ in range(80):
            n = rng.randint(2, 5)
            measure = random_measure(rng, n, "general", 1.5)
            A = rng.getrandbits(n) or 1
            f = tuple(rng.uniform(-1.5, 1.5) for _ in range(n))
            H = cubic_signed() if rng.random() < 0.5 else kinked_signed()
            ctx = BoundContext(DiscreteInstance(measure, A, f), H, star=rng.choice([PLUS, OVEE]))
            p1, p2 = ctx.p_parts()
            s1, s2 = ctx.hf_part_integrals()
            star = ctx.star
            lhs = star.fn(s1, -s2)
            rhs = float(upper_bound_001(H, p1, p2, ctx.mu_A, star))
            assert lhs <= rhs + 1e-12

    def test_equality_witness(self):
        rng = random.Random(32)
        hits = 0
        for _ in range(50):
            n = rng.randint(2, 4)
            measure = random_measure(rng, n, "general", 1.0)
            A = rng.getrandbits(n) or 1
            H = identity_map(lo=-INF)
            w = attainability_witness("b001", measure, A, H)
            if not w.verified:
                continue
            hits += 1
            for star in (PLUS, OVEE):
                ctx = BoundContext(DiscreteInstance(measure, A, w.f), H, star=star)
                from sugint.bounds import check_bound

                report = check_bound(ctx, "b001")
                assert abs(report.slack) <= 1e-12
        assert hits > 10


class TestMixedMonotoneBounds:
    def test_absolute_value_example(self):
        measure, A, f = three_point_signed()
        H = PiecewiseMap.from_segments(
            [(-INF, 0.0, Expr.affine(0.0, -1.0), "dec"), (0.0, INF, Expr.affine(0.0, 1.0), "inc")],
            signed=True,
        )
        lower, upper = mixed_monotone_bounds(measure, A, f, H)
        assert lower == pytest.approx(0.3)
        lhs = float(sugeno(measure, A, tuple(abs(v) for v in f)).value)
        assert lhs >= float(lower) - 1e-12
        assert upper is not None and lhs <= float(upper) + 1e-12

    def test_nonnegative_function_negative_side_vanishes(self):
        measure = MonotoneMeasure.counting(FiniteSpace(3))
        f = (0.5, 1.0, 2.0)
        H = PiecewiseMap.from_segments(
            [(-INF, 0.0, Expr.affine(0.0, -1.0), "dec"), (0.0, INF, Expr.affine(0.0, 1.0), "inc")],
            signed=True,
        )
        ctx = BoundContext(DiscreteInstance(measure, 0b111, f), H)
        assert ctx.sugeno_H_of(lambda v: H.eval(min(v, 0.0)), "neg") == 0.0
