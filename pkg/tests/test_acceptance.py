"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; every tolerance is pinned here.
"""

import math
import time

import pytest

from sugint.binops import MIN, OVEE, PLUS, PRODUCT
from sugint.bounds import check_bound
from sugint.fixtures import (
    PROFILE_TOL,
    _cex2_6_instance,
    _counting_instance,
    _ex2_9_instance,
    _remark_nn1_instance,
    _sec3_instance,
    _sec4_1_instance,
    _sec4_2_instance,
)
from sugint.instances import BoundContext, DiscreteInstance
from sugint.integrals import sugeno
from sugint.measures import (
    FiniteSpace,
    MonotoneMeasure,
    is_subadditive,
    is_superadditive,
    is_weakly_subadditive,
    is_weakly_superadditive,
)
from sugint.transforms import power_map
from sugint.verify import FuzzConfig, fuzz, oracle_integral, random_measure, witness_sweep

import random

ACCEPTANCE_BOUNDS = (
    "tw1i", "tw1ii", "flo", "shilkret", "qint", "seminormed", "tw2i", "tw2ii",
    "co2", "ss1", "ss2", "ss3", "ss4", "noo1", "in3a", "in99", "l1", "comono",
    "in80", "b001", "mixed_lower", "mixed_upper",
)


def _report(num: int, ok: bool, text: str):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {text}")
    assert ok, text


def test_criterion_1_counting_instance_exact_and_fast():
    measure, A, f = _counting_instance()
    H = power_map(1.0 / 3.0, 2.0)
    best = math.inf
    for _ in range(3):
        t0 = time.perf_counter()
        sug_f = sugeno(measure, A, f)
        ctx = BoundContext(DiscreteInstance(measure, A, f), H)
        report = check_bound(ctx, "flo")
        best = min(best, time.perf_counter() - t0)
    ok = (
        float(sug_f.value) == 3.0
        and float(report.lhs) == 3.0
        and report.slack == 0.0
        and report.holds
        and best < 0.010
    )
    _report(1, ok, f"exact values 3/3, sharp bound slack 0, runtime {best*1e3:.2f} ms < 10 ms")


def test_criterion_2_convex_counterexample_profile():
    inst, H = _cex2_6_instance()
    ctx = BoundContext(inst, H, profile_tol=1e-10)
    p = ctx.p_sugeno()
    lhs = ctx.lhs_H(MIN)
    expected = (10.0 - math.sqrt(19.0)) / 2.0
    naive = check_bound(ctx, "naive_convex")
    corrected = check_bound(ctx, "convex")
    ok = (
        p == 2.5
        and abs(lhs - expected) <= 1e-9
        and float(naive.rhs) == pytest.approx(4.0, abs=1e-12)
        and not naive.holds
        and corrected.holds
        and float(corrected.rhs) == pytest.approx(2.5, abs=1e-12)
    )
    _report(2, ok, f"integral of f exactly 2.5; transformed integral {lhs:.12f}; naive claim 4 > {lhs:.4f} refuted; corrected bound 2.5 holds")


def test_criterion_3_sqrt_example_shift_minimized_bound():
    inst, H = _sec3_instance()
    ctx = BoundContext(inst, H, profile_tol=1e-9)
    lhs = ctx.lhs_H(MIN)
    expected = (-1.0 + math.sqrt(21.0)) / 2.0
    tw4 = check_bound(ctx, "tw4")
    ok = (
        abs(lhs - expected) <= 1e-9
        and float(tw4.rhs) <= 1.8020
        and float(tw4.rhs) >= lhs
        and tw4.minimizer is not None
        and abs(tw4.minimizer + 2.5) <= 0.05
    )
    _report(3, ok, f"integral {lhs:.10f}; minimized bound {float(tw4.rhs):.10f} at c*={tw4.minimizer:.4f}")


@pytest.mark.parametrize("q", [0.5, 1.0, 2.0])
def test_criterion_4_power_transform_family(q):
    inst, H = _ex2_9_instance(q)
    ctx = BoundContext(inst, H, profile_tol=PROFILE_TOL)
    p = ctx.p_sugeno()
    shil = ctx.lhs_H(PRODUCT)
    report = check_bound(ctx, "shilkret")
    expected_shil = (1.0 / q) * (q / (1.0 + q)) ** (q + 1.0)
    ok = (
        abs(p - 0.5**q) <= 1e-9
        and abs(shil - expected_shil) <= 1e-9
        and abs(float(report.rhs) - 0.5 ** (q + 1.0)) <= 1e-9
        and report.holds
    )
    _report(4, ok, f"q={q:g}: min-form {p:.10f}, product-form {shil:.10f}, bound rhs {float(report.rhs):.10f} holds")


def test_criterion_5_signed_three_point_instance():
    inst, H = _sec4_1_instance()
    ctx_plus = BoundContext(inst, H, star=PLUS)
    ctx_ovee = BoundContext(inst, H, star=OVEE)
    p1, p2 = ctx_plus.p_parts()
    s1, s2 = ctx_plus.hf_part_integrals()
    rep_plus = check_bound(ctx_plus, "b001")
    rep_ovee = check_bound(ctx_ovee, "b001")
    literal_plus = float(rep_plus.rhs)
    displayed_plus = p1 - p2
    discrepancy_flagged = abs(literal_plus - displayed_plus) > 1e-6
    ok = (
        (p1, p2, s1, s2) == (0.3, 0.1, 0.2, 0.1)
        and float(rep_plus.lhs) == pytest.approx(0.1, abs=1e-12)
        and float(rep_ovee.lhs) == pytest.approx(0.2, abs=1e-12)
        and rep_plus.holds
        and rep_ovee.holds
        and discrepancy_flagged
    )
    _report(5, ok, f"parts ({p1}, {p2}), split integrals ({s1}, {s2}), mixes (0.1, 0.2), bounds hold; literal rhs {literal_plus} vs displayed {displayed_plus:.1f} flagged")


def test_criterion_6_sqrt_length_signed_instance():
    inst, H = _sec4_2_instance()
    ctx = BoundContext(inst, H, star=OVEE, profile_tol=PROFILE_TOL)
    p1, p2 = ctx.p_parts()
    _, s2 = ctx.hf_part_integrals()
    rep = check_bound(ctx, "b001")
    ok = (
        abs(p1 - (math.sqrt(5.0) - 1.0) / 2.0) <= 1e-9
        and abs(p2 - (math.sqrt(13.0) - 1.0) / 2.0) <= 1e-9
        and abs(s2 - 1.5) <= 1e-9
        and abs(float(rep.rhs) - (1.0 - math.sqrt(13.0)) / 2.0) <= 1e-9
        and rep.holds
    )
    _report(6, ok, f"p1={p1:.10f}, p2={p2:.10f}, split integral {s2:.10f}, bound rhs {float(rep.rhs):.10f} holds")


def test_criterion_7_concave_upper_claim_refuted():
    inst, H = _remark_nn1_instance()
    ctx = BoundContext(inst, H, profile_tol=PROFILE_TOL)
    rep = check_bound(ctx, "nn1")
    rhs, lhs = float(rep.rhs), float(rep.lhs)
    ok = 0.38 <= rhs <= 0.40 and abs(lhs - 0.5) <= 1e-9 and not rep.holds
    _report(7, ok, f"claimed rhs {rhs:.10f} in [0.38, 0.40] while lhs = {lhs:.10f}: violation reproduced")


def test_criterion_8_property_suite_10k_trials():
    cfg = FuzzConfig(seed=20260810, trials=10_000, n_min=2, n_max=6, bounds=ACCEPTANCE_BOUNDS, resample_budget=0)
    t0 = time.perf_counter()
    rep = fuzz(cfg)
    elapsed = time.perf_counter() - t0
    coverage_ok = all(rep.evaluated[b] > 0 for b in ACCEPTANCE_BOUNDS)
    ok = not rep.violations and elapsed < 60.0 and coverage_ok
    evaluated = sum(rep.evaluated.values())
    _report(8, ok, f"10,000 instances, {evaluated} bound evaluations, 0 violations, {elapsed:.1f} s < 60 s")


@pytest.mark.parametrize("op", [MIN, PRODUCT], ids=["min", "product"])
def test_criterion_9_oracle_equivalence(op):
    rng = random.Random(424242)
    worst = 0.0
    for _ in range(1000):
        n = rng.randint(2, 6)
        measure = random_measure(rng, n, "general", rng.uniform(0.5, 4.0))
        A = rng.getrandbits(n) or 1
        f = tuple(0.0 if rng.random() < 0.1 else rng.uniform(0, 4) for _ in range(n))
        from sugint.integrals import generalized_integral

        engine = float(generalized_integral(op, measure, A, f).value)
        oracle = oracle_integral(op, measure, A, f)
        worst = max(worst, abs(engine - oracle))
    ok = worst == 0.0
    _report(9, ok, f"{op.name}: engine equals the dense-threshold oracle on 1000 instances (max difference {worst})")


@pytest.mark.parametrize(
    "bound_id", ["tw1i", "tw1ii", "tw2i", "tw2ii", "ss1", "ss2", "ss3", "ss4", "b001"]
)
def test_criterion_10_attainability_witnesses(bound_id):
    total_verified = 0
    worst = 0.0
    stars = (PLUS, OVEE) if bound_id == "b001" else (PLUS,)
    for star in stars:
        verified, attempted, slack = witness_sweep(bound_id, pairs=200, seed=909, star=star)
        total_verified += verified
        worst = max(worst, slack)
    ok = total_verified > 0 and worst <= 1e-12
    _report(10, ok, f"{bound_id}: {total_verified} verified witnesses over 200 pairs, max |slack| = {worst}")


def test_criterion_11_measure_predicates():
    space = FiniteSpace(3)
    values = {m: {0: 0.0, 1: 0.5, 2: 1.0, 3: 2.0}[bin(m).count("1")] for m in range(8)}
    three_point = MonotoneMeasure(space, values)
    additive = MonotoneMeasure.counting(FiniteSpace(4))
    weakly = is_weakly_subadditive(three_point, 0b011).holds
    not_sub = not is_subadditive(three_point).holds
    additive_ok = (
        is_subadditive(additive).holds
        and is_superadditive(additive).holds
        and all(is_weakly_subadditive(additive, a).holds for a in range(1, 16))
        and all(is_weakly_superadditive(additive, a).holds for a in range(1, 16))
    )
    ok = weakly and not_sub and additive_ok
    _report(11, ok, "three-point example weakly subadditive on {0,1} and not subadditive; additive measure passes all four predicates")
