"""Tests for the inequality checkers and their property suites.

Frozen decimals come from an independent mpmath evaluation at 40 digits.
"""

import math

import numpy as np
import pytest

import jlip.lemmas as lemmas
from jlip import (
    XYPair,
    g_ratio,
    k_ratio,
    l3_part1_holds,
    l3_part2_ratio,
    le1_gap,
    run_all_suites,
    s1_condition_margin,
    s1_xy,
)
from jlip.lemmas import (
    run_case2_chain_suite,
    run_g_monotone_suite,
    run_k_monotone_suite,
    run_l3_part1_suite,
    run_l3_part2_suite,
    run_le1_suite,
    run_s1_chain_suite,
)

LE1_GAP_1_HALF = 0.022783243207133341  # 1/3 - log((0.5+e)/(1+e/2)), mpmath


@pytest.fixture()
def rng():
    return np.random.default_rng(seed=777)


class TestLe1Gap:
    def test_equality_axes(self):
        assert le1_gap(0.0, 0.7) == 0.0
        assert le1_gap(3.2, 0.0) == 0.0

    def test_frozen_value(self):
        assert le1_gap(1.0, 0.5) == pytest.approx(LE1_GAP_1_HALF, rel=1e-12)

    def test_large_t_is_stable(self):
        # 0.6*20 - log((0.25+e^20)/(1+0.25 e^20)), mpmath
        assert le1_gap(20.0, 0.25) == pytest.approx(10.613705646609435, rel=1e-12)

    @pytest.mark.parametrize("t,q", [(-1.0, 0.5), (1.0, -0.1), (1.0, 1.5), (math.nan, 0.5)])
    def test_domain(self, t, q):
        with pytest.raises(ValueError):
            le1_gap(t, q)

    def test_nonnegative_property(self, rng):
        result = run_le1_suite(10**5, rng)
        assert result.passed
        assert result.worst >= -1e-12


class TestS1XY:
    def test_extremal_pair(self):
        xy = s1_xy(0.6, 0.5, -0.5)
        assert xy.x == pytest.approx(2.0, rel=1e-14)
        assert xy.y == pytest.approx(7 / 16, rel=1e-12)

    def test_near_isometry_has_unit_y(self):
        xy = s1_xy(1e-9, 0.4, -0.3 + 0.2j)
        assert xy.y == pytest.approx(1.0, abs=1e-6)

    def test_rejects_equal_points(self):
        with pytest.raises(ValueError):
            s1_xy(0.6, 0.5, 0.5)

    def test_rejects_zero_translation(self):
        with pytest.raises(ValueError):
            s1_xy(0j, 0.5, -0.5)

    def test_xypair_validation(self):
        with pytest.raises(ValueError):
            XYPair(x=-1.0, y=0.5)
        with pytest.raises(ValueError):
            XYPair(x=1.0, y=0.0)


class TestConditionMargin:
    def test_isometry_boundary(self):
        assert s1_condition_margin(XYPair(x=5.0, y=1.0), 1.0) == 0.0

    def test_extremal_pair_fails_pointwise(self):
        # the sharpness pair does not satisfy the hypothesis at q = 0.4
        margin = s1_condition_margin(XYPair(x=2.0, y=0.4375), 0.4)
        assert margin == pytest.approx(-0.15, abs=1e-15)

    def test_domain(self):
        with pytest.raises(ValueError):
            s1_condition_margin(XYPair(x=1.0, y=1.0), 1.5)


class TestL3Part1:
    def test_true_at_theta_zero(self):
        assert l3_part1_holds(A=0.5, B=1.0, C=0.5, D=1.0, theta=0.0)

    def test_true_at_exact_boundary(self):
        assert l3_part1_holds(A=0.5, B=1.0, C=0.5, D=1.0, theta=1.0)

    def test_false_beyond_boundary(self):
        assert not l3_part1_holds(A=0.1, B=1.0, C=0.1, D=1.0, theta=0.5)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(A=0.0, B=1.0, C=0.5, D=1.0, theta=1.0),
            dict(A=1.0, B=1.0, C=1.0, D=1.0, theta=1.0),
            dict(A=1.0, B=1.0, C=0.5, D=1.0, theta=-1.0),
        ],
    )
    def test_domain(self, kwargs):
        with pytest.raises(ValueError):
            l3_part1_holds(**kwargs)

    def test_iff_agreement(self, rng):
        result = run_l3_part1_suite(10**5, rng)
        assert result.passed, result.counterexample


class TestL3Part2:
    def test_constant_when_c_plus_d_is_one(self):
        # D = 1 - C exactly representable: the two logs coincide bit for bit
        for theta in (0.25, 1.0, 3.5):
            assert l3_part2_ratio(1.3, 0.25, 0.75, theta) == l3_part2_ratio(1.3, 0.25, 0.75, 1.0)

    def test_increasing_below_one(self):
        r1 = l3_part2_ratio(1.0, 0.3, 0.3, 1.0)
        r2 = l3_part2_ratio(1.0, 0.3, 0.3, 2.0)
        assert r1 == pytest.approx(0.6051154362011858, rel=1e-12)
        assert r2 == pytest.approx(0.6627417617496557, rel=1e-12)
        assert r2 > r1

    def test_decreasing_above_one(self):
        r1 = l3_part2_ratio(1.0, 0.5, 0.8, 1.0)
        r2 = l3_part2_ratio(1.0, 0.5, 0.8, 2.0)
        assert r1 == pytest.approx(1.3547556456757274, rel=1e-12)
        assert r2 == pytest.approx(1.2847106379326626, rel=1e-12)
        assert r2 < r1

    def test_monotone_property(self, rng):
        result = run_l3_part2_suite(2000, rng)
        assert result.passed, result.counterexample


class TestAuxiliaryRatios:
    def test_k_frozen_values(self):
        assert k_ratio(0.25, 0.6) == pytest.approx(0.4582959910614015, rel=1e-12)
        assert k_ratio(0.5, 0.6) == pytest.approx(0.5634737703113704, rel=1e-12)

    def test_k_vanishes_with_a(self):
        assert k_ratio(0.3, 1e-12) == pytest.approx(0.0, abs=1e-11)

    def test_g_frozen_values(self):
        assert g_ratio(0.25, 0.6) == pytest.approx(1.3318441064449116, rel=1e-12)
        # g(1/2) is the sharp constant itself
        assert g_ratio(0.5, 0.6) == pytest.approx(1.5634737703113704, rel=1e-12)

    def test_g_tends_to_one(self):
        assert g_ratio(0.5, 1e-12) == pytest.approx(1.0, abs=1e-11)

    def test_domains(self):
        with pytest.raises(ValueError):
            k_ratio(0.0, 0.5)
        with pytest.raises(ValueError):
            g_ratio(0.6, 0.5)
        with pytest.raises(ValueError):
            g_ratio(0.25, 1.0)

    def test_monotone_properties(self, rng):
        assert run_k_monotone_suite(500, rng).passed
        assert run_g_monotone_suite(500, rng).passed


class TestChainSuites:
    def test_s1_chain(self, rng):
        result = run_s1_chain_suite(20000, rng)
        assert result.passed
        assert result.worst >= -1e-12

    def test_case2_chain(self, rng):
        result = run_case2_chain_suite(20000, rng)
        assert result.passed
        assert result.checked == 20000
        assert result.worst >= -1e-12


class TestHarness:
    def test_run_all_suites_passes(self):
        results = run_all_suites(5000, seed=4)
        assert all(r.passed for r in results)
        assert {r.name for r in results} == {
            "le1_nonnegative",
            "l3_part1_iff",
            "l3_part2_monotone",
            "k_ratio_monotone",
            "g_ratio_monotone",
            "s1_chain",
            "case2_chain",
        }

    def test_determinism(self):
        first = run_all_suites(2000, seed=9)
        second = run_all_suites(2000, seed=9)
        assert [(r.name, r.worst, r.checked) for r in first] == [
            (r.name, r.worst, r.checked) for r in second
        ]

    def test_corrupted_checker_is_caught(self, monkeypatch):
        monkeypatch.setattr(lemmas, "le1_gap", lambda t, q: -abs(le1_gap(t, q)) - 1.0)
        result = run_le1_suite(100, np.random.default_rng(0))
        assert not result.passed
        assert result.counterexample is not None
        assert set(result.counterexample) == {"t", "q", "gap"}

    def test_rejects_bad_sample_count(self):
        with pytest.raises(ValueError):
            run_all_suites(0, seed=1)
