"""Tests for the ratio evaluators, the supremum search, and the bound audit."""

import cmath
import math

import numpy as np
import pytest

from jlip import (
    DISK_MINUS_ORIGIN,
    DiskAutomorphism,
    DomainError,
    PuncturedDisk,
    SearchConfig,
    ball_constant,
    bound_audit,
    diagonal_limit,
    estimate_lipschitz,
    estimate_power_constant,
    j_metric,
    main_constant,
    mobius_apply,
    power_monotonicity_table,
    q_scan,
    ratio_J,
)

# Lighter-than-default search for tests that only need rough convergence.
FAST = SearchConfig(grid_n=24, refine_iters=150, refine_starts=8)


@pytest.fixture(scope="module")
def rng():
    return np.random.default_rng(seed=1234)


def annulus(rng, n, lo=0.05, hi=0.95):
    radius = np.sqrt(rng.uniform(lo * lo, hi * hi, n))
    angle = rng.uniform(0.0, 2.0 * np.pi, n)
    return radius * np.exp(1j * angle)


class TestRatioJ:
    def test_sharpness_pair(self):
        assert ratio_J(0.6, 0.5, -0.5) == pytest.approx(main_constant(0.6), abs=1e-14)

    def test_matches_metric_composition(self, rng):
        for a, z, w in zip(annulus(rng, 2000), annulus(rng, 2000), annulus(rng, 2000)):
            a, z, w = complex(a), complex(z), complex(w)
            if z == w:
                continue
            h = DiskAutomorphism(a)
            direct = j_metric(
                PuncturedDisk((a,)), mobius_apply(h, z), mobius_apply(h, w)
            ) / j_metric(DISK_MINUS_ORIGIN, z, w)
            assert ratio_J(a, z, w) == pytest.approx(direct, rel=1e-13)

    def test_exact_symmetry(self, rng):
        for a, z, w in zip(annulus(rng, 500), annulus(rng, 500), annulus(rng, 500)):
            a, z, w = complex(a), complex(z), complex(w)
            if z == w:
                continue
            assert ratio_J(a, z, w) == ratio_J(a, w, z)

    def test_rotation_case_is_near_one(self):
        assert ratio_J(0j, 0.5, -0.3 + 0.2j) == pytest.approx(1.0, abs=1e-12)

    def test_errors(self):
        with pytest.raises(ValueError):
            ratio_J(0.6, 0.5, 0.5)
        with pytest.raises(DomainError):
            ratio_J(0.6, 0j, 0.5)
        with pytest.raises(DomainError):
            ratio_J(0.6, 1.5, 0.5)
        with pytest.raises(ValueError):
            ratio_J(1.0, 0.5, -0.5)


class TestDiagonalLimit:
    def test_hand_value(self):
        # (64/169) * 0.5 / (2/13) = 16/13
        assert diagonal_limit(0.6, 0.5) == pytest.approx(16 / 13, rel=1e-14)

    def test_rotation_case(self):
        assert diagonal_limit(1e-12, 0.4j) == pytest.approx(1.0, abs=1e-11)

    def test_finite_difference_agreement(self, rng):
        delta = 1e-7
        for a, z in zip(annulus(rng, 200, 0.1, 0.9), annulus(rng, 200, 0.1, 0.85)):
            a, z = complex(a), complex(z)
            limit = diagonal_limit(a, z)
            fd = ratio_J(a, z, z + delta)
            assert abs(fd - limit) / limit <= 1e-5

    def test_spec_example_offset(self):
        assert ratio_J(0.6, 0.5, 0.5 + 1e-9j) == pytest.approx(diagonal_limit(0.6, 0.5), rel=1e-6)


class TestEstimateLipschitz:
    def test_converges_to_closed_form(self):
        report = estimate_lipschitz(0.6)
        assert abs(report.sup_estimate - report.closed_form) <= 1e-3
        assert report.gap == report.closed_form - report.sup_estimate
        assert report.sup_estimate <= report.closed_form + 1e-9
        assert report.sup_estimate >= 1.0

    def test_argmax_is_the_analytic_pair(self):
        report = estimate_lipschitz(0.6)
        found = sorted((report.argmax_z, report.argmax_w), key=lambda c: c.real)
        assert abs(found[0] - (-0.5)) <= 0.05
        assert abs(found[1] - 0.5) <= 0.05

    def test_rotated_parameter(self):
        report = estimate_lipschitz(0.3j)
        assert abs(report.sup_estimate - main_constant(0.3)) <= 1e-3
        found = sorted((report.argmax_z, report.argmax_w), key=lambda c: c.imag)
        assert abs(found[0] - (-0.5j)) <= 0.05
        assert abs(found[1] - 0.5j) <= 0.05

    def test_small_parameter_stays_near_one(self):
        report = estimate_lipschitz(1e-3, FAST)
        assert abs(report.sup_estimate - 1.0) <= 2e-3

    def test_rotation_invariance_of_estimate(self):
        base = estimate_lipschitz(0.5, FAST)
        rotated = estimate_lipschitz(0.5 * cmath.exp(0.7j), FAST)
        assert abs(base.sup_estimate - rotated.sup_estimate) <= 2.0 * FAST.tol

    def test_determinism(self):
        cfg = SearchConfig(grid_n=24, refine_iters=100, refine_starts=6, seed=42)
        assert estimate_lipschitz(0.4, cfg) == estimate_lipschitz(0.4, cfg)

    def test_report_bookkeeping(self):
        cfg = SearchConfig(grid_n=16, refine_iters=50, refine_starts=4, seed=11)
        report = estimate_lipschitz(0.4, cfg)
        assert report.seed == 11
        assert report.evaluations > 0
        assert set(report.branch_histogram) == {
            "image_puncture_at_z",
            "image_puncture_at_w",
            "boundary_at_z",
            "boundary_at_w",
        }
        assert sum(report.branch_histogram.values()) == report.evaluations

    def test_rejects_degenerate_parameters(self):
        with pytest.raises(ValueError):
            estimate_lipschitz(0j)
        with pytest.raises(ValueError):
            estimate_lipschitz(1.0)


class TestSearchConfig:
    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(grid_n=3),
            dict(grid_n=4.0),
            dict(refine_iters=-1),
            dict(diag_epsilon=0.0),
            dict(boundary_margin=0.0),
            dict(boundary_margin=0.6),
            dict(seed=-1),
            dict(seed=2**64),
            dict(tol=0.0),
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            SearchConfig(**kwargs)


class TestEstimatePowerConstant:
    def test_first_power_is_sharp(self):
        report = estimate_power_constant(0.6, 1, FAST)
        assert report.closed_form == pytest.approx(1.6, rel=1e-15)
        assert abs(report.sup_estimate - 1.6) <= 2e-3
        assert report.sup_estimate <= 1.6 + 1e-9

    def test_square_does_not_exceed_first_power(self):
        first = estimate_power_constant(0.6, 1, FAST)
        square = estimate_power_constant(0.6, 2, FAST)
        assert square.closed_form is None and square.gap is None
        assert square.sup_estimate <= first.sup_estimate + 2e-3

    @pytest.mark.parametrize("m", [1, 2, 5])
    def test_pure_powers_do_not_expand(self, m):
        report = estimate_power_constant(0j, m, FAST)
        assert report.sup_estimate <= 1.0 + 2e-3

    def test_respects_ball_bound(self):
        for m in (1, 2, 3):
            report = estimate_power_constant(0.4 + 0.3j, m, FAST)
            assert report.sup_estimate <= 1.5 + 1e-9

    def test_rejects_bad_exponent(self):
        with pytest.raises(ValueError):
            estimate_power_constant(0.5, 0)
        with pytest.raises(ValueError):
            estimate_power_constant(0.5, 1.5)


class TestPowerMonotonicityTable:
    def test_nonincreasing_for_real_parameter(self):
        table = power_monotonicity_table(0.6, 2, FAST)
        estimates = [rep.sup_estimate for _, rep in table.entries]
        assert [m for m, _ in table.entries] == [1, 2, 4]
        assert table.violations == ()
        for lo, hi in zip(estimates[1:], estimates):
            assert lo <= hi + 2.0 * FAST.tol

    def test_rejects_large_n_max(self):
        with pytest.raises(ValueError):
            power_monotonicity_table(0.5, 7)


class TestQScan:
    def test_empty_input(self):
        assert q_scan([]) == []

    def test_rejects_m_below_two(self):
        with pytest.raises(ValueError):
            q_scan([2, 1])

    def test_rows(self):
        rows = q_scan([2, 3], FAST)
        assert [(m, a) for m, a, _ in rows] == [(2, 1 / 3), (3, 1 / 4)]
        for m, a, rep in rows:
            assert rep.sup_estimate >= 1.0 - 2e-3
            assert rep.sup_estimate <= 1.0 + a + 1e-9


class TestBoundAudit:
    def test_no_violations(self):
        result = bound_audit(0.6, 200000, seed=11)
        assert result.violations == 0
        assert result.max_ratio <= main_constant(0.6) + 1e-9
        assert result.max_ratio < 2.0
        assert result.samples == 200000

    def test_dominated_by_supremum_estimate(self):
        result = bound_audit(0.6, 50000, seed=5)
        report = estimate_lipschitz(0.6)
        assert result.max_ratio <= report.sup_estimate + report.closed_form * 1e-3 + 1e-12

    def test_determinism(self):
        assert bound_audit(0.3, 20000, seed=8) == bound_audit(0.3, 20000, seed=8)

    def test_validation(self):
        with pytest.raises(ValueError):
            bound_audit(0j, 100, seed=1)
        with pytest.raises(ValueError):
            bound_audit(0.5, 0, seed=1)
        with pytest.raises(ValueError):
            bound_audit(0.5, 100, seed=-3)
