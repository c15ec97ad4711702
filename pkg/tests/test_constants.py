"""Tests for the closed-form constants and their ordering relations.

Frozen decimals come from an independent mpmath evaluation at 40 digits.
"""

import math

import pytest

from jlip import (
    ball_constant,
    case12_constant,
    constants_table,
    main_constant,
    s1_constant,
)

C_MAIN = {
    0.1: 1.0910998899150469,
    0.3: 1.2751479070377052,
    0.6: 1.5634737703113704,
    0.9: 1.8823864134665246,
}


class TestMainConstant:
    def test_identity_at_zero(self):
        assert main_constant(0.0) == 1.0

    @pytest.mark.parametrize("abs_a,expected", sorted(C_MAIN.items()))
    def test_frozen_values(self, abs_a, expected):
        assert main_constant(abs_a) == pytest.approx(expected, abs=1e-15)

    def test_endpoint_limit(self):
        assert main_constant(1.0 - 1e-12) == pytest.approx(2.0, abs=1e-11)

    @pytest.mark.parametrize("bad", [-0.1, 1.0, 1.5, math.inf, math.nan])
    def test_domain(self, bad):
        with pytest.raises(ValueError):
            main_constant(bad)


class TestCase12Constant:
    def test_values(self):
        assert case12_constant(0.0) == 1.0
        assert case12_constant(0.6) == pytest.approx(10 / 7, rel=1e-15)
        assert case12_constant(0.9) == pytest.approx(20 / 11, rel=1e-15)

    def test_domain(self):
        with pytest.raises(ValueError):
            case12_constant(1.0)


class TestBallConstant:
    def test_values(self):
        assert ball_constant(0.0) == 1.0
        assert ball_constant(0.6) == pytest.approx(1.6, rel=1e-15)

    def test_below_ball_bound(self):
        assert main_constant(0.6) < ball_constant(0.6)


class TestS1Constant:
    def test_isometry_case(self):
        assert s1_constant(1.0) == 1.0

    def test_recovers_universal_factor(self):
        assert s1_constant(0.0) == 2.0

    def test_matches_case12_at_q_one_minus_a(self):
        assert s1_constant(1.0 - 0.6) == pytest.approx(case12_constant(0.6), rel=1e-15)

    @pytest.mark.parametrize("bad", [-0.1, 1.1, math.nan])
    def test_domain(self, bad):
        with pytest.raises(ValueError):
            s1_constant(bad)


class TestConstantsTable:
    def test_degenerate_row(self):
        table = constants_table(0.0)
        assert (table.c_main, table.c_case12, table.c_ball, table.c_go) == (1.0, 1.0, 1.0, 2.0)

    def test_frozen_row(self):
        table = constants_table(0.6)
        assert table.c_main == pytest.approx(C_MAIN[0.6], abs=1e-15)
        assert table.c_case12 == pytest.approx(10 / 7, rel=1e-15)
        assert table.c_ball == pytest.approx(1.6, rel=1e-15)

    def test_ordering_on_dense_grid(self):
        previous = None
        for k in range(1000):
            abs_a = 0.001 * k
            table = constants_table(abs_a)
            assert table.c_case12 <= table.c_main <= table.c_ball < 2.0
            if k > 0:
                assert table.c_case12 < table.c_main  # equality only at abs_a = 0
                assert table.c_main > previous  # strictly increasing
            previous = table.c_main

    def test_domain(self):
        with pytest.raises(ValueError):
            constants_table(-0.2)
