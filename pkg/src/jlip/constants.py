"""Closed-form Lipschitz constants for the distance-ratio metric.

Every constant depends on the translation parameter only through its modulus,
so the functions take |a| directly:

    main_constant(r)   = 1 + log((2+r)/(2-r)) / log 3     (punctured disk, sharp)
    case12_constant(r) = 2 / (2-r)                        (image-puncture branches)
    ball_constant(r)   = 1 + r                            (un-punctured disk, sharp)
    s1_constant(q)     = 2 / (1+q)                        (general two-domain bound)

For 0 < r < 1 these satisfy case12 <= main <= ball < 2, with the factor 2
being the universal Mobius bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

LOG3 = math.log(3.0)
GEHRING_OSGOOD_FACTOR = 2.0


def _check_unit_interval(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or not (0.0 <= value < 1.0):
        raise ValueError(f"{name} must lie in [0, 1), got {value}")
    return value


def main_constant(abs_a: float) -> float:
    """The sharp punctured-disk constant 1 + log((2+|a|)/(2-|a|)) / log 3."""
    abs_a = _check_unit_interval(abs_a, "abs_a")
    return 1.0 + math.log((2.0 + abs_a) / (2.0 - abs_a)) / LOG3


def case12_constant(abs_a: float) -> float:
    """The image-puncture-branch constant 2/(2-|a|)."""
    abs_a = _check_unit_interval(abs_a, "abs_a")
    return 2.0 / (2.0 - abs_a)


def ball_constant(abs_f0: float) -> float:
    """The sharp full-disk automorphism constant 1 + |f(0)|."""
    abs_f0 = _check_unit_interval(abs_f0, "abs_f0")
    return 1.0 + abs_f0


def s1_constant(q: float) -> float:
    """The generic bound 2/(1+q) attached to the condition margin q."""
    q = float(q)
    if not math.isfinite(q) or not (0.0 <= q <= 1.0):
        raise ValueError(f"q must lie in [0, 1], got {q}")
    return 2.0 / (1.0 + q)


@dataclass(frozen=True)
class ConstantsTable:
    """All named constants at one modulus, with their ordering checked."""

    abs_a: float
    c_main: float
    c_case12: float
    c_ball: float
    c_go: float = field(default=GEHRING_OSGOOD_FACTOR)


def constants_table(abs_a: float) -> ConstantsTable:
    abs_a = _check_unit_interval(abs_a, "abs_a")
    table = ConstantsTable(
        abs_a=abs_a,
        c_main=main_constant(abs_a),
        c_case12=case12_constant(abs_a),
        c_ball=ball_constant(abs_a),
    )
    if not (table.c_case12 <= table.c_main <= table.c_ball < table.c_go):
        raise AssertionError(f"constant ordering violated at |a| = {abs_a}: {table}")
    return table
