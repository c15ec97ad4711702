"""Numeric checkers for the supporting inequalities and monotonicity claims.

Each checker evaluates one inequality directly; the ``run_*_suite`` functions
drive them over seeded random samples and report the worst margin together
with a counterexample when a contract is violated.  The suites are what the
CLI ``verify`` subcommand executes.

Naming note: the free variable of the logarithmic inequality is called ``t``
here so it cannot be confused with the Mobius translation parameter ``a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .constants import case12_constant, s1_constant
from .domains import (
    DISK_MINUS_ORIGIN,
    BranchTag,
    PuncturedDisk,
    boundary_distance,
    j_metric,
    t_branch,
)
from .geometry import (
    DiskAutomorphism,
    _as_finite_complex,
    chordal_image_distance,
    mobius_apply,
)

# Few-ulp guard for iff-style float comparisons at analytic boundaries.
_EQUALITY_SLACK = 4e-15


@dataclass(frozen=True)
class XYPair:
    """The pair (X, Y) of distance ratios attached to a point pair.

    X = |z-w| / min(d(z), d(w)) = exp(j(z,w)) - 1, and Y is the ratio of the
    image-side to source-side distance quotients.
    """

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and self.x >= 0.0):
            raise ValueError(f"X must be finite and >= 0, got {self.x}")
        if not (math.isfinite(self.y) and self.y > 0.0):
            raise ValueError(f"Y must be finite and > 0, got {self.y}")


def le1_gap(t: float, q: float) -> float:
    """Margin of (1-q)/(1+q)*t >= log((q+e^t)/(1+q e^t)); nonnegative for t >= 0, q in [0,1]."""
    t = float(t)
    q = float(q)
    if not math.isfinite(t) or t < 0.0:
        raise ValueError(f"t must be finite and >= 0, got {t}")
    if not math.isfinite(q) or not (0.0 <= q <= 1.0):
        raise ValueError(f"q must lie in [0, 1], got {q}")
    if t == 0.0 or q == 0.0:
        return 0.0  # equality holds exactly on both axes
    # (q+e^t)/(1+q e^t) rewritten with e^{-t} so large t cannot overflow.
    et = math.exp(-t)
    return (1.0 - q) / (1.0 + q) * t - (math.log1p(q * et) - math.log(q + et))


def s1_xy(a, z, w) -> XYPair:
    """Compute (X, Y) for the map h on the origin-punctured disk at a pair (z, w)."""
    a = _as_finite_complex(a, "a")
    if not (0.0 < abs(a) < 1.0):
        raise ValueError(f"need 0 < |a| < 1, got |a| = {abs(a)}")
    z = DISK_MINUS_ORIGIN.require_member(z, "z")
    w = DISK_MINUS_ORIGIN.require_member(w, "w")
    if z == w:
        raise ValueError("z and w must be distinct")

    h = DiskAutomorphism(a)
    sep = abs(z - w)
    d_base = min(
        boundary_distance(DISK_MINUS_ORIGIN, z),
        boundary_distance(DISK_MINUS_ORIGIN, w),
    )
    x = sep / d_base

    image = PuncturedDisk((a,))
    d_image = min(
        boundary_distance(image, mobius_apply(h, z)),
        boundary_distance(image, mobius_apply(h, w)),
    )
    y = (sep / chordal_image_distance(h, z, w)) * (d_image / d_base)

    x_ref = math.expm1(j_metric(DISK_MINUS_ORIGIN, z, w))
    if abs(x - x_ref) > 1e-12 * max(1.0, abs(x_ref)):
        raise AssertionError(f"X cross-check failed: {x} vs exp(j)-1 = {x_ref}")
    return XYPair(x=x, y=y)


def s1_condition_margin(xy: XYPair, q: float) -> float:
    """Margin Y + (Y-1)/(X+1) - q; nonnegative return certifies the hypothesis for q."""
    q = float(q)
    if not math.isfinite(q) or not (0.0 <= q <= 1.0):
        raise ValueError(f"q must lie in [0, 1], got {q}")
    return xy.y + (xy.y - 1.0) / (xy.x + 1.0) - q


def _check_positive(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"{name} must be finite and > 0, got {value}")
    return value


def l3_part1_holds(A: float, B: float, C: float, D: float, theta: float) -> bool:
    """Truth of 1 + (B/D)t(1 + D/(1+A))(1 + Bt/(1-C)) <= (1 + (B/D)t)(1 + Bt/(1-C)).

    Equivalent to B*theta <= A + C; the comparison carries a few-ulp slack so
    exact-equality inputs classify as true.
    """
    A = _check_positive(A, "A")
    B = _check_positive(B, "B")
    D = _check_positive(D, "D")
    C = float(C)
    if not (0.0 < C < 1.0):
        raise ValueError(f"C must lie in (0, 1), got {C}")
    theta = float(theta)
    if not math.isfinite(theta) or theta < 0.0:
        raise ValueError(f"theta must be finite and >= 0, got {theta}")

    p = B / D * theta
    r = 1.0 + B * theta / (1.0 - C)
    lhs = 1.0 + p * (1.0 + D / (1.0 + A)) * r
    rhs = (1.0 + p) * r
    return lhs <= rhs + _EQUALITY_SLACK * max(1.0, rhs)


def l3_part2_ratio(B: float, C: float, D: float, theta: float) -> float:
    """The ratio log(1 + B*theta/(1-C)) / log(1 + B*theta/D).

    Monotone increasing in theta when C + D < 1 and decreasing when C + D > 1
    (checked by the suite, not here).
    """
    B = _check_positive(B, "B")
    D = _check_positive(D, "D")
    theta = _check_positive(theta, "theta")
    C = float(C)
    if not (0.0 < C < 1.0):
        raise ValueError(f"C must lie in (0, 1), got {C}")
    return math.log1p(B / (1.0 - C) * theta) / math.log1p(B / D * theta)


def k_ratio(r: float, abs_a: float) -> float:
    """log(1 + |a|/(1-|a|(1-r))) / log(1 + 1/r); monotone increasing in r."""
    r = _check_positive(r, "r")
    abs_a = float(abs_a)
    if not (0.0 < abs_a < 1.0):
        raise ValueError(f"abs_a must lie in (0, 1), got {abs_a}")
    return math.log1p(abs_a / (1.0 - abs_a * (1.0 - r))) / math.log1p(1.0 / r)


def g_ratio(r: float, abs_a: float) -> float:
    """1 + log(1 + |a|/(1-|a| r)) / log(1 + 1/r) on 0 < r <= 1/2; increasing in r."""
    r = float(r)
    if not (0.0 < r <= 0.5):
        raise ValueError(f"r must lie in (0, 0.5], got {r}")
    abs_a = float(abs_a)
    if not (0.0 < abs_a < 1.0):
        raise ValueError(f"abs_a must lie in (0, 1), got {abs_a}")
    return 1.0 + math.log1p(abs_a / (1.0 - abs_a * r)) / math.log1p(1.0 / r)


# ----------------------------------------------------------------------------
# Property suites
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteResult:
    """Outcome of one randomized property suite.

    ``worst`` is the suite's most adverse signed margin (negative margins are
    violations everywhere except the iff suite, where it counts mismatches).
    """

    name: str
    passed: bool
    checked: int
    worst: float
    counterexample: Optional[dict] = None

    def summary(self) -> str:
        state = "pass" if self.passed else "FAIL"
        return f"{self.name}: {state} ({self.checked} checks, worst margin {self.worst:.3e})"


def _annulus_point(rng, lo: float, hi: float) -> complex:
    radius = math.sqrt(rng.uniform(lo * lo, hi * hi))
    angle = rng.uniform(0.0, 2.0 * math.pi)
    return complex(radius * math.cos(angle), radius * math.sin(angle))


def run_le1_suite(samples: int, rng) -> SuiteResult:
    """le1_gap(t, q) >= -1e-12 for t in [0, 20], q in [0, 1]."""
    ts = rng.uniform(0.0, 20.0, samples)
    qs = rng.uniform(0.0, 1.0, samples)
    worst = math.inf
    witness = None
    for t, q in zip(ts, qs):
        gap = le1_gap(t, q)
        if gap < worst:
            worst = gap
            witness = {"t": t, "q": q, "gap": gap}
    passed = worst >= -1e-12
    return SuiteResult("le1_nonnegative", passed, samples, worst, None if passed else witness)


def run_l3_part1_suite(samples: int, rng) -> SuiteResult:
    """Agreement of l3_part1_holds with B*theta <= A+C outside a 1e-9 band."""
    A = rng.uniform(0.05, 3.0, samples)
    B = rng.uniform(0.05, 3.0, samples)
    D = rng.uniform(0.05, 3.0, samples)
    C = rng.uniform(0.05, 0.95, samples)
    theta = rng.uniform(0.0, 3.0, samples)
    checked = 0
    mismatches = 0
    witness = None
    for k in range(samples):
        bt = B[k] * theta[k]
        ac = A[k] + C[k]
        if abs(bt - ac) <= 1e-9 * max(bt, ac):
            continue  # undefined band around exact equality
        checked += 1
        got = l3_part1_holds(A[k], B[k], C[k], D[k], theta[k])
        want = bt <= ac
        if got != want:
            mismatches += 1
            if witness is None:
                witness = {
                    "A": A[k], "B": B[k], "C": C[k], "D": D[k], "theta": theta[k],
                    "predicate": want, "checker": got,
                }
    passed = mismatches == 0
    return SuiteResult("l3_part1_iff", passed, checked, float(-mismatches), witness)


def run_l3_part2_suite(samples: int, rng) -> SuiteResult:
    """Monotonicity of the log-ratio in theta: up for C+D < 1, down for C+D > 1."""
    thetas = np.geomspace(0.01, 5.0, 12)
    worst = math.inf
    witness = None
    checked = 0
    for k in range(samples):
        B = rng.uniform(0.05, 3.0)
        if k % 2 == 0:
            C = rng.uniform(0.02, 0.9)
            D = rng.uniform(0.01, 0.98 * (1.0 - C))
            sign = 1.0  # C + D < 1: increasing
        else:
            C = rng.uniform(0.05, 0.95)
            D = rng.uniform(1.001 - C, 3.0)
            sign = -1.0  # C + D > 1: decreasing
        values = [l3_part2_ratio(B, C, D, th) for th in thetas]
        checked += len(values) - 1
        for v0, v1 in zip(values, values[1:]):
            margin = sign * (v1 - v0)
            if margin < worst:
                worst = margin
                witness = {"B": B, "C": C, "D": D, "direction": sign, "values": values}
    passed = worst >= -1e-12
    return SuiteResult("l3_part2_monotone", passed, checked, worst, None if passed else witness)


def _grid_monotone(fn, grid, abs_a_values) -> tuple:
    worst = math.inf
    witness = None
    checked = 0
    for abs_a in abs_a_values:
        values = [fn(r, abs_a) for r in grid]
        checked += len(values) - 1
        for v0, v1 in zip(values, values[1:]):
            margin = v1 - v0
            if margin < worst:
                worst = margin
                witness = {"abs_a": abs_a, "values": values}
    return worst, witness, checked


def run_k_monotone_suite(samples: int, rng) -> SuiteResult:
    """k_ratio nondecreasing on a grid over (0, 0.5] for random |a|."""
    grid = np.linspace(0.01, 0.5, 16)
    worst, witness, checked = _grid_monotone(k_ratio, grid, rng.uniform(0.01, 0.99, samples))
    passed = worst >= -1e-12
    return SuiteResult("k_ratio_monotone", passed, checked, worst, None if passed else witness)


def run_g_monotone_suite(samples: int, rng) -> SuiteResult:
    """g_ratio nondecreasing on a grid over (0, 0.5] for random |a|."""
    grid = np.linspace(0.01, 0.5, 16)
    worst, witness, checked = _grid_monotone(g_ratio, grid, rng.uniform(0.01, 0.99, samples))
    passed = worst >= -1e-12
    return SuiteResult("g_ratio_monotone", passed, checked, worst, None if passed else witness)


def run_s1_chain_suite(samples: int, rng) -> SuiteResult:
    """Whenever the condition margin admits a q, j' <= 2/(1+q) * j holds."""
    worst = math.inf
    witness = None
    checked = 0
    for _ in range(samples):
        a = _annulus_point(rng, 0.05, 0.95)
        z = _annulus_point(rng, 1e-3, 0.995)
        w = _annulus_point(rng, 1e-3, 0.995)
        if z == w:
            continue
        xy = s1_xy(a, z, w)
        bound = xy.y + (xy.y - 1.0) / (xy.x + 1.0)
        if bound < 0.0:
            continue  # no admissible q for this pair
        q = min(1.0, bound)
        checked += 1
        h = DiskAutomorphism(a)
        j_src = j_metric(DISK_MINUS_ORIGIN, z, w)
        j_img = j_metric(PuncturedDisk((a,)), mobius_apply(h, z), mobius_apply(h, w))
        margin = s1_constant(q) * j_src - j_img
        if margin < worst:
            worst = margin
            witness = {"a": a, "z": z, "w": w, "q": q, "j_source": j_src, "j_image": j_img}
    passed = worst >= -1e-12
    return SuiteResult("s1_chain", passed, checked, worst, None if passed else witness)


def run_case2_chain_suite(samples: int, rng) -> SuiteResult:
    """On pairs whose image branch is the puncture distance at w, j' <= 2/(2-|a|) * j."""
    worst = math.inf
    witness = None
    checked = 0
    attempts = 0
    max_attempts = 100 * samples
    while checked < samples and attempts < max_attempts:
        attempts += 1
        a = _annulus_point(rng, 0.05, 0.95)
        z = _annulus_point(rng, 1e-3, 0.995)
        w = _annulus_point(rng, 1e-3, 0.995)
        if z == w:
            continue
        if t_branch(a, z, w).tag is not BranchTag.IMAGE_PUNCTURE_AT_W:
            continue
        checked += 1
        h = DiskAutomorphism(a)
        j_src = j_metric(DISK_MINUS_ORIGIN, z, w)
        j_img = j_metric(PuncturedDisk((a,)), mobius_apply(h, z), mobius_apply(h, w))
        margin = case12_constant(abs(a)) * j_src - j_img
        if margin < worst:
            worst = margin
            witness = {"a": a, "z": z, "w": w, "j_source": j_src, "j_image": j_img}
    passed = worst >= -1e-12 and checked == samples
    return SuiteResult("case2_chain", passed, checked, worst, None if passed else witness)


_SUITES = (
    run_le1_suite,
    run_l3_part1_suite,
    run_l3_part2_suite,
    run_k_monotone_suite,
    run_g_monotone_suite,
    run_s1_chain_suite,
    run_case2_chain_suite,
)


def run_all_suites(samples: int, seed: int) -> list:
    """Run every property suite with deterministic per-suite RNG streams.

    ``samples`` is the base count; the monotonicity suites scale it down
    (log-ratio tuples by 10x, k/g grids by 100x) to keep total work
    proportional to one pass over ``samples`` scalar checks.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    counts = {
        run_le1_suite: samples,
        run_l3_part1_suite: samples,
        run_l3_part2_suite: max(1, samples // 10),
        run_k_monotone_suite: max(1, samples // 100),
        run_g_monotone_suite: max(1, samples // 100),
        run_s1_chain_suite: samples,
        run_case2_chain_suite: samples,
    }
    streams = np.random.SeedSequence(seed).spawn(len(_SUITES))
    return [
        suite(counts[suite], np.random.default_rng(stream))
        for suite, stream in zip(_SUITES, streams)
    ]
