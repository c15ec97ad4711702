"""Punctured-disk domains and the distance-ratio metric.

A domain here is the open unit disk minus a finite set of interior punctures;
the boundary distance of a point is the minimum of its distance to the unit
circle and to each puncture.  The distance-ratio metric is

    j(x, y) = log(1 + |x - y| / min(d(x), d(y))).

The four-branch classifier ``t_branch`` reports which of the candidate
distances {|h(z)-a|, |h(w)-a|, 1-|h(z)|, 1-|h(w)|} realizes the boundary
distance on the image side of the automorphism h(z) = (z+a)/(1+conj(a)z);
ties resolve in that fixed order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .geometry import DomainError, _as_finite_complex, _require_in_disk

# User-facing rejection band around punctures: log(1 + |x-y|/d) degenerates
# when d collapses to roundoff scale.
PUNCTURE_GUARD = 1e-15


class BranchTag(enum.Enum):
    """Which candidate attains T(a,z,w), in the fixed tie-break order."""

    IMAGE_PUNCTURE_AT_Z = "image_puncture_at_z"
    IMAGE_PUNCTURE_AT_W = "image_puncture_at_w"
    BOUNDARY_AT_Z = "boundary_at_z"
    BOUNDARY_AT_W = "boundary_at_w"


_TAG_ORDER = tuple(BranchTag)


@dataclass(frozen=True)
class TBranch:
    tag: BranchTag
    value: float


@dataclass(frozen=True)
class PuncturedDisk:
    """The open unit disk minus a finite, pairwise-distinct puncture set."""

    punctures: tuple = ()

    def __post_init__(self):
        pts = tuple(_as_finite_complex(p, "puncture") for p in self.punctures)
        for p in pts:
            if abs(p) >= 1.0:
                raise ValueError(f"puncture must lie inside the unit disk, got |p| = {abs(p)}")
        if len(set(pts)) != len(pts):
            raise ValueError("punctures must be pairwise distinct")
        object.__setattr__(self, "punctures", pts)

    def contains(self, z) -> bool:
        try:
            self.require_member(z)
        except ValueError:
            return False
        return True

    def require_member(self, z, name: str = "z") -> complex:
        z = _require_in_disk(z, name)
        for p in self.punctures:
            if abs(z - p) <= PUNCTURE_GUARD:
                raise DomainError(f"{name} = {z!r} coincides with the puncture at {p!r}")
        return z


UNIT_DISK = PuncturedDisk(())
DISK_MINUS_ORIGIN = PuncturedDisk((0j,))


def boundary_distance(domain: PuncturedDisk, z) -> float:
    """Distance from z to the boundary of the domain (circle and punctures)."""
    z = domain.require_member(z)
    d = 1.0 - abs(z)
    for p in domain.punctures:
        d = min(d, abs(z - p))
    return d


def j_metric(domain: PuncturedDisk, x, y) -> float:
    """The distance-ratio metric j(x, y) on the domain."""
    x = domain.require_member(x, "x")
    y = domain.require_member(y, "y")
    if x == y:
        return 0.0
    return math.log1p(abs(x - y) / min(boundary_distance(domain, x), boundary_distance(domain, y)))


def t_branch(a, z, w) -> TBranch:
    """Classify which candidate attains T(a,z,w) = min{|h(z)-a|, |h(w)-a|, 1-|h(z)|, 1-|h(w)|}.

    Candidates are evaluated through the cancellation-free closed forms
    |h(z)-a| = (1-|a|^2)|z|/|1+conj(a)z| and
    1-|h(z)|^2 = (1-|a|^2)(1-|z|^2)/|1+conj(a)z|^2, which agree with the
    direct image distances to machine precision.
    """
    a = _as_finite_complex(a, "a")
    abs_a = abs(a)
    if abs_a == 0.0:
        raise ValueError("t_branch needs a != 0 (otherwise the image puncture is the origin itself)")
    if abs_a >= 1.0:
        raise ValueError(f"t_branch needs |a| < 1, got |a| = {abs_a}")
    z = DISK_MINUS_ORIGIN.require_member(z, "z")
    w = DISK_MINUS_ORIGIN.require_member(w, "w")

    s = 1.0 - abs_a * abs_a
    ca = a.conjugate()
    candidates = []
    for p in (z, w):
        ap = abs(p)
        u = abs(1.0 + ca * p)
        candidates.append(s * ap / u)  # image-puncture distance
    for p in (z, w):
        ap = abs(p)
        u = abs(1.0 + ca * p)
        q = s * (1.0 - ap) * (1.0 + ap) / (u * u)  # 1 - |h(p)|^2; p near -a can graze 1 + ulp
        candidates.append(q / (1.0 + math.sqrt(max(0.0, 1.0 - q))))
    value = min(candidates)
    return TBranch(tag=_TAG_ORDER[candidates.index(value)], value=value)
