"""Mobius automorphisms of the unit disk and the exact identities they satisfy.

The normalized map is h(z) = (z + a) / (1 + conj(a) z) with |a| < 1; it sends
the open unit disk onto itself with h(0) = a and h(-a) = 0.  An optional
rotation prefactor e^{i*phase} is supported for generality; rotations are
Euclidean isometries fixing the origin, so they never change any of the
distance quantities computed downstream, and the puncture-distance formula
(which presumes the normalized form) rejects a nonzero phase.

All operations are pure scalar functions of their inputs (binary64), safe to
call concurrently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


class DomainError(ValueError):
    """A point lies outside the mathematical domain of an operation."""


def _as_finite_complex(value, name: str) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must have finite coordinates, got {z!r}")
    return z


def _require_in_disk(z, name: str = "z") -> complex:
    z = _as_finite_complex(z, name)
    if abs(z) >= 1.0:
        raise DomainError(f"{name} must lie in the open unit disk, got |{name}| = {abs(z)}")
    return z


@dataclass(frozen=True)
class DiskAutomorphism:
    """The disk automorphism z -> e^{i*phase} (z + a) / (1 + conj(a) z).

    Invariants: |a| < 1 and phase in [0, 2*pi).  phase defaults to 0, the
    normalized form with h(0) = a.
    """

    a: complex
    phase: float = 0.0

    def __post_init__(self):
        a = _as_finite_complex(self.a, "a")
        if abs(a) >= 1.0:
            raise ValueError(f"translation parameter needs |a| < 1, got |a| = {abs(a)}")
        phase = float(self.phase)
        if not math.isfinite(phase) or not (0.0 <= phase < TWO_PI):
            raise ValueError(f"phase must lie in [0, 2*pi), got {phase}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "phase", phase)

    def __call__(self, z) -> complex:
        return mobius_apply(self, z)


def mobius_apply(h: DiskAutomorphism, z) -> complex:
    """Apply h to a point of the open unit disk."""
    z = _require_in_disk(z)
    denom = 1.0 + h.a.conjugate() * z
    # |conj(a) z| <= |a||z| < 1, so the denominator cannot vanish.
    assert denom != 0
    w = (z + h.a) / denom
    if h.phase != 0.0:
        w *= cmath.exp(1j * h.phase)
    return w


def chordal_image_distance(h: DiskAutomorphism, z, w) -> float:
    """|h(z) - h(w)| via the closed form (1-|a|^2)|z-w| / (|1+conj(a)z||1+conj(a)w|).

    Cancellation-free, so it stays accurate for nearly coincident points where
    direct subtraction of the images loses digits.
    """
    z = _require_in_disk(z)
    w = _require_in_disk(w, "w")
    ca = h.a.conjugate()
    s = 1.0 - abs(h.a) ** 2
    return s * abs(z - w) / (abs(1.0 + ca * z) * abs(1.0 + ca * w))


def dist_to_image_puncture(h: DiskAutomorphism, z) -> float:
    """|h(z) - a| = (1-|a|^2)|z| / |1+conj(a)z| for the normalized map.

    Requires phase = 0: with a rotation prefactor the image of the origin is
    no longer a, and the closed form does not apply.
    """
    if h.phase != 0.0:
        raise ValueError("dist_to_image_puncture requires the normalized map (phase = 0)")
    z = _require_in_disk(z)
    s = 1.0 - abs(h.a) ** 2
    return s * abs(z) / abs(1.0 + h.a.conjugate() * z)


def disk_identity_residual(a, z) -> float:
    """Residual of |1+conj(a)z|^2 - |a+z|^2 = (1-|a|^2)(1-|z|^2); zero up to roundoff."""
    a = _as_finite_complex(a, "a")
    z = _as_finite_complex(z, "z")
    lhs = abs(1.0 + a.conjugate() * z) ** 2 - abs(a + z) ** 2
    rhs = (1.0 - abs(a) ** 2) * (1.0 - abs(z) ** 2)
    return lhs - rhs


def derivative_modulus(h: DiskAutomorphism, z) -> float:
    """|h'(z)| = (1-|a|^2) / |1+conj(a)z|^2, the local stretch factor of h."""
    z = _require_in_disk(z)
    s = 1.0 - abs(h.a) ** 2
    return s / abs(1.0 + h.a.conjugate() * z) ** 2


def power_map(h: DiskAutomorphism, m: int, z) -> complex:
    """The m-th pointwise power (h(z))^m; maps the disk into itself."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"power exponent must be a positive integer, got {m!r}")
    return mobius_apply(h, z) ** m
