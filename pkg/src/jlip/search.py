"""Supremum search for distance-ratio Lipschitz constants of disk automorphisms.

The estimator runs three deterministic stages: a polar pair grid (radii
cosine-clustered toward the exclusion bands), a scan of the w -> z diagonal
limit over the same grid, and derivative-free compass refinement of the top
candidates.  Compass moves beat gradient steps here because the objective is
only piecewise-smooth across branch switches of the boundary-distance minima.

Pair separations for the image side use the cancellation-free chordal closed
form whenever one exists (the automorphism itself, and its first power), so
no evaluated candidate can drift above the closed-form bound by more than
float noise.  Everything is bit-reproducible for a fixed SearchConfig.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .constants import ball_constant, main_constant
from .domains import DISK_MINUS_ORIGIN, BranchTag
from .geometry import _as_finite_complex

_UINT64_MAX = 2**64 - 1
_BOUND_SLACK = 1e-9
_CHUNK_ROWS = 256
# Below this separation a directly subtracted image distance is dominated by
# roundoff; such pairs belong to the diagonal-limit regime anyway.
_SEP_FLOOR = 1e-9
# Theorem-bound asserts are skipped when the closed form is within float noise
# of 1 (cancellation near the boundary band can exceed the 1e-9 slack there).
_ASSERT_MIN_ABS_A = 1e-6

_AUDIT_MARGIN = 1e-6
_AUDIT_BATCH = 1 << 17


@dataclass(frozen=True)
class SearchConfig:
    """Tuning knobs for the supremum search; the CLI exposes them as flags."""

    grid_n: int = 48
    refine_iters: int = 200
    refine_starts: int = 16
    diag_epsilon: float = 1e-6
    boundary_margin: float = 1e-9
    seed: int = 0
    tol: float = 1e-3

    def __post_init__(self):
        if not isinstance(self.grid_n, int) or self.grid_n < 4:
            raise ValueError(f"grid_n must be an integer >= 4, got {self.grid_n!r}")
        if not isinstance(self.refine_iters, int) or self.refine_iters < 0:
            raise ValueError(f"refine_iters must be a nonnegative integer, got {self.refine_iters!r}")
        if not isinstance(self.refine_starts, int) or self.refine_starts < 0:
            raise ValueError(f"refine_starts must be a nonnegative integer, got {self.refine_starts!r}")
        if not (self.diag_epsilon > 0.0):
            raise ValueError(f"diag_epsilon must be positive, got {self.diag_epsilon}")
        if not (0.0 < self.boundary_margin < 0.5):
            raise ValueError(f"boundary_margin must lie in (0, 0.5), got {self.boundary_margin}")
        if not isinstance(self.seed, int) or not (0 <= self.seed <= _UINT64_MAX):
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not (self.tol > 0.0):
            raise ValueError(f"tol must be positive, got {self.tol}")


@dataclass(frozen=True)
class RatioReport:
    """Result of one supremum search."""

    a: complex
    sup_estimate: float
    argmax_z: complex
    argmax_w: complex
    closed_form: Optional[float]
    gap: Optional[float]
    branch_histogram: dict
    evaluations: int
    seed: int


@dataclass(frozen=True)
class PowerTable:
    """Estimates of the power-map constants along m = 1, 2, 4, ..., 2^n_max."""

    a: complex
    entries: tuple  # ((m, RatioReport), ...)
    violations: tuple  # ((m_prev, m_next, increase), ...) beyond 2*tol


@dataclass(frozen=True)
class AuditResult:
    """Maximum ratio over random admissible pairs, with bound-violation count."""

    a: complex
    max_ratio: float
    violations: int
    samples: int
    seed: int
    argmax_z: complex
    argmax_w: complex


# ----------------------------------------------------------------------------
# Scalar kernels shared by the public operations and the refinement stage
# ----------------------------------------------------------------------------


def _boundary_gap(q: float) -> float:
    """1 - |h| from q = 1 - |h|^2; q can graze 1 + ulp when h(z) is near 0."""
    return q / (1.0 + math.sqrt(max(0.0, 1.0 - q)))


def _punctured_pair_raw(a: complex, z: complex, w: complex):
    """(J, branch index) for the punctured-disk ratio; assumes valid inputs."""
    abs_a = abs(a)
    s = 1.0 - abs_a * abs_a
    ca = a.conjugate()
    az, aw = abs(z), abs(w)
    jb = math.log1p(abs(z - w) / min(az, 1.0 - az, aw, 1.0 - aw))
    uz = abs(1.0 + ca * z)
    uw = abs(1.0 + ca * w)
    cands = (
        s * az / uz,
        s * aw / uw,
        _boundary_gap(s * (1.0 - az) * (1.0 + az) / (uz * uz)),
        _boundary_gap(s * (1.0 - aw) * (1.0 + aw) / (uw * uw)),
    )
    tmin = min(cands)
    ji = math.log1p(s * abs(z - w) / (uz * uw) / tmin)
    return ji / jb, cands.index(tmin)


def _punctured_diag_raw(a: complex, z: complex):
    """(limit, branch index) of the w -> z diagonal limit; assumes valid inputs."""
    abs_a = abs(a)
    s = 1.0 - abs_a * abs_a
    az = abs(z)
    u = abs(1.0 + a.conjugate() * z)
    ip = s * az / u
    bd = _boundary_gap(s * (1.0 - az) * (1.0 + az) / (u * u))
    tag = 0 if ip <= bd else 2
    return (s / (u * u)) * min(az, 1.0 - az) / min(ip, bd), tag


def ratio_J(a, z, w) -> float:
    """The Lipschitz ratio j_{B\\{a}}(h(z), h(w)) / j_{B\\{0}}(z, w).

    a = 0 degenerates to the identity of the punctured disk and yields 1 up
    to roundoff.
    """
    a = _as_finite_complex(a, "a")
    if abs(a) >= 1.0:
        raise ValueError(f"need |a| < 1, got |a| = {abs(a)}")
    z = DISK_MINUS_ORIGIN.require_member(z, "z")
    w = DISK_MINUS_ORIGIN.require_member(w, "w")
    if z == w:
        raise ValueError("z and w must be distinct")
    return _punctured_pair_raw(a, z, w)[0]


def diagonal_limit(a, z) -> float:
    """The w -> z limit of ratio_J: |h'(z)| d(z) / d'(h(z))."""
    a = _as_finite_complex(a, "a")
    if abs(a) >= 1.0:
        raise ValueError(f"need |a| < 1, got |a| = {abs(a)}")
    z = DISK_MINUS_ORIGIN.require_member(z, "z")
    return _punctured_diag_raw(a, z)[0]


# ----------------------------------------------------------------------------
# Search objectives
# ----------------------------------------------------------------------------


def _polar_grid(grid_n: int, lo: float, hi: float):
    """Polar product grid with radii cosine-clustered toward both ends of [lo, hi]."""
    u = (np.arange(grid_n) + 0.5) / grid_n
    radii = lo + (hi - lo) * 0.5 * (1.0 - np.cos(np.pi * u))
    angles = 2.0 * np.pi * np.arange(grid_n) / grid_n
    pts = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    return pts, np.repeat(radii, grid_n)


class _PuncturedObjective:
    """J(z, w; a) on B\\{0} -> B\\{a}, with the search exclusion bands applied."""

    def __init__(self, a: complex, cfg: SearchConfig):
        self.a = a
        self.conj_a = a.conjugate()
        self.abs_a = abs(a)
        self.s = 1.0 - self.abs_a * self.abs_a
        self.margin = cfg.boundary_margin
        self.diag_eps = cfg.diag_epsilon

    def _admissible(self, z: complex) -> bool:
        az = abs(z)
        return self.margin <= az <= 1.0 - self.margin

    def pair_value(self, z: complex, w: complex):
        if not (self._admissible(z) and self._admissible(w)):
            return None
        value, tag = _punctured_pair_raw(self.a, z, w)
        az, aw = abs(z), abs(w)
        jb = math.log1p(abs(z - w) / min(az, 1.0 - az, aw, 1.0 - aw))
        if jb < self.diag_eps:
            return None
        return value, tag

    def diag_value(self, z: complex):
        if not self._admissible(z):
            return None
        return _punctured_diag_raw(self.a, z)

    def grid(self, grid_n: int):
        return _polar_grid(grid_n, self.margin, 1.0 - self.margin)

    def point_arrays(self, pts, radii):
        u = np.abs(1.0 + self.conj_a * pts)
        q = self.s * (1.0 - radii) * (1.0 + radii) / (u * u)
        return {
            "u": u,
            "ip": self.s * radii / u,
            "bd": q / (1.0 + np.sqrt(np.maximum(0.0, 1.0 - q))),
            "d_base": np.minimum(radii, 1.0 - radii),
            "deriv": self.s / (u * u),
        }

    def pair_block(self, pts, arr, i0, i1):
        sep = np.abs(pts[i0:i1, None] - pts[None, :])
        jb = np.log1p(sep / np.minimum(arr["d_base"][i0:i1, None], arr["d_base"][None, :]))
        cands = np.stack(
            np.broadcast_arrays(
                arr["ip"][i0:i1, None],
                arr["ip"][None, :],
                arr["bd"][i0:i1, None],
                arr["bd"][None, :],
            )
        )
        tag = np.argmin(cands, axis=0)
        tmin = np.min(cands, axis=0)
        chord = self.s * sep / (arr["u"][i0:i1, None] * arr["u"][None, :])
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.log1p(chord / tmin) / jb
        ratio[jb < self.diag_eps] = -np.inf
        return ratio, tag

    def diag_block(self, pts, arr):
        limit = arr["deriv"] * arr["d_base"] / np.minimum(arr["ip"], arr["bd"])
        tag = np.where(arr["ip"] <= arr["bd"], 0, 2)
        return limit, tag


class _PowerObjective:
    """The ratio j_D(h(z)^m, h(w)^m) / j_D(z, w) on the full disk."""

    def __init__(self, a: complex, m: int, cfg: SearchConfig):
        self.a = a
        self.conj_a = a.conjugate()
        self.abs_a = abs(a)
        self.s = 1.0 - self.abs_a * self.abs_a
        self.m = m
        self.margin = cfg.boundary_margin
        self.diag_eps = cfg.diag_epsilon

    def _point(self, z: complex):
        az = abs(z)
        if az > 1.0 - self.margin:
            return None
        u = abs(1.0 + self.conj_a * z)
        q = min(1.0, self.s * (1.0 - az) * (1.0 + az) / (u * u))  # 1 - |h(z)|^2
        log_r2 = math.log1p(-q) if q < 1.0 else -math.inf
        d_img = -math.expm1(0.5 * self.m * log_r2)  # 1 - |h(z)|^m
        return u, log_r2, d_img, 1.0 - az

    def _image(self, z: complex) -> complex:
        return ((z + self.a) / (1.0 + self.conj_a * z)) ** self.m

    def pair_value(self, z: complex, w: complex):
        pz = self._point(z)
        pw = self._point(w)
        if pz is None or pw is None:
            return None
        sep = abs(z - w)
        if self.m > 1 and sep < _SEP_FLOOR:
            return None
        jb = math.log1p(sep / min(pz[3], pw[3]))
        if jb < self.diag_eps:
            return None
        if self.m == 1:
            sep_img = self.s * sep / (pz[0] * pw[0])
        else:
            sep_img = abs(self._image(z) - self._image(w))
        tag = 2 if pz[2] <= pw[2] else 3
        return math.log1p(sep_img / min(pz[2], pw[2])) / jb, tag

    def diag_value(self, z: complex):
        p = self._point(z)
        if p is None:
            return None
        u, log_r2, d_img, d_base = p
        hpow = 1.0 if self.m == 1 else math.exp(0.5 * (self.m - 1) * log_r2)  # |h|^(m-1)
        deriv = self.m * hpow * self.s / (u * u)
        return deriv * d_base / d_img, 2

    def grid(self, grid_n: int):
        return _polar_grid(grid_n, 0.0, 1.0 - self.margin)

    def point_arrays(self, pts, radii):
        u = np.abs(1.0 + self.conj_a * pts)
        q = np.minimum(1.0, self.s * (1.0 - radii) * (1.0 + radii) / (u * u))
        with np.errstate(divide="ignore"):
            log_r2 = np.log1p(-q)  # -inf where h(z) lands exactly on 0
        hpow = 1.0 if self.m == 1 else np.exp(0.5 * (self.m - 1) * log_r2)
        arr = {
            "u": u,
            "d_img": -np.expm1(0.5 * self.m * log_r2),
            "d_base": 1.0 - radii,
            "deriv": self.m * hpow * self.s / (u * u),
        }
        if self.m > 1:
            arr["image"] = ((pts + self.a) / (1.0 + self.conj_a * pts)) ** self.m
        return arr

    def pair_block(self, pts, arr, i0, i1):
        sep = np.abs(pts[i0:i1, None] - pts[None, :])
        jb = np.log1p(sep / np.minimum(arr["d_base"][i0:i1, None], arr["d_base"][None, :]))
        di = arr["d_img"][i0:i1, None]
        dj = arr["d_img"][None, :]
        if self.m == 1:
            sep_img = self.s * sep / (arr["u"][i0:i1, None] * arr["u"][None, :])
        else:
            sep_img = np.abs(arr["image"][i0:i1, None] - arr["image"][None, :])
        tag = np.where(di <= dj, 2, 3)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.log1p(sep_img / np.minimum(di, dj)) / jb
        bad = jb < self.diag_eps
        if self.m > 1:
            bad |= sep < _SEP_FLOOR
        ratio[bad] = -np.inf
        return ratio, tag

    def diag_block(self, pts, arr):
        limit = arr["deriv"] * arr["d_base"] / arr["d_img"]
        tag = np.full(pts.size, 2)
        return limit, tag


# ----------------------------------------------------------------------------
# Driver: grid scan + diagonal scan + compass refinement
# ----------------------------------------------------------------------------

_SQ2 = 1.0 / math.sqrt(2.0)


def _stencil(dim: int):
    moves = []
    for k in range(dim):
        for sign in (-1.0, 1.0):
            d = [0.0] * dim
            d[k] = sign
            moves.append(tuple(d))
    # pairwise diagonals: the min-based metric has kinked ridges (e.g. along
    # symmetric pairs) where no single-coordinate move improves
    for k0 in range(dim):
        for k1 in range(k0 + 1, dim):
            for s0 in (-_SQ2, _SQ2):
                for s1 in (-_SQ2, _SQ2):
                    d = [0.0] * dim
                    d[k0] = s0
                    d[k1] = s1
                    moves.append(tuple(d))
    return tuple(moves)


_PAIR_STENCIL = _stencil(4)
_DIAG_STENCIL = _stencil(2)


def _compass(value_fn, x0, v0, stencil, cfg):
    """Greedy pattern search with step halving; returns (value, x, evals, hist)."""
    x = tuple(x0)
    best = v0
    step = 2.0 / cfg.grid_n
    evals = 0
    hist = np.zeros(4, dtype=np.int64)
    for _ in range(cfg.refine_iters):
        move = None
        for d in stencil:
            cand = tuple(x[k] + step * d[k] for k in range(len(x)))
            out = value_fn(cand)
            if out is None:
                continue
            evals += 1
            hist[out[1]] += 1
            if out[0] > best and (move is None or out[0] > move[0]):
                move = (out[0], cand)
        if move is None:
            step *= 0.5
            if step < 1e-13:
                break
        else:
            best, x = move
    return best, x, evals, hist


def _chunk_top(ratio, pts, i0, keep):
    flat = ratio.ravel()
    k = min(keep, flat.size)
    if k == 0:
        return []
    idx = np.argpartition(flat, flat.size - k)[flat.size - k:]
    n = pts.size
    out = []
    for q in idx:
        v = flat[q]
        if math.isfinite(v):
            out.append((float(v), complex(pts[i0 + q // n]), complex(pts[q % n])))
    return out


_SORT_KEY = lambda e: (-e[1], e[2].real, e[2].imag, e[3].real, e[3].imag)


def _run_search(obj, cfg: SearchConfig):
    pts, radii = obj.grid(cfg.grid_n)
    arr = obj.point_arrays(pts, radii)
    n = pts.size
    hist = np.zeros(4, dtype=np.int64)
    evaluations = 0

    pair_top = []
    for i0 in range(0, n, _CHUNK_ROWS):
        i1 = min(n, i0 + _CHUNK_ROWS)
        ratio, tag = obj.pair_block(pts, arr, i0, i1)
        finite = np.isfinite(ratio)
        evaluations += int(np.count_nonzero(finite))
        hist += np.bincount(tag[finite].ravel(), minlength=4)
        pair_top.extend(_chunk_top(ratio, pts, i0, cfg.refine_starts))

    limit, dtag = obj.diag_block(pts, arr)
    evaluations += n
    hist += np.bincount(dtag, minlength=4)
    k = min(cfg.refine_starts, n) or 1
    didx = np.argpartition(limit, n - k)[n - k:]

    candidates = [("pair", v, z, w) for v, z, w in pair_top]
    candidates.extend(("diag", float(limit[q]), complex(pts[q]), complex(pts[q])) for q in didx)
    candidates.sort(key=_SORT_KEY)

    results = list(candidates)
    for kind, value, z, w in candidates[: cfg.refine_starts]:
        if kind == "pair":
            fn = lambda x: obj.pair_value(complex(x[0], x[1]), complex(x[2], x[3]))
            rv, rx, ev, rh = _compass(fn, (z.real, z.imag, w.real, w.imag), value, _PAIR_STENCIL, cfg)
            results.append(("pair", rv, complex(rx[0], rx[1]), complex(rx[2], rx[3])))
        else:
            fn = lambda x: obj.diag_value(complex(x[0], x[1]))
            rv, rx, ev, rh = _compass(fn, (z.real, z.imag), value, _DIAG_STENCIL, cfg)
            rz = complex(rx[0], rx[1])
            results.append(("diag", rv, rz, rz))
        evaluations += ev
        hist += rh

    results.sort(key=_SORT_KEY)
    _, sup, argz, argw = results[0]
    return sup, argz, argw, hist, evaluations


def _histogram_dict(hist) -> dict:
    return {tag.value: int(count) for tag, count in zip(BranchTag, hist)}


# ----------------------------------------------------------------------------
# Public estimators
# ----------------------------------------------------------------------------


def estimate_lipschitz(a, cfg: SearchConfig = SearchConfig()) -> RatioReport:
    """Estimate sup_{z,w} ratio_J(a, z, w) and compare with the closed form."""
    a = _as_finite_complex(a, "a")
    abs_a = abs(a)
    if abs_a == 0.0:
        raise ValueError("a = 0 is a rotation of the punctured disk; its constant is exactly 1")
    if abs_a >= 1.0:
        raise ValueError(f"need |a| < 1, got |a| = {abs_a}")

    closed = main_constant(abs_a)
    sup, argz, argw, hist, evaluations = _run_search(_PuncturedObjective(a, cfg), cfg)
    if abs_a >= _ASSERT_MIN_ABS_A and sup > closed + _BOUND_SLACK:
        raise RuntimeError(
            f"search exceeded the closed-form bound: {sup} > {closed} + 1e-9 (implementation bug)"
        )
    if sup < 1.0 - _BOUND_SLACK:
        raise RuntimeError(f"search returned an impossible supremum {sup} < 1")
    return RatioReport(
        a=a,
        sup_estimate=sup,
        argmax_z=argz,
        argmax_w=argw,
        closed_form=closed,
        gap=closed - sup,
        branch_histogram=_histogram_dict(hist),
        evaluations=evaluations,
        seed=cfg.seed,
    )


def estimate_power_constant(a, m: int, cfg: SearchConfig = SearchConfig()) -> RatioReport:
    """Estimate the power-map constant C(m, a) on the full disk.

    The closed form is attached only for m = 1 (the sharp automorphism bound
    1 + |a|); higher powers are exploration data and carry no assertion.
    """
    a = _as_finite_complex(a, "a")
    abs_a = abs(a)
    if abs_a >= 1.0:
        raise ValueError(f"need |a| < 1, got |a| = {abs_a}")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"power exponent must be a positive integer, got {m!r}")

    closed = ball_constant(abs_a) if m == 1 else None
    sup, argz, argw, hist, evaluations = _run_search(_PowerObjective(a, m, cfg), cfg)
    if closed is not None and abs_a >= _ASSERT_MIN_ABS_A and sup > closed + _BOUND_SLACK:
        raise RuntimeError(
            f"search exceeded the closed-form bound: {sup} > {closed} + 1e-9 (implementation bug)"
        )
    return RatioReport(
        a=a,
        sup_estimate=sup,
        argmax_z=argz,
        argmax_w=argw,
        closed_form=closed,
        gap=None if closed is None else closed - sup,
        branch_histogram=_histogram_dict(hist),
        evaluations=evaluations,
        seed=cfg.seed,
    )


def power_monotonicity_table(a, n_max: int, cfg: SearchConfig = SearchConfig()) -> PowerTable:
    """Estimates along the dyadic powers m = 2^0 ... 2^n_max, with increase flags."""
    a = _as_finite_complex(a, "a")
    if not isinstance(n_max, int) or not (0 <= n_max <= 6):
        raise ValueError(f"n_max must be an integer in [0, 6], got {n_max!r}")
    entries = []
    for n in range(n_max + 1):
        m = 2**n
        entries.append((m, estimate_power_constant(a, m, cfg)))
    violations = []
    for (m0, r0), (m1, r1) in zip(entries, entries[1:]):
        increase = r1.sup_estimate - r0.sup_estimate
        if increase > 2.0 * cfg.tol:
            violations.append((m0, m1, increase))
    return PowerTable(a=a, entries=tuple(entries), violations=tuple(violations))


def q_scan(m_list, cfg: SearchConfig = SearchConfig()) -> list:
    """Estimates of C(m, 1/(m+1)) for each m >= 2; data emission only."""
    ms = list(m_list)
    for m in ms:
        if not isinstance(m, int) or isinstance(m, bool) or m < 2:
            raise ValueError(f"q_scan needs integers m >= 2, got {m!r}")
    return [(m, 1.0 / (m + 1), estimate_power_constant(1.0 / (m + 1), m, cfg)) for m in ms]


def bound_audit(a, n_samples: int, seed: int) -> AuditResult:
    """Max of ratio_J over uniformly sampled admissible pairs.

    Sampling keeps a 1e-6 band away from the boundary, the puncture, and the
    diagonal: closer in, the ratio is provably near 1 but its float evaluation
    is roundoff-dominated and could spuriously graze the 1e-9 audit slack.
    """
    a = _as_finite_complex(a, "a")
    abs_a = abs(a)
    if not (0.0 < abs_a < 1.0):
        raise ValueError(f"need 0 < |a| < 1, got |a| = {abs_a}")
    if not isinstance(n_samples, int) or n_samples < 1:
        raise ValueError(f"n_samples must be a positive integer, got {n_samples!r}")
    if not isinstance(seed, int) or not (0 <= seed <= _UINT64_MAX):
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed!r}")

    limit = main_constant(abs_a) + _BOUND_SLACK
    conj_a = a.conjugate()
    s = 1.0 - abs_a * abs_a
    rng = np.random.default_rng(seed)

    need = n_samples
    max_ratio = -math.inf
    arg_z = arg_w = 0j
    violations = 0
    while need > 0:
        xy = rng.uniform(-1.0, 1.0, size=(4, _AUDIT_BATCH))
        z = xy[0] + 1j * xy[1]
        w = xy[2] + 1j * xy[3]
        az = np.abs(z)
        aw = np.abs(w)
        keep = (
            (az >= _AUDIT_MARGIN)
            & (az <= 1.0 - _AUDIT_MARGIN)
            & (aw >= _AUDIT_MARGIN)
            & (aw <= 1.0 - _AUDIT_MARGIN)
        )
        z, w, az, aw = z[keep], w[keep], az[keep], aw[keep]
        sep = np.abs(z - w)
        jb = np.log1p(sep / np.minimum(np.minimum(az, 1.0 - az), np.minimum(aw, 1.0 - aw)))
        keep = jb >= 1e-6
        z, w, az, aw, sep, jb = z[keep], w[keep], az[keep], aw[keep], sep[keep], jb[keep]
        if z.size > need:
            z, w, az, aw, sep, jb = (v[:need] for v in (z, w, az, aw, sep, jb))
        if z.size == 0:
            continue

        uz = np.abs(1.0 + conj_a * z)
        uw = np.abs(1.0 + conj_a * w)
        qz = s * (1.0 - az) * (1.0 + az) / (uz * uz)
        qw = s * (1.0 - aw) * (1.0 + aw) / (uw * uw)
        tmin = np.minimum(
            np.minimum(s * az / uz, s * aw / uw),
            np.minimum(
                qz / (1.0 + np.sqrt(np.maximum(0.0, 1.0 - qz))),
                qw / (1.0 + np.sqrt(np.maximum(0.0, 1.0 - qw))),
            ),
        )
        ratio = np.log1p(s * sep / (uz * uw) / tmin) / jb

        violations += int(np.count_nonzero(ratio > limit))
        best = int(np.argmax(ratio))
        if ratio[best] > max_ratio:
            max_ratio = float(ratio[best])
            arg_z = complex(z[best])
            arg_w = complex(w[best])
        need -= z.size

    return AuditResult(
        a=a,
        max_ratio=max_ratio,
        violations=violations,
        samples=n_samples,
        seed=seed,
        argmax_z=arg_z,
        argmax_w=arg_w,
    )
