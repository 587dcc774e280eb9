"""Two-factor splittings of a Blaschke product with fitted comparability.

A splitting Lambda = Lambda_0 u Lambda_1 induces B = B_0 B_1.  Away from
the pseudohyperbolic disks D(lam, delta) around the zeros, the two factor
moduli are power-law comparable:

    a |B_0(z)|^(1/b)  <=  |B_1(z)|  <=  (1/a) |B_0(z)|^b.

The constants (a, b) exist for every delta but carry no usable closed
form, so this module fits them empirically: on a finite exclusion grid it
takes the extremal b (worst log-modulus ratio) and then the extremal a,
which makes the sandwich hold at every grid point by construction.
``decompose`` searches the partitions of a sequence for the split with the
smallest fitted b, exhaustively up to 16 points and by deterministic local
search beyond.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blaschke import PointSequence, blaschke_log_modulus, separation_constant
from .errors import DegenerateFitError, EmptyGridError, PointSetError
from .geometry import _mobius, pseudohyperbolic_distance

# Largest sequence for which every nontrivial partition is evaluated
# (2^(n-1) - 1 candidates, each one a grid sweep).
EXHAUSTIVE_LIMIT = 16

# Grid log-moduli this close to zero cannot anchor a ratio fit.
_FIT_DEGENERACY_TOL = 1e-14

# Partition candidates evaluated per vectorized batch (bounds peak memory).
_BATCH = 64


@dataclass(frozen=True)
class ExclusionGrid:
    """Interior grid points at pseudohyperbolic distance >= delta from a sequence."""

    points: np.ndarray
    delta: float
    resolution: int

    def __len__(self) -> int:
        return self.points.size


@dataclass(frozen=True)
class Decomposition:
    """A two-part splitting of a sequence with its fitted sandwich constants."""

    base: PointSequence
    part0: tuple[int, ...]
    part1: tuple[int, ...]
    delta: float
    fitted_a: float
    fitted_b: float
    fit_grid_size: int
    fit_grid_resolution: int
    worst_point: complex

    def __post_init__(self):
        n = len(self.base)
        p0, p1 = set(self.part0), set(self.part1)
        if not p0 or not p1:
            raise PointSetError("both parts of a decomposition must be nonempty")
        if p0 & p1 or (p0 | p1) != set(range(n)):
            raise PointSetError("parts must partition the index range exactly")
        object.__setattr__(self, "part0", tuple(sorted(p0)))
        object.__setattr__(self, "part1", tuple(sorted(p1)))

    def part_sequence(self, which: int) -> PointSequence:
        """The points of part0 (which=0) or part1 (which=1), in base order."""
        idx = self.part0 if which == 0 else self.part1
        return PointSequence(self.base.points[list(idx)], label=self.base.label)


def _retained_grid(seq: PointSequence, delta: float, resolution: int, R: float):
    xs = np.linspace(-R, R, resolution)
    X, Y = np.meshgrid(xs, xs)
    pts = (X + 1j * Y).ravel()
    pts = pts[np.abs(pts) < R]
    dist = pseudohyperbolic_distance(pts[None, :], seq.points[:, None])
    return pts[np.min(dist, axis=0) >= delta]


def exclusion_grid(seq: PointSequence, delta: float, resolution: int) -> ExclusionGrid:
    """Cartesian grid over [-R, R]^2 minus the disks D(lam, delta).

    R = min(0.999, max |lam| + 0.05) keeps the grid over the region the
    sequence occupies; points with |z| >= R or within pseudohyperbolic
    distance delta of any sequence point are dropped.  When the exclusion
    disks swallow that square (large delta around points near the origin),
    the square is widened once to reach past the farthest disk rim before
    EmptyGridError is raised.
    """
    if resolution < 32:
        raise ValueError(f"grid resolution must be at least 32, got {resolution}")
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta!r}")
    moduli = np.abs(seq.points)
    R = min(0.999, float(np.max(moduli)) + 0.05)
    pts = _retained_grid(seq, delta, resolution, R)
    if pts.size == 0:
        rim = float(np.max((moduli + delta) / (1.0 + moduli * delta)))
        R_wide = min(0.999, rim + 0.05)
        if R_wide > R:
            pts = _retained_grid(seq, delta, resolution, R_wide)
            R = R_wide
    if pts.size == 0:
        raise EmptyGridError(
            f"exclusion disks with delta = {delta:g} cover the sampled square; "
            f"lower delta"
        )
    pts.flags.writeable = False
    return ExclusionGrid(points=pts, delta=float(delta), resolution=int(resolution))


def _log_moduli_matrix(points: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Matrix of log |b_{lam_i}(z_g)|, one row per sequence point."""
    rows = np.empty((points.size, z.size))
    for i, lam in enumerate(points):
        rows[i] = np.log(np.abs(_mobius(lam, z)))
    return rows


def _fit_logs(L0: np.ndarray, L1: np.ndarray) -> tuple[float, float, int]:
    """Extremal (a, b) for one partition from its grid log-moduli.

    b is the worst two-sided ratio of the log-moduli (at least 1); a is then
    the largest constant keeping both sandwich sides valid at every grid
    point in both orientations, so that swapping the parts leaves (a, b)
    unchanged.  Returns (a, b, index of the grid point attaining b).
    """
    if np.max(L0) > -_FIT_DEGENERACY_TOL or np.max(L1) > -_FIT_DEGENERACY_TOL:
        raise DegenerateFitError("a grid log-modulus is numerically zero")
    ratio = np.maximum(L1 / L0, L0 / L1)
    worst = int(np.argmax(ratio))
    b = max(float(ratio[worst]), 1.0)
    a = float(np.exp(np.min(np.minimum(b * L0 - L1, b * L1 - L0))))
    return a, b, worst


def comparability_fit(
    part0: PointSequence, part1: PointSequence, grid: ExclusionGrid
) -> tuple[float, float, complex]:
    """Fit (a, b) for the pair (B_0, B_1) on an exclusion grid.

    With L0(z) = log |B_0(z)| and L1 analogous, b is the grid maximum of
    max(L1/L0, L0/L1) clamped below at 1, and a the grid minimum of
    min(exp(b L0 - L1), exp(b L1 - L0)), the largest part-symmetric
    constant below exp(L1 - L0/b) and exp(b L0 - L1) everywhere; the
    sandwich then holds at every grid point with these constants by
    construction.  Returns (a, b, worst_point), the last being the grid
    point attaining b.
    """
    if len(grid) == 0:
        raise EmptyGridError("cannot fit on an empty grid")
    L0 = blaschke_log_modulus(part0, grid.points)
    L1 = blaschke_log_modulus(part1, grid.points)
    a, b, worst = _fit_logs(L0, L1)
    return a, b, complex(grid.points[worst])


def _objective(mask: np.ndarray, LM: np.ndarray, L_total: np.ndarray):
    L0 = LM[mask].sum(axis=0)
    return _fit_logs(L0, L_total - L0)


def _batched_objectives(masks: np.ndarray, LM: np.ndarray, L_total: np.ndarray):
    """(b, a) arrays for a batch of partition masks (rows of ``masks``)."""
    L0 = masks.astype(float) @ LM
    L1 = L_total[None, :] - L0
    ratio = np.maximum(L1 / L0, L0 / L1)
    b = np.maximum(ratio.max(axis=1), 1.0)
    bc = b[:, None]
    a = np.exp(np.minimum(bc * L0 - L1, bc * L1 - L0).min(axis=1))
    return b, a


def _search_exhaustive(LM, L_total, n):
    """Best mask over all nontrivial partitions with index 0 pinned to part0."""
    codes = np.arange(2 ** (n - 1) - 1, dtype=np.int64)
    best = None
    for start in range(0, codes.size, _BATCH):
        chunk = codes[start:start + _BATCH]
        masks = np.zeros((chunk.size, n), dtype=bool)
        masks[:, 0] = True
        for j in range(1, n):
            masks[:, j] = (chunk >> (j - 1)) & 1
        b, a = _batched_objectives(masks, LM, L_total)
        for row in range(chunk.size):
            key = (float(b[row]), -float(a[row]),
                   tuple(np.flatnonzero(masks[row]).tolist()))
            if best is None or key < best[0]:
                best = (key, masks[row].copy())
    return best[1]


def _search_local(LM, L_total, points):
    """Single-move descent from an alternating seed over increasing |lam|."""
    n = points.size
    order = np.argsort(np.abs(points), kind="stable")
    mask = np.zeros(n, dtype=bool)
    mask[order[0::2]] = True
    current = _objective(mask, LM, L_total)[:2]
    current = (current[1], -current[0])  # (b, -a)
    improved = True
    while improved:
        improved = False
        for i in range(n):
            mask[i] = not mask[i]
            size0 = int(mask.sum())
            if 0 < size0 < n:
                a, b, _ = _objective(mask, LM, L_total)
                cand = (b, -a)
                if cand < current:
                    current = cand
                    improved = True
                    continue
            mask[i] = not mask[i]
    if not mask[0]:
        mask = ~mask
    return mask


def decompose(seq: PointSequence, delta: float, grid_resolution: int = 128) -> Decomposition:
    """Split a sequence to minimize the fitted sandwich exponent b.

    The final bound the constants feed degrades with b, so small b is the
    quality measure; ties prefer larger a, then the lexicographically
    smallest part0.  Up to 16 points every nontrivial partition is tried;
    beyond that a deterministic first-improvement single-move search runs
    from an alternating seed.  Grid errors from the delta choice propagate.
    """
    n = len(seq)
    if n < 2:
        raise PointSetError("decomposition needs at least two points")
    grid = exclusion_grid(seq, delta, grid_resolution)
    LM = _log_moduli_matrix(seq.points, grid.points)
    L_total = LM.sum(axis=0)
    if n <= EXHAUSTIVE_LIMIT:
        mask = _search_exhaustive(LM, L_total, n)
    else:
        mask = _search_local(LM, L_total, seq.points)
    part0 = tuple(int(i) for i in np.flatnonzero(mask))
    part1 = tuple(int(i) for i in np.flatnonzero(~mask))
    a, b, worst = comparability_fit(
        PointSequence(seq.points[list(part0)]),
        PointSequence(seq.points[list(part1)]),
        grid,
    )
    return Decomposition(
        base=seq, part0=part0, part1=part1, delta=float(delta),
        fitted_a=a, fitted_b=b, fit_grid_size=len(grid),
        fit_grid_resolution=int(grid_resolution), worst_point=worst,
    )


def corresponding_decomposition(seq: PointSequence, grid_resolution: int = 128) -> Decomposition:
    """The splitting at delta = (separation constant) / 2."""
    if len(seq) < 2:
        raise PointSetError("decomposition needs at least two points")
    delta0 = separation_constant(seq)
    return decompose(seq, delta0 / 2.0, grid_resolution)
