"""Finite Blaschke products and the sequence invariants built from them.

A finite Blaschke product B = prod_n b_{lam_n} is evaluated in log-domain
(moduli) with separately summed phases, so that products of hundreds of
factors with moduli near 0 or 1 neither underflow nor lose the phase.  On
top of the product sit the classical invariants of a point sequence: the
separation constant (worst pairwise pseudohyperbolic distance), the
uniform-separation constant inf_n |B_n(lam_n)| taken over the products
B_n that omit one factor, and the norm-explicit family B_n / B_n(lam_n)
solving the one-at-a-point interpolation problem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from .errors import DegenerateSequenceError, PointSetError, ZeroCollisionError
from .geometry import _check_closed_disk, _mobius, check_interior, pseudohyperbolic_distance

# Pairwise pseudohyperbolic distances below this are treated as duplicates.
DISTINCT_TOL = 1e-9

# Sequences longer than this default are refused outright; every invariant
# here is an O(n^2) pairwise sweep and the CLI report formats assume
# desk-scale inputs.
MAX_POINTS = 512

# |B_n(lam_n)| below this makes the family norms exceed 1e12; refuse.
DEGENERACY_TOL = 1e-12

# A factor modulus under this is a collision with a zero of the product.
_ZERO_COLLISION_TOL = 1e-300


@dataclass(frozen=True, eq=False)
class PointSequence:
    """Finite ordered set of distinct points strictly inside the unit disk."""

    points: np.ndarray
    label: str | None = None
    max_points: int = field(default=MAX_POINTS, repr=False)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=complex).reshape(-1)
        if pts.size < 1:
            raise PointSetError("a point sequence needs at least one point")
        if pts.size > self.max_points:
            raise PointSetError(
                f"sequence has {pts.size} points, exceeding the configured "
                f"maximum of {self.max_points}"
            )
        for i, z in enumerate(pts):
            try:
                check_interior(z)
            except PointSetError as exc:
                raise PointSetError(f"point {i}: {exc}") from None
        if pts.size > 1:
            dist = _pairwise_distances(pts)
            np.fill_diagonal(dist, 1.0)
            j, k = np.unravel_index(int(np.argmin(dist)), dist.shape)
            if dist[j, k] <= DISTINCT_TOL:
                raise PointSetError(
                    f"points {min(j, k)} and {max(j, k)} are not distinct "
                    f"(pseudohyperbolic distance {dist[j, k]:.3e})"
                )
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.size

    def __iter__(self):
        return iter(self.points)

    def removing(self, n: int) -> "PointSequence":
        """Copy of the sequence with point ``n`` removed."""
        self._check_index(n)
        return PointSequence(np.delete(self.points, n), label=self.label,
                             max_points=self.max_points)

    def _check_index(self, n: int) -> None:
        if not 0 <= n < len(self):
            raise IndexError(f"point index {n} out of range for length {len(self)}")


class WeakFamilyMember(NamedTuple):
    """One member of the family phi_n = B_n / B_n(lam_n)."""

    norm: float
    eval: Callable[[complex], complex]


@dataclass(frozen=True)
class AnalysisReport:
    """Invariants of a point sequence, as produced by :func:`analyze`."""

    blaschke_sum: float
    separation_constant: float
    carleson_constant: float
    per_point: tuple[tuple[int, float], ...]


def _pairwise_distances(pts: np.ndarray) -> np.ndarray:
    return pseudohyperbolic_distance(pts[:, None], pts[None, :])


def _product_parts(points: np.ndarray, z):
    """Per-point accumulators for prod b_lam(z).

    Returns (log-modulus sum, phase sum, exact-zero mask, smallest factor
    log-modulus); the last entry backs the zero-collision diagnostic.
    """
    z = np.asarray(z, dtype=complex)
    log_mod = np.zeros(z.shape)
    phase = np.zeros(z.shape)
    zero = np.zeros(z.shape, dtype=bool)
    min_factor = np.zeros(z.shape)
    for lam in points:
        w = np.asarray(_mobius(lam, z))
        r = np.abs(w)
        zero |= r == 0.0
        with np.errstate(divide="ignore"):
            term = np.where(r == 0.0, 0.0, np.log(np.where(r == 0.0, 1.0, r)))
        log_mod += term
        min_factor = np.minimum(min_factor, term)
        phase += np.angle(w)
    return log_mod, phase, zero, min_factor


def _eval_product(points: np.ndarray, z):
    scalar = np.isscalar(z) or np.asarray(z).ndim == 0
    log_mod, phase, zero, _ = _product_parts(points, z)
    out = np.where(zero, 0.0, np.exp(log_mod) * np.exp(1j * phase))
    return complex(out) if scalar else out


def blaschke_eval(seq: PointSequence, z):
    """Evaluate B(z) = prod_n b_{lam_n}(z) for |z| <= 1.

    The modulus is accumulated as a sum of log-moduli and the phase as a sum
    of arguments, so |B(z)| is exact to rounding even when individual factors
    are tiny.  Zeros of the product are returned as exact 0.
    """
    _check_closed_disk(z)
    return _eval_product(seq.points, z)


def blaschke_log_modulus(seq: PointSequence, z):
    """log |B(z)| as a direct sum of factor log-moduli.

    Raises ZeroCollisionError if any factor modulus is below 1e-300, i.e.
    the evaluation point collides with a zero.
    """
    _check_closed_disk(z)
    log_mod, _, zero, min_factor = _product_parts(seq.points, z)
    if np.any(zero) or np.min(min_factor) < np.log(_ZERO_COLLISION_TOL):
        raise ZeroCollisionError("evaluation point collides with a zero of the product")
    scalar = np.isscalar(z) or np.asarray(z).ndim == 0
    return float(log_mod) if scalar else log_mod


def blaschke_eval_excluding(seq: PointSequence, n: int, z):
    """B_n(z): the product over all factors except the n-th.

    The empty product (singleton sequence) is the constant 1.
    """
    seq._check_index(n)
    _check_closed_disk(z)
    remaining = np.delete(seq.points, n)
    return _eval_product(remaining, z)


def per_point_moduli(seq: PointSequence) -> np.ndarray:
    """|B_n(lam_n)| for every n, each product omitting its own factor."""
    pts = seq.points
    if pts.size == 1:
        return np.ones(1)
    with np.errstate(divide="ignore"):
        log_d = np.log(_pairwise_distances(pts))
    np.fill_diagonal(log_d, 0.0)
    return np.exp(log_d.sum(axis=0))


def carleson_constant(seq: PointSequence) -> float:
    """inf_n |B_n(lam_n)| over the sequence; 1 for a singleton."""
    return float(np.min(per_point_moduli(seq)))


def separation_constant(seq: PointSequence) -> float:
    """Smallest pairwise pseudohyperbolic distance; 1 for a singleton."""
    pts = seq.points
    if pts.size == 1:
        return 1.0
    dist = _pairwise_distances(pts)
    np.fill_diagonal(dist, 1.0)
    return float(np.min(dist))


def blaschke_sum(seq: PointSequence) -> float:
    """sum_n (1 - |lam_n|), the divergence diagnostic of the zero set."""
    return float(np.sum(1.0 - np.abs(seq.points)))


def weak_interpolation_family(seq: PointSequence) -> list[WeakFamilyMember]:
    """The family phi_n = B_n / B_n(lam_n) with phi_n(lam_k) = delta_nk.

    Each member carries its sup-norm 1/|B_n(lam_n)| (attained on the
    boundary, where |B_n| = 1) and a callable evaluating phi_n at scalar or
    array arguments.  Raises DegenerateSequenceError when some |B_n(lam_n)|
    is below 1e-12.
    """
    pts = seq.points
    members: list[WeakFamilyMember] = []
    for n in range(pts.size):
        denom = _eval_product(np.delete(pts, n), pts[n])
        if abs(denom) < DEGENERACY_TOL:
            raise DegenerateSequenceError(
                f"|B_n(lam_n)| = {abs(denom):.3e} at index {n}; family norms "
                f"would exceed 1e12"
            )

        def phi(z, n=n, denom=denom):
            return blaschke_eval_excluding(seq, n, z) / denom

        members.append(WeakFamilyMember(norm=1.0 / abs(denom), eval=phi))
    return members


def analyze(seq: PointSequence) -> AnalysisReport:
    """Bundle the sequence invariants into one report."""
    moduli = per_point_moduli(seq)
    return AnalysisReport(
        blaschke_sum=blaschke_sum(seq),
        separation_constant=separation_constant(seq),
        carleson_constant=float(np.min(moduli)),
        per_point=tuple((i, float(m)) for i, m in enumerate(moduli)),
    )
