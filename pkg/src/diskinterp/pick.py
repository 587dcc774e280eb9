"""Minimal-norm bounded analytic interpolation on the disk.

Given nodes lam_j inside the disk and targets w_j, the smallest sup-norm of
an analytic interpolant is characterized by positive semidefiniteness of
the Hermitian matrix

    A(M)[j, k] = (M^2 - w_j conj(w_k)) / (1 - lam_j conj(lam_k)),

which is monotone in M.  ``min_norm`` locates the feasibility boundary by
bisection; ``construct_interpolant`` then builds an explicit rational
solution at any strictly feasible M by the classical one-node-at-a-time
disk-automorphism reduction, recording one parameter per node.  The
resulting interpolant is evaluable everywhere on the closed disk and obeys
|f| <= M by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blaschke import PointSequence, per_point_moduli
from .errors import BracketFailureError, PointSetError, RecursionBreakdownError
from .geometry import _check_closed_disk, _mobius

# Eigenvalue slack for the semidefiniteness test, scaled by trace/n so the
# test survives nodes crowding the boundary (entries blow up there).
PSD_TOL = 1e-10

# Relative bracket width at which the norm bisection stops.
BISECT_REL_TOL = 1e-8

# Recursion parameters may exceed the closed disk by at most this much.
_PARAM_TOL = 1e-9

# Construction norm inflation used by the one-call solver.  Kept at the
# solution's advertised norm tolerance so the boundary sup-norm estimate
# can never exceed min_norm * (1 + DEFAULT_SLACK).
DEFAULT_SLACK = 1e-6

# Relative lift applied to the norm estimate when the reduction breaks
# down at the inflated norm (the PSD tolerance can make the bisection
# land a hair below the true minimum); doubles on every retry.
_LIFT = 3e-6
_MAX_LIFTS = 10


@dataclass(frozen=True)
class PickProblem:
    """Interpolation nodes and target values, lengths matching."""

    nodes: PointSequence
    targets: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.targets, dtype=complex).reshape(-1)
        if w.size != len(self.nodes):
            raise PointSetError(
                f"{w.size} targets for {len(self.nodes)} nodes"
            )
        if not np.all(np.isfinite(w)):
            raise PointSetError("targets must be finite")
        w.flags.writeable = False
        object.__setattr__(self, "targets", w)

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class RationalInterpolant:
    """Rational interpolant in recorded one-node reduction form.

    ``schur_steps`` holds (node, parameter) pairs, innermost last; the final
    parameter is the constant the recursion bottomed out on.  ``scale`` is
    the norm bound M the construction was run at; evaluation never exceeds
    it (up to rounding).
    """

    schur_steps: tuple[tuple[complex, complex], ...]
    scale: float


@dataclass(frozen=True)
class PickSolution:
    """Minimal norm, a constructed interpolant, and the boundary margin."""

    min_norm: float
    interpolant: RationalInterpolant
    feasibility_margin: float


def pick_matrix(problem: PickProblem, M: float) -> np.ndarray:
    """Hermitian feasibility matrix for the norm-M interpolation problem."""
    lam = problem.nodes.points
    w = problem.targets
    num = M * M - np.outer(w, np.conj(w))
    den = 1.0 - np.outer(lam, np.conj(lam))
    return num / den


def _trace_scale(A: np.ndarray) -> float:
    n = A.shape[0]
    return max(1.0, float(np.trace(A).real) / n)


def is_feasible(problem: PickProblem, M: float, psd_tol: float = PSD_TOL) -> bool:
    """True iff the norm-M problem is solvable (matrix PSD up to tolerance)."""
    A = pick_matrix(problem, M)
    smallest = float(np.linalg.eigvalsh(A)[0])
    return smallest >= -psd_tol * _trace_scale(A)


def norm_upper_bound(problem: PickProblem) -> float:
    """sum_j |w_j| / |B_j(lam_j)|, a guaranteed-feasible norm bound.

    This is the triangle-inequality norm of the explicit interpolant
    sum_j w_j B_j / B_j(lam_j).
    """
    w = np.abs(problem.targets)
    return float(np.sum(w / per_point_moduli(problem.nodes)))


def min_norm(
    problem: PickProblem,
    rel_tol: float = BISECT_REL_TOL,
    psd_tol: float = PSD_TOL,
) -> float:
    """Smallest sup-norm over all analytic interpolants, by bisection.

    Brackets between max_j |w_j| (below every interpolant norm) and the
    explicit bound of :func:`norm_upper_bound`, halving until the bracket
    is narrower than ``rel_tol`` times the upper end, and returns the
    feasible end.  Raises BracketFailureError if the upper end itself fails
    the feasibility test, which indicates numerical degeneracy such as
    near-coincident nodes.
    """
    lo = float(np.max(np.abs(problem.targets)))
    hi = norm_upper_bound(problem)
    if hi == 0.0:
        return 0.0
    if is_feasible(problem, lo, psd_tol):
        return lo
    if not is_feasible(problem, hi, psd_tol):
        raise BracketFailureError(
            f"norm bound {hi:.6g} tests infeasible; the problem is "
            f"numerically degenerate"
        )
    width_target = rel_tol * hi
    while hi - lo >= width_target:
        mid = 0.5 * (lo + hi)
        if is_feasible(problem, mid, psd_tol):
            hi = mid
        else:
            lo = mid
    return hi


def construct_interpolant(problem: PickProblem, M: float) -> RationalInterpolant:
    """Build a rational interpolant with sup-norm at most M.

    Scales the targets into the unit ball and peels off one node at a time:
    a function s with s(lam) = p and |s| <= 1 is exactly s(z) =
    tau_p(b_lam(z) s'(z)) with tau_p(u) = (u + p) / (1 + conj(p) u) and s'
    again bounded by one, so the n-node problem reduces to an (n-1)-node
    problem for s'.  The final s' is a constant.  Each peeled parameter must
    stay in the closed disk; a parameter outside it means M was infeasible
    or too close to the minimal norm for stable reduction, and raises
    RecursionBreakdownError (inflate M and retry).
    """
    nodes = problem.nodes.points
    n = nodes.size
    if M < 0:
        raise ValueError(f"norm bound must be nonnegative, got {M!r}")
    if M == 0.0:
        if np.any(problem.targets != 0):
            raise RecursionBreakdownError("M = 0 admits only the zero interpolant")
        return RationalInterpolant(((complex(nodes[0]), 0j),), 0.0)
    vals = problem.targets / M
    steps: list[tuple[complex, complex]] = []
    for i in range(n):
        p = complex(vals[i])
        if not np.isfinite(p) or abs(p) > 1.0 + _PARAM_TOL:
            raise RecursionBreakdownError(
                f"reduction parameter |p| = {abs(p):.6g} at node {i} leaves "
                f"the closed disk; M = {M:.6g} is too close to the minimal norm"
            )
        steps.append((complex(nodes[i]), p))
        if i + 1 == n:
            break
        rest = nodes[i + 1:]
        with np.errstate(divide="ignore", invalid="ignore"):
            shifted = (vals[i + 1:] - p) / (1.0 - np.conj(p) * vals[i + 1:])
            vals[i + 1:] = shifted / _mobius(nodes[i], rest)
    return RationalInterpolant(tuple(steps), float(M))


def interpolant_eval(f: RationalInterpolant, z):
    """Evaluate the interpolant at scalar or array z with |z| <= 1.

    Unwinds the recorded steps from the innermost constant outward; the
    composition of disk automorphisms keeps |result| <= scale.
    """
    _check_closed_disk(z)
    scalar = np.isscalar(z) or np.asarray(z).ndim == 0
    z = np.asarray(z, dtype=complex)
    s = np.full(z.shape, f.schur_steps[-1][1], dtype=complex)
    for lam, p in reversed(f.schur_steps[:-1]):
        u = _mobius(lam, z) * s
        s = (u + p) / (1.0 + np.conjugate(p) * u)
    out = f.scale * s
    return complex(out) if scalar else out


_INV_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


def _golden_max(fn, a: float, b: float, tol: float) -> float:
    """Golden-section maximum of a scalar function on [a, b]."""
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = fn(c), fn(d)
    best = max(fc, fd)
    while b - a > tol:
        if fc < fd:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = fn(d)
        else:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = fn(c)
        best = max(best, fc, fd)
    return best


def _sup_on_circle(fn, grid: int) -> float:
    """max |fn| over the unit circle: coarse grid plus golden refinement.

    ``fn`` must accept an ndarray of boundary points.  The result is a
    lower bound on the true sup with one-sided discretization bias.
    """
    thetas = np.linspace(0.0, 2.0 * np.pi, grid, endpoint=False)
    vals = np.abs(fn(np.exp(1j * thetas)))
    k = int(np.argmax(vals))
    step = 2.0 * np.pi / grid
    refined = _golden_max(
        lambda t: float(np.abs(fn(np.exp(1j * t)))),
        thetas[k] - step,
        thetas[k] + step,
        step / 64.0,
    )
    return max(float(vals[k]), refined)


def sup_norm_boundary(f: RationalInterpolant, grid: int = 4096) -> float:
    """Boundary sup-norm estimate of the interpolant.

    Maximum modulus over ``grid`` equally spaced boundary points, refined
    by golden-section search around the discrete argmax until the bracket
    is below 2*pi/(grid*64).  The estimate is a lower bound on the true
    sup-norm; consumers compensate the one-sided bias in their tolerances.
    """
    if grid < 256:
        raise ValueError(f"boundary grid must be at least 256, got {grid}")
    return _sup_on_circle(lambda zs: interpolant_eval(f, zs), grid)


def solve_pick(
    problem: PickProblem,
    slack: float = DEFAULT_SLACK,
    rel_tol: float = BISECT_REL_TOL,
    psd_tol: float = PSD_TOL,
) -> PickSolution:
    """Minimal norm plus an interpolant constructed at min_norm*(1 + slack).

    The slight inflation keeps the reduction parameters strictly inside
    the disk, and because the construction bounds the interpolant by the
    norm it ran at, the boundary sup-norm can never exceed the reported
    min_norm by more than the slack factor.  When the PSD tolerance lets
    the bisection land marginally below the true minimum, the reduction
    breaks down; the estimate is then lifted a few parts in a million and
    retried, keeping the reported norm consistent with the interpolant.
    """
    M_star = min_norm(problem, rel_tol=rel_tol, psd_tol=psd_tol)
    if M_star == 0.0:
        interpolant = construct_interpolant(problem, 0.0)
        return PickSolution(min_norm=0.0, interpolant=interpolant,
                            feasibility_margin=0.0)
    lift = _LIFT
    for attempt in range(_MAX_LIFTS):
        M_run = M_star * (1.0 + slack)
        try:
            interpolant = construct_interpolant(problem, M_run)
            break
        except RecursionBreakdownError:
            if attempt + 1 == _MAX_LIFTS:
                raise
            M_star *= 1.0 + lift
            lift *= 2.0
    margin = float(np.linalg.eigvalsh(pick_matrix(problem, M_run))[0])
    return PickSolution(min_norm=M_star, interpolant=interpolant,
                        feasibility_margin=margin)
