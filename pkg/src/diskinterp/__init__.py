"""Function-theoretic diagnostics for finite point sequences in the unit disk.

The package computes the classical invariants that govern bounded analytic
interpolation on a finite sequence: pseudohyperbolic geometry, Blaschke
products and their separation/Carleson constants, minimal-norm
interpolants via positive-definiteness of the associated kernel matrix,
fitted two-part factorizations, and a numerical walk through the chain of
inequalities linking a single zero/one interpolant to the Carleson
condition.
"""

from .blaschke import (
    AnalysisReport,
    PointSequence,
    WeakFamilyMember,
    analyze,
    blaschke_eval,
    blaschke_eval_excluding,
    blaschke_log_modulus,
    blaschke_sum,
    carleson_constant,
    per_point_moduli,
    separation_constant,
    weak_interpolation_family,
)
from .errors import (
    BoundaryGuardError,
    BracketFailureError,
    DegenerateFitError,
    DegenerateSequenceError,
    DiskInterpError,
    DomainError,
    EmptyGridError,
    NumericalError,
    PackingFailureError,
    PointSetError,
    RecursionBreakdownError,
    ZeroCollisionError,
)
from .geometry import (
    PseudoDisk,
    check_interior,
    mobius_transform,
    pseudo_disk_euclidean,
    pseudohyperbolic_distance,
    sample_pseudo_circle,
)
from .harness import (
    ChainReport,
    ChainRow,
    CounterexampleSpec,
    generate_counterexample,
    generate_radial,
    generate_separated_random,
    remark_two_functions_check,
    verify_theorem_chain,
    zero_one_problem,
)
from .hoffman import (
    Decomposition,
    ExclusionGrid,
    comparability_fit,
    corresponding_decomposition,
    decompose,
    exclusion_grid,
)
from .pick import (
    PickProblem,
    PickSolution,
    RationalInterpolant,
    construct_interpolant,
    interpolant_eval,
    is_feasible,
    min_norm,
    norm_upper_bound,
    pick_matrix,
    solve_pick,
    sup_norm_boundary,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BoundaryGuardError",
    "BracketFailureError",
    "ChainReport",
    "ChainRow",
    "CounterexampleSpec",
    "Decomposition",
    "DegenerateFitError",
    "DegenerateSequenceError",
    "DiskInterpError",
    "DomainError",
    "EmptyGridError",
    "ExclusionGrid",
    "NumericalError",
    "PackingFailureError",
    "PickProblem",
    "PickSolution",
    "PointSequence",
    "PointSetError",
    "PseudoDisk",
    "RationalInterpolant",
    "RecursionBreakdownError",
    "WeakFamilyMember",
    "ZeroCollisionError",
    "analyze",
    "blaschke_eval",
    "blaschke_eval_excluding",
    "blaschke_log_modulus",
    "blaschke_sum",
    "carleson_constant",
    "check_interior",
    "comparability_fit",
    "construct_interpolant",
    "corresponding_decomposition",
    "decompose",
    "exclusion_grid",
    "generate_counterexample",
    "generate_radial",
    "generate_separated_random",
    "interpolant_eval",
    "is_feasible",
    "min_norm",
    "mobius_transform",
    "norm_upper_bound",
    "per_point_moduli",
    "pick_matrix",
    "pseudo_disk_euclidean",
    "pseudohyperbolic_distance",
    "remark_two_functions_check",
    "sample_pseudo_circle",
    "separation_constant",
    "solve_pick",
    "sup_norm_boundary",
    "verify_theorem_chain",
    "weak_interpolation_family",
    "zero_one_problem",
]
