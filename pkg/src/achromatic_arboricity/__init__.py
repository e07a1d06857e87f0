"""Achromatic arboricity of complete graphs.

The largest number of colors for the edges of ``K_n`` such that each color
class is a forest and any two classes together contain a cycle.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundsSummary,
    asymptotic_upper,
    best_lower_bound,
    bounds_summary,
    lower_bound_prime,
    upper_bound_lemma1,
    x0_diagnostic,
)
from .construction import (
    Decomposition,
    PathFactorization,
    Triplet,
    arboricity_coloring,
    build_coloring,
    greedy_extend,
    hamiltonian_path_factorization,
    triplet_decomposition,
)
from .graphcore import (
    EdgeColoring,
    VerificationReport,
    all_edges,
    is_forest,
    make_edge,
    union_contains_cycle,
    verify_coloring,
)
from .projplane import NotPrimeError, ProjectivePlane, build_plane
from .solver import ExactResult, SearchStatus, exact_value, exists_coloring

__all__ = [
    "BoundsSummary",
    "Decomposition",
    "EdgeColoring",
    "ExactResult",
    "NotPrimeError",
    "PathFactorization",
    "ProjectivePlane",
    "SearchStatus",
    "Triplet",
    "VerificationReport",
    "all_edges",
    "arboricity_coloring",
    "asymptotic_upper",
    "best_lower_bound",
    "bounds_summary",
    "build_coloring",
    "build_plane",
    "exact_value",
    "exists_coloring",
    "greedy_extend",
    "hamiltonian_path_factorization",
    "is_forest",
    "lower_bound_prime",
    "make_edge",
    "triplet_decomposition",
    "union_contains_cycle",
    "upper_bound_lemma1",
    "verify_coloring",
    "x0_diagnostic",
]
