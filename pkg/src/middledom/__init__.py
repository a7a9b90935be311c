"""Domination number of middle graphs.

Exact solvers (exhaustive, branch and bound, and a matching-based fast path),
family generators with closed forms, and an exhaustive theorem certifier.
"""

from middledom._backend import BACKEND
from middledom.errors import (
    BudgetExceeded,
    DisconnectedGraphError,
    GraphError,
    HypothesisViolation,
    NotApplicable,
)
from middledom.families import FamilySpec, formula_gamma_middle, generate
from middledom.graph import Graph
from middledom.solvers import (
    GammaResult,
    edge_cover_number,
    gamma_branch_bound,
    gamma_join_via_subsets,
    gamma_middle_fast,
    gamma_middle_oracle,
    gamma_oracle,
    is_dominating_set,
    maximum_matching,
    normalize_to_edge_set,
)
from middledom.transforms import MiddleGraph, corona_k1, corona_p2, join_empty, line_graph, middle_graph

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "DisconnectedGraphError",
    "FamilySpec",
    "GammaResult",
    "Graph",
    "GraphError",
    "HypothesisViolation",
    "MiddleGraph",
    "NotApplicable",
    "corona_k1",
    "corona_p2",
    "edge_cover_number",
    "formula_gamma_middle",
    "gamma_branch_bound",
    "gamma_join_via_subsets",
    "gamma_middle_fast",
    "gamma_middle_oracle",
    "gamma_oracle",
    "generate",
    "is_dominating_set",
    "join_empty",
    "line_graph",
    "maximum_matching",
    "middle_graph",
    "normalize_to_edge_set",
]
