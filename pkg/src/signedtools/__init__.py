"""
signedtools: exact rank, independence and cycle structure of signed graphs

This package provides tools for:
- Exact rank and nullity of signed adjacency matrices
- Independence, matching and cyclomatic numbers
- Checking 2n - 2c <= r + 2*alpha <= 2n and deciding when the lower bound
  is attained, both directly and from cycle structure
- Exhaustive sweeps over all small signed graphs
- Generating lower-optimal signed graphs

Main Components:
- core: SignedGraph, exact linear algebra, invariants, cycle structure
- analysis: deciders, lemma checks, sweeps, generator
- cli: the ``signedtools`` command
"""

__version__ = "0.1.0"

from .analysis.theorems import (
    OptimalityReport,
    analyze,
    bound_check,
    check_equivalence,
    evaluate,
    is_lower_optimal_direct,
    is_lower_optimal_structural,
)
from .core.graph import Sign, SignedGraph
from .core.linalg import nullity, rank_exact, signed_rank
from .exceptions import GraphInputError, GraphParseError, PreconditionError, SignedToolsError
from .io.edgelist import format_edge_list, parse_edge_list

__all__ = [
    "GraphInputError",
    "GraphParseError",
    "OptimalityReport",
    "PreconditionError",
    "Sign",
    "SignedGraph",
    "SignedToolsError",
    "analyze",
    "bound_check",
    "check_equivalence",
    "evaluate",
    "format_edge_list",
    "is_lower_optimal_direct",
    "is_lower_optimal_structural",
    "nullity",
    "parse_edge_list",
    "rank_exact",
    "signed_rank",
]
