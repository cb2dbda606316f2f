"""Exact maximum induced trees in small triangle-free graphs.

Graphs are passed around as graph6 strings.
"""

import json

from ._indtree import (
    BudgetError,
    GraphError,
    ParseError,
    brute_force_t,
    build_b_k,
    build_g_k,
    build_knn_minus_pm,
    connected_triangle_free_graphs,
    graph6_edges,
    graph6_from_edges,
    normalise_graph6,
    order,
    solve,
    t3_star_formula,
)
from . import _indtree


def t(graph6, root=None):
    """Order of the largest induced tree, optionally forced through `root`."""
    return solve(graph6, root)[0]


def tabulate(n, allow_large=False, threads=1):
    return json.loads(_indtree.tabulate_json(n, allow_large, threads))


def verify(claim, max_n=10, k=3, allow_large=False, threads=1):
    return json.loads(_indtree.verify_json(claim, max_n, k, allow_large, threads))


__all__ = [
    "BudgetError", "GraphError", "ParseError",
    "brute_force_t", "build_b_k", "build_g_k", "build_knn_minus_pm",
    "connected_triangle_free_graphs", "graph6_edges", "graph6_from_edges",
    "normalise_graph6", "order", "solve", "t", "t3_star_formula", "tabulate", "verify",
]
