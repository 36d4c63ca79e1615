"""Certified computations on triangle-free graphs: Grötzsch blow-ups,
exhaustive small-order searches and exact spectral-radius comparisons."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, graph_from_edges, is_bipartite, is_triangle_free
from .graph6 import graph6_decode, graph6_encode
from .spectral import CertifiedInterval, NonnegMatrix, Ordering, compare_rho, rho_certified, rho_graph

__all__ = [
    "CertifiedInterval", "Graph", "GraphError", "NonnegMatrix", "Ordering", "compare_rho",
    "graph6_decode", "graph6_encode", "graph_from_edges", "is_bipartite", "is_triangle_free",
    "rho_certified", "rho_graph",
]
