"""Cops and robbers on finite simple graphs.

Exact k-cop solving, constructive cop strategies with adversarial
verification, forbidden induced subgraph tools and the graph constructions
that never lower the cop number.
"""

from .graph import INF, Graph, GraphError, build_graph
from .io import emit_graph6, parse_graph6
from .patterns import find_induced, is_family_free, parse_family, parse_pattern
from .solver import BudgetExceeded, GameState, Mover, capture_time, cop_number, naive_oracle, solve
from .transforms import clique_substitution, subdivide

__version__ = "0.1.0"

__all__ = [
    "INF",
    "BudgetExceeded",
    "GameState",
    "Graph",
    "GraphError",
    "Mover",
    "__version__",
    "build_graph",
    "capture_time",
    "clique_substitution",
    "cop_number",
    "emit_graph6",
    "find_induced",
    "is_family_free",
    "naive_oracle",
    "parse_family",
    "parse_graph6",
    "parse_pattern",
    "solve",
    "subdivide",
]
