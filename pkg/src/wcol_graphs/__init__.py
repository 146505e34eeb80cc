"""Weak coloring numbers, 2-treedepth parameters and minor models on small graphs.

Instructions:
- usage: from wcol_graphs.graph import Graph, parse_graph
- usage: from wcol_graphs.orderings import wcol_exact, dyadic_path_ordering
- usage: from wcol_graphs.parameters import rooted_twodepth, twodepth
- usage: from wcol_graphs.constructions import build_family
- usage: from wcol_graphs.minors import find_model, star_layering

List of modules:
- graph
    - graph
    - blocks
    - structures
    - validation
    - canonical
    - dimacs
    - generators
- orderings
    - ordering
    - reachability
    - exact
    - schemes
- parameters
    - certificate
    - recursive
    - vertex_cover
    - widths
    - embedding
- constructions
    - recipe
    - builder
    - basic
    - gluing
    - families
- minors
    - model
    - search
    - rerooting
    - decompositions
    - star_layering
- utils
    - budget
    - file_utils
"""

from . import constructions, graph, minors, orderings, parameters

__all__ = [
    "constructions",
    "graph",
    "minors",
    "orderings",
    "parameters",
]
