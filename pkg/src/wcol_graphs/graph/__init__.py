"""Graph core: the Graph type, surgery with vertex maps, blocks, decompositions, validation and file I/O."""

from .blocks import BlockCutTree, Separation, block_cut_tree, order_one_separations
from .dimacs import parse_graph, write_graph
from .graph import Graph, ball, components, geodesic, is_connected, quotient
from .structures import Layering, PathDecomposition, TreeDecomposition, TreePartition, bfs_layering
from .validation import ValidationReport, validate_structure

__all__ = [
    "BlockCutTree",
    "Graph",
    "Layering",
    "PathDecomposition",
    "Separation",
    "TreeDecomposition",
    "TreePartition",
    "ValidationReport",
    "ball",
    "bfs_layering",
    "block_cut_tree",
    "components",
    "geodesic",
    "is_connected",
    "order_one_separations",
    "parse_graph",
    "quotient",
    "validate_structure",
    "write_graph",
]
