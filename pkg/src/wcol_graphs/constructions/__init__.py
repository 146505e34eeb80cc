"""Graph families and gluing constructions, each build traceable through vertex maps and a size-checked recipe."""

from .builder import BuiltGraph, GraphBuilder, RootedGraph
from .families import basic_families, build_family
from .gluing import DoubleTower, Gadget, LComposition, double_tower, gadget_hkl, grohe_graph, l_compose, tower
from .recipe import BuildRecipe, Family, predict_size

__all__ = [
    "BuildRecipe",
    "BuiltGraph",
    "DoubleTower",
    "Family",
    "Gadget",
    "GraphBuilder",
    "LComposition",
    "RootedGraph",
    "basic_families",
    "build_family",
    "double_tower",
    "gadget_hkl",
    "grohe_graph",
    "l_compose",
    "predict_size",
    "tower",
]
