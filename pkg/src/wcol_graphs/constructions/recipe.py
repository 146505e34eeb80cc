"""Family tags, build recipes and closed-form size predictions.

A family spec is a tag plus parameters. It can be given as a mapping ``{"family": "grid", "params": {"rows": 3,
"cols": 3}}`` or as a string ``"grid:rows=3,cols=3"``. Families built on top of another graph (disjoint-copies,
apex, lcompose, tower, double-tower) take that graph as a nested spec under ``base`` (and ``piece`` for lcompose).
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from math import comb

from wcol_graphs.errors import BadParams


class Family(Enum):
    """Named graph families and gluing constructions."""

    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete-bipartite"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    LADDER = "ladder"
    TERNARY_TREE = "ternary-tree"
    DARY_TREE = "dary-tree"
    GRID = "grid"
    EDGELESS = "edgeless"
    DISJOINT_COPIES = "disjoint-copies"
    APEX = "apex"
    GROHE = "grohe"
    LCOMPOSE = "lcompose"
    TOWER = "tower"
    DOUBLE_TOWER = "double-tower"
    GADGET = "gadget"

    @classmethod
    def infer_type(cls, tag: str | Family) -> Family:
        """Resolve a family tag.

        Raises:
            BadParams: If the tag is unknown.
        """
        if isinstance(tag, Family):
            return tag
        try:
            return cls(tag.strip().lower())
        except ValueError as error:
            raise BadParams(f"unknown family {tag!r}, chose from {[f.value for f in cls]}") from error


# Integer parameters every family requires, with their smallest allowed value.
REQUIRED: dict[Family, dict[str, int]] = {
    Family.COMPLETE: {"n": 1},
    Family.COMPLETE_BIPARTITE: {"s": 1, "t": 1},
    Family.PATH: {"n": 1},
    Family.CYCLE: {"n": 3},
    Family.STAR: {"n": 0},
    Family.LADDER: {"k": 1},
    Family.TERNARY_TREE: {"k": 1},
    Family.DARY_TREE: {"h": 1, "d": 1},
    Family.GRID: {"rows": 1, "cols": 1},
    Family.EDGELESS: {"n": 0},
    Family.DISJOINT_COPIES: {"k": 1},
    Family.APEX: {},
    Family.GROHE: {"r": 0, "t": 0},
    Family.LCOMPOSE: {"d": 1},
    Family.TOWER: {"h": 1, "d": 1},
    Family.DOUBLE_TOWER: {"h": 1, "d": 1},
    Family.GADGET: {"k": 2, "l": 2},
}

NESTED: dict[Family, tuple[str, ...]] = {
    Family.DISJOINT_COPIES: ("base",),
    Family.APEX: ("base",),
    Family.LCOMPOSE: ("base", "piece"),
    Family.TOWER: ("base",),
    Family.DOUBLE_TOWER: ("base",),
}


def parse_family_spec(text: str) -> dict:
    """Parse ``"family:key=value,key=value"`` into ``{"family": ..., "params": {...}}``."""
    tag, _, rest = text.partition(":")
    params = {}
    for item in filter(None, (part.strip() for part in rest.split(","))):
        key, equals, value = item.partition("=")
        if not equals:
            raise BadParams(f"expected key=value in family spec {text!r}, got {item!r}")
        params[key.strip()] = int(value) if value.strip().lstrip("-").isdigit() else value.strip()
    return {"family": Family.infer_type(tag).value, "params": params}


def normalize_spec(spec: str | Mapping) -> tuple[Family, dict]:
    """Validate a family spec and return its family and parameters.

    Raises:
        BadParams: If the family is unknown, a required parameter is missing or below its minimum, or a nested
            spec is missing.
    """
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    family = Family.infer_type(spec["family"])
    params = dict(spec.get("params", {}))
    for name, minimum in REQUIRED[family].items():
        if name not in params:
            raise BadParams(f"{family.value} needs parameter {name!r}")
        if not isinstance(params[name], int) or params[name] < minimum:
            raise BadParams(f"{family.value} needs {name} ≥ {minimum}, got {params[name]!r}")
    for name in NESTED.get(family, ()):
        if name not in params:
            raise BadParams(f"{family.value} needs a nested {name!r} family spec")
        nested = params[name]
        params[name] = nested if isinstance(nested, Mapping) else parse_family_spec(nested)
    if family == Family.GROHE and params.get("d") is not None:
        if not isinstance(params["d"], int) or params["d"] < 1:
            raise BadParams(f"grohe d override must be a positive integer, got {params['d']!r}")
    return family, params


@dataclass(frozen=True)
class BuildRecipe:
    """Family tag, parameters and the predicted vertex and edge counts of a build.

    Attributes:
        family (Family): The family.
        params (dict): Its parameters, nested specs included.
        vertices (int): Predicted vertex count.
        edges (int): Predicted edge count.
        scaled (bool): True when a grohe build overrides the multiplicity C(r+t, t).
    """

    family: Family
    params: dict = field(default_factory=dict)
    vertices: int = 0
    edges: int = 0
    scaled: bool = False

    @classmethod
    def of(cls, spec: str | Mapping) -> BuildRecipe:
        family, params = normalize_spec(spec)
        vertices, edges = _predict(family, params)
        scaled = family == Family.GROHE and params.get("d") is not None
        return cls(family, params, vertices, edges, scaled)

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "params": self.params,
            "n": self.vertices,
            "m": self.edges,
            "scaled": self.scaled,
        }


def grohe_size(r: int, t: int, d: int | None = None) -> tuple[int, int]:
    """Vertex and edge counts of G_{r,t}, with every multiplicity replaced by d when given."""
    vertices = [[1] * (t + 1) for _ in range(r + 1)]
    edges = [[0] * (t + 1) for _ in range(r + 1)]
    for i in range(1, r + 1):
        for j in range(1, t + 1):
            mult = comb(i + j, j) if d is None else d
            vertices[i][j] = vertices[i - 1][j] * (1 + mult * vertices[i][j - 1])
            edges[i][j] = edges[i - 1][j] + vertices[i - 1][j] * mult * (edges[i][j - 1] + vertices[i][j - 1])
    return vertices[r][t], edges[r][t]


def lcompose_size(base: tuple[int, int], piece: tuple[int, int], d: int) -> tuple[int, int]:
    """Counts of L_d(B, H, u): |V(B)|·(1 + d(|V(H)| - 1)) vertices and |E(B)| + |V(B)|·d·|E(H)| edges."""
    (vb, eb), (vh, eh) = base, piece
    return vb * (1 + d * (vh - 1)), eb + vb * d * eh


def tower_size(base: tuple[int, int], h: int, d: int) -> tuple[int, int]:
    """Counts of T_{h,d}(X) for X with the given counts."""
    vx, ex = base
    cone = (vx + 1, ex + vx)
    size = cone
    for _ in range(h - 1):
        size = lcompose_size(cone, size, d)
    return size


def gadget_size(k: int, length: int) -> tuple[int, int]:
    vertices, edges = length, length - 1
    for _ in range(k - 2):
        vertices, edges = 2 * vertices + 1, 2 * (edges + vertices)
    return vertices, edges


def _predict(family: Family, params: dict) -> tuple[int, int]:
    p = params
    if family == Family.COMPLETE:
        return p["n"], comb(p["n"], 2)
    if family == Family.COMPLETE_BIPARTITE:
        return p["s"] + p["t"], p["s"] * p["t"]
    if family == Family.PATH:
        return p["n"], p["n"] - 1
    if family == Family.CYCLE:
        return p["n"], p["n"]
    if family == Family.STAR:
        return p["n"] + 1, p["n"]
    if family == Family.LADDER:
        return 2 * p["k"], 3 * p["k"] - 2
    if family in (Family.TERNARY_TREE, Family.DARY_TREE):
        height, branching = (p["k"], 3) if family == Family.TERNARY_TREE else (p["h"], p["d"])
        vertices = sum(branching**level for level in range(height))
        return vertices, vertices - 1
    if family == Family.GRID:
        rows, cols = p["rows"], p["cols"]
        return rows * cols, rows * (cols - 1) + cols * (rows - 1)
    if family == Family.EDGELESS:
        return p["n"], 0
    if family == Family.GROHE:
        return grohe_size(p["r"], p["t"], p.get("d"))
    if family == Family.GADGET:
        return gadget_size(p["k"], p["l"])

    base = _predict(*normalize_spec(p["base"]))
    if family == Family.DISJOINT_COPIES:
        return p["k"] * base[0], p["k"] * base[1]
    if family == Family.APEX:
        return base[0] + 1, base[1] + base[0]
    if family == Family.LCOMPOSE:
        return lcompose_size(base, _predict(*normalize_spec(p["piece"])), p["d"])
    vertices, edges = tower_size(base, p["h"], p["d"])
    if family == Family.DOUBLE_TOWER:
        return 2 * vertices - 1, 2 * edges
    return vertices, edges


def predict_size(recipe: BuildRecipe | str | Mapping) -> tuple[int, int]:
    """Closed-form (vertices, edges) of a build, computed without building it.

    Args:
        recipe (BuildRecipe | str | Mapping): A recipe or a family spec.

    Returns:
        tuple[int, int]: The exact counts of the graph build_family would return.
    """
    if isinstance(recipe, BuildRecipe):
        return _predict(recipe.family, recipe.params)
    return _predict(*normalize_spec(recipe))
