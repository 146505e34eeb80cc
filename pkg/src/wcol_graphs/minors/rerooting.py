"""Rerooting minor models so that the root branch set contains a prescribed host vertex.

Both transformations trade one level of the pattern for the freedom to choose the root: a model of the double
tower T'_{h,d}(X) becomes a model of T_{h,d}(X), and a model of F_{h,d+1} becomes a model of F_{h,d}. Every
output branch set contains an input branch set, so rich models stay rich with the same anchors.
"""

from __future__ import annotations

import logging
from collections import deque

from wcol_graphs.constructions.basic import dary_tree
from wcol_graphs.constructions.gluing import DoubleTower
from wcol_graphs.errors import InvalidModel, NotConnected
from wcol_graphs.graph.graph import Graph, geodesic, is_connected
from wcol_graphs.minors.model import Model, RichModel, check_model

logger = logging.getLogger(__name__)


def _unpack(model: Model | RichModel) -> tuple[Model, tuple[int, ...] | None]:
    if isinstance(model, RichModel):
        return model.model, model.anchors
    return model, None


def _pack(pattern: Graph, branch: list[frozenset[int]], anchors: list[int] | None) -> Model | RichModel:
    result = Model(pattern, tuple(branch))
    return result if anchors is None else RichModel(result, tuple(anchors))


def _check_host(host: Graph, model: Model, u: int) -> None:
    if not is_connected(host):
        raise NotConnected("rerooting needs a connected host")
    host.check_vertex(u)
    check_model(host, model)


def tower_of(tprime: DoubleTower) -> Graph:
    """The tower T_{h,d}(X) whose two copies form the double tower, labelled as in `tprime.halves`."""
    first = tprime.halves[0]
    inverse = {w: t for t, w in first.items()}
    edges = ((inverse[a], inverse[b]) for a, b in tprime.graph.edges if a in inverse and b in inverse)
    return Graph.from_edges(len(first), edges)


def reroot_tprime_model(host: Graph, model: Model | RichModel, tprime: DoubleTower, u: int) -> Model | RichModel:
    """Turn a model of T'_{h,d}(X) into a model of T_{h,d}(X) whose root branch set contains u.

    A shortest path P from u to the model has no interior vertex in it. Its last vertex lies in the branch set of
    some x0, in half i (the first half when x0 is the shared root). The root of the result takes V(P) together
    with all branch sets of half i; every other tower vertex keeps the branch set of its copy in the other half.

    Args:
        host (Graph): A connected host.
        model (Model | RichModel): A model of `tprime.graph`.
        tprime (DoubleTower): The double tower with its half maps.
        u (int): The vertex the root branch set must contain.

    Returns:
        Model | RichModel: A model of the tower (rich with the same anchors when the input is rich).

    Raises:
        NotConnected: If the host is not connected.
        InvalidModel: If the model is invalid or not a model of `tprime.graph`.
    """
    plain, anchors = _unpack(model)
    if plain.pattern != tprime.graph:
        raise InvalidModel("the model pattern is not the given double tower")
    _check_host(host, plain, u)

    path = geodesic(host, {u}, plain.vertices)
    x0 = plain.owner()[path[-1]]
    side = 0 if x0 in tprime.halves[0].values() else 1
    other = tprime.halves[1 - side]
    root_set = frozenset(path).union(*(plain.branch[x] for x in tprime.halves[side].values()))

    tower = tower_of(tprime)
    branch = [root_set if t == tprime.root else plain.branch[other[t]] for t in tower.vertices]
    kept = None if anchors is None else [anchors[other[t]] for t in tower.vertices]
    logger.debug("rerooted double tower model through half %d with a path of %d vertices", side, len(path))
    return _pack(tower, branch, kept)


def cover_host(host: Graph, branch: tuple[frozenset[int], ...]) -> list[frozenset[int]]:
    """Grow disjoint branch sets to cover a connected host: every other vertex joins the set of its BFS parent."""
    owner = {v: x for x, bag in enumerate(branch) for v in bag}
    queue = deque(sorted(owner))
    while queue:
        v = queue.popleft()
        for w in sorted(host.neighbors(v)):
            if w not in owner:
                owner[w] = owner[v]
                queue.append(w)
    grown: list[set[int]] = [set() for _ in branch]
    for v, x in owner.items():
        grown[x].add(v)
    return [frozenset(bag) for bag in grown]


def _height(vertices: int, branching: int) -> int | None:
    height, size = 0, 0
    while size < vertices:
        size += branching**height
        height += 1
    return height if size == vertices else None


def reroot_fhd_model(host: Graph, model: Model | RichModel, d: int, u: int) -> Model | RichModel:
    """Turn a model of F_{h,d+1} into a model of F_{h,d} whose root branch set contains u.

    Branch sets are first grown to cover the host. The depth-one subtree whose branch sets contain u (the first
    one when u is in the root branch set) is merged into the root. The remaining d children of the root keep
    their order; below them, the c-th child of a vertex maps to the c-th child.

    Args:
        host (Graph): A connected host.
        model (Model | RichModel): A model of the complete (d+1)-ary tree F_{h,d+1} labelled as `dary_tree`.
        d (int): Branching of the result, at least 1.
        u (int): The vertex the root branch set must contain.

    Raises:
        NotConnected: If the host is not connected.
        InvalidModel: If the model is invalid or its pattern is not F_{h,d+1}.
    """
    plain, anchors = _unpack(model)
    branching = d + 1
    height = _height(plain.pattern.n, branching) if d >= 1 else None
    if height is None or plain.pattern != dary_tree(height, branching):
        raise InvalidModel(f"the model pattern is not a complete {branching}-ary tree")
    _check_host(host, plain, u)

    grown = cover_host(host, plain.branch)
    if plain.pattern.n == 1:
        return _pack(plain.pattern, grown, None if anchors is None else list(anchors))
    x_u = next(x for x, bag in enumerate(grown) if u in bag)
    while x_u > branching:
        x_u = (x_u - 1) // branching
    merged = 1 if x_u == 0 else x_u

    subtree, frontier = {merged}, [merged]
    while frontier:
        v = frontier.pop()
        children = [c for c in range(branching * v + 1, branching * v + branching + 1) if c < plain.pattern.n]
        subtree.update(children)
        frontier.extend(children)
    remaining = [c for c in range(1, branching + 1) if c != merged and c < plain.pattern.n]

    target = dary_tree(height, d)
    image = [0] * target.n
    for v in range(1, target.n):
        parent = (v - 1) // d
        index = (v - 1) % d
        image[v] = remaining[index] if parent == 0 else branching * image[parent] + 1 + index
    branch = [grown[0].union(*(grown[x] for x in subtree))] + [grown[image[v]] for v in range(1, target.n)]
    kept = None if anchors is None else [anchors[image[v]] for v in target.vertices]
    logger.debug("merged depth-one subtree %d into the root branch set", merged)
    return _pack(target, branch, kept)
