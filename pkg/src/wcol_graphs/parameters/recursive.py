"""Exact treedepth, 2-treedepth and rooted 2-treedepth by memoized recursion.

All three parameters share one engine: a subproblem is an induced subgraph G[X] of the bound input graph, and the
value of G[X] is either the maximum over its pieces (components or blocks) or the minimum over a list of moves
(vertex deletions, leaf-block separations). Values are memoized twice: by the vertex mask of X for the current
graph, and by the canonical form of G[X] across every graph a solver instance sees, so isomorphic subproblems
(the copies inside G_{r,t}, say) are solved once.

Rooted 2-treedepth of a connected graph with several blocks only considers separations cutting off a leaf block B at
its attachment vertex v: if (A, B) is a separation of order one with B a block and both A and B - A nonempty, then B
meets no other block except at v, so B is a leaf of the block-cut tree.
"""

from __future__ import annotations

import logging
import sys
from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from wcol_graphs.errors import SizeLimit
from wcol_graphs.graph.blocks import block_separations, block_sets
from wcol_graphs.graph.canonical import Certificate, canonical_form, vertex_mask
from wcol_graphs.graph.graph import Graph
from wcol_graphs.parameters.certificate import ParamCertificate, Parameter, StepKind, WitnessStep
from wcol_graphs.utils.file_utils import read_params

logger = logging.getLogger(__name__)

RECURSION_LIMIT = 20000


@dataclass(frozen=True)
class Move:
    """One way of evaluating a subproblem: the value is the maximum of value(part) + increment over the parts."""

    kind: StepKind
    chosen: tuple[int, ...]
    parts: tuple[frozenset[int], ...]
    increments: tuple[int, ...]


class RecursiveParameterSolver(ABC):
    """Memoized evaluator of a recursively defined graph parameter.

    A solver instance can be reused across graphs; the canonical-form memo carries over, the vertex-mask memo is
    reset whenever a new graph is bound.

    Args:
        memo_cap (int | None): Maximum number of memo entries before SizeLimit is raised.
        canonical_vertex_cap (int | None): Subproblems with more vertices are keyed by vertex mask only.
        canonical_leaf_cap (int | None): Leaf cap of the canonical labelling search.
        block_lower_bound (bool | None): Allow early termination at a lower bound where the parameter supports it.

    Defaults come from `recursive_parameters` in search_params.yml.
    """

    parameter: Parameter

    def __init__(
        self,
        memo_cap: int | None = None,
        canonical_vertex_cap: int | None = None,
        canonical_leaf_cap: int | None = None,
        block_lower_bound: bool | None = None,
    ):
        params = read_params("search_params.yml")["recursive_parameters"]
        overrides = {
            "memo_cap": memo_cap,
            "canonical_vertex_cap": canonical_vertex_cap,
            "canonical_leaf_cap": canonical_leaf_cap,
            "block_lower_bound": block_lower_bound,
        }
        settings = {key: params[key] if value is None else value for key, value in overrides.items()}
        self.memo_cap: int = settings["memo_cap"]
        self.canonical_vertex_cap: int = settings["canonical_vertex_cap"]
        self.canonical_leaf_cap: int = settings["canonical_leaf_cap"]
        self.block_lower_bound: bool = settings["block_lower_bound"]
        self.g: Graph | None = None
        self._local: dict[int, int] = {}
        self._shared: dict[Certificate, int] = {}

    @property
    def memo_size(self) -> int:
        return len(self._local) + len(self._shared)

    def _bind(self, g: Graph) -> None:
        if g is not self.g:
            self.g = g
            self._local = {}
        if sys.getrecursionlimit() < RECURSION_LIMIT:
            sys.setrecursionlimit(RECURSION_LIMIT)

    def value(self, g: Graph) -> int:
        """The parameter value of g, without a witness."""
        self._bind(g)
        return self._value(frozenset(g.vertices))

    def solve(self, g: Graph) -> ParamCertificate:
        """The parameter value of g together with a witness tree.

        Raises:
            SizeLimit: If the memo tables grow beyond the configured cap.
        """
        self._bind(g)
        everything = frozenset(g.vertices)
        value = self._value(everything)
        witness = self._witness(everything)
        logger.debug("%s = %d on %r, memo holds %d entries", self.parameter.value, value, g, self.memo_size)
        return ParamCertificate(self.parameter, value, witness)

    def _value(self, vertices: frozenset[int]) -> int:
        if not vertices:
            return 0
        mask = vertex_mask(vertices)
        cached = self._local.get(mask)
        if cached is not None:
            return cached
        form = canonical_form(self.g, vertices, self.canonical_vertex_cap, self.canonical_leaf_cap)
        value = self._shared.get(form) if form is not None else None
        if value is None:
            value = self._evaluate(vertices)
            if form is not None:
                self._shared[form] = value
        self._local[mask] = value
        if self.memo_size > self.memo_cap:
            raise SizeLimit(f"{self.parameter.value} memo table", self.memo_size, self.memo_cap)
        return value

    def _score(self, move: Move) -> int:
        return max(self._value(part) + increment for part, increment in zip(move.parts, move.increments))

    def _evaluate(self, vertices: frozenset[int]) -> int:
        lower = self._lower_bound(vertices)
        best = None
        for move in self._moves(vertices):
            score = self._score(move)
            if best is None or score < best:
                best = score
            if best <= lower:
                break
        return best

    def _witness(self, vertices: frozenset[int]) -> WitnessStep:
        if not vertices:
            return WitnessStep(StepKind.EMPTY, vertices)
        target = self._value(vertices)
        move = next(move for move in self._moves(vertices) if self._score(move) == target)
        return WitnessStep(move.kind, vertices, move.chosen, tuple(self._witness(part) for part in move.parts))

    def _view(self, vertices: frozenset[int]) -> nx.Graph:
        return self.g.nx.subgraph(vertices)

    def _components(self, vertices: frozenset[int]) -> list[frozenset[int]]:
        return sorted((frozenset(c) for c in nx.connected_components(self._view(vertices))), key=min)

    def _split(self, pieces: list[frozenset[int]]) -> Move:
        return Move(StepKind.SPLIT, (), tuple(pieces), (0,) * len(pieces))

    def _deletions(self, vertices: frozenset[int]) -> Iterator[Move]:
        """Deleting one vertex per twin class of G[X], highest degree first."""
        adjacency = {v: self.g.adjacency[v] & vertices for v in vertices}
        kept: list[int] = []
        for v in sorted(vertices, key=lambda v: (-len(adjacency[v]), v)):
            if not any(adjacency[v] - {u} == adjacency[u] - {v} for u in kept):
                kept.append(v)
                yield Move(StepKind.DELETE, (v,), (vertices - {v},), (1,))

    def _clique_number(self, vertices: frozenset[int]) -> int:
        return max(len(clique) for clique in nx.find_cliques(self._view(vertices)))

    def _lower_bound(self, vertices: frozenset[int]) -> int:
        return 0

    @abstractmethod
    def _moves(self, vertices: frozenset[int]) -> Iterator[Move]:
        """All moves the recursion minimises over for the nonnull subproblem G[X]."""


class TreedepthSolver(RecursiveParameterSolver):
    """td(G) = max over components; min over deletions td(G - v) + 1 when G is connected."""

    parameter = Parameter.TD

    def _lower_bound(self, vertices: frozenset[int]) -> int:
        return self._clique_number(vertices) if self.block_lower_bound else 0

    def _moves(self, vertices: frozenset[int]) -> Iterator[Move]:
        pieces = self._components(vertices)
        if len(pieces) > 1:
            yield self._split(pieces)
        else:
            yield from self._deletions(vertices)


class TwoDepthSolver(RecursiveParameterSolver):
    """td2(G) = max over blocks; min over deletions td2(G - v) + 1 when G is a single block."""

    parameter = Parameter.TD2

    def _moves(self, vertices: frozenset[int]) -> Iterator[Move]:
        pieces = block_sets(self._view(vertices))
        if len(pieces) > 1:
            yield self._split(pieces)
        else:
            yield from self._deletions(vertices)


class RootedTwoDepthSolver(RecursiveParameterSolver):
    """rtd2 via components, single-block deletions and leaf-block separations.

    A leaf block B attached at v scores max{rtd2(G - (B - v)), rtd2(B - v) + 1}. With `block_lower_bound` the
    search over leaf blocks stops once it reaches max over blocks of rtd2(block), and the search over deletions
    stops at the clique number (at least 3 for a block with a cycle); both are lower bounds by minor monotonicity.
    """

    parameter = Parameter.RTD2

    def _lower_bound(self, vertices: frozenset[int]) -> int:
        if not self.block_lower_bound or len(vertices) == 1:
            return 0
        view = self._view(vertices)
        if not nx.is_connected(view):
            return 0
        blocks = block_sets(view)
        if len(blocks) > 1:
            return max(self._value(block) for block in blocks)
        return max(self._clique_number(vertices), 3 if len(vertices) >= 3 else 2)

    def _moves(self, vertices: frozenset[int]) -> Iterator[Move]:
        if len(vertices) == 1:
            yield from self._deletions(vertices)
            return
        pieces = self._components(vertices)
        if len(pieces) > 1:
            yield self._split(pieces)
            return
        view = self._view(vertices)
        blocks = block_sets(view)
        if len(blocks) == 1:
            yield from self._deletions(vertices)
            return
        cuts = frozenset(nx.articulation_points(view))
        for block, cut in block_separations(vertices, blocks, cuts):
            (v,) = cut
            yield Move(StepKind.SEPARATE, (v,), ((vertices - block) | cut, block - cut), (0, 1))


def treedepth(g: Graph, solver: TreedepthSolver | None = None) -> ParamCertificate:
    """Exact treedepth with a witness tree; pass a solver to share its memo across calls."""
    return (solver or TreedepthSolver()).solve(g)


def twodepth(g: Graph, solver: TwoDepthSolver | None = None) -> ParamCertificate:
    """Exact 2-treedepth with a witness tree."""
    return (solver or TwoDepthSolver()).solve(g)


def rooted_twodepth(g: Graph, solver: RootedTwoDepthSolver | None = None) -> ParamCertificate:
    """Exact rooted 2-treedepth with a separation-tree witness.

    Examples: the null graph gives 0, an edgeless nonnull graph 1, a forest with an edge 2 and K_3 gives 3.
    """
    return (solver or RootedTwoDepthSolver()).solve(g)


def rooted_twodepth_by_separations(g: Graph) -> int:
    """rtd2 straight from the separation definition, over every separation of order at most one.

    For a graph with two or more vertices this is the minimum of max{rtd2(A), rtd2(B - A) + |A ∩ B|} over all
    separations (A, B) of order ≤ 1 with A nonnull and B - A nonnull. No block structure is used, so this serves as
    an oracle for the leaf-block recursion. Exponential; meant for graphs of at most about eight vertices.
    """
    memo: dict[frozenset[int], int] = {}

    def rtd2(vertices: frozenset[int]) -> int:
        if len(vertices) <= 1:
            return len(vertices)
        if vertices in memo:
            return memo[vertices]
        best = len(vertices)
        for cut in [None, *sorted(vertices)]:
            rest = vertices - {cut} if cut is not None else vertices
            pieces = [frozenset(c) for c in nx.connected_components(g.nx.subgraph(rest))]
            for size in range(1, len(pieces) + 1):
                for chosen in combinations(pieces, size):
                    far = frozenset().union(*chosen)
                    near = vertices - far
                    if cut is None and not near:
                        continue
                    best = min(best, max(rtd2(near), rtd2(far) + (0 if cut is None else 1)))
        memo[vertices] = best
        return best

    return rtd2(frozenset(g.vertices))


def rtd2_at_most_one(g: Graph) -> bool:
    """rtd2(G) ≤ 1 exactly when G has no edges."""
    return g.is_edgeless()


def rtd2_at_most_two(g: Graph) -> bool:
    """rtd2(G) ≤ 2 exactly when G is a forest."""
    return g.n == 0 or nx.is_forest(g.nx)


def exponent_bracket(g: Graph, solver: RootedTwoDepthSolver | None = None) -> tuple[int, int]:
    """The bracket rtd2(G) - 2 ≤ f ≤ rtd2(G) - 1 on the growth exponent of wcol_r over G-minor-free graphs.

    Only the two ends are reported; the exact exponent is not computed.
    """
    value = (solver or RootedTwoDepthSolver()).value(g)
    return value - 2, value - 1
