"""Parameter certificates and their replay against the recursive definitions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import networkx as nx

from wcol_graphs.errors import BadParams, InvalidCertificate
from wcol_graphs.graph.blocks import block_sets
from wcol_graphs.graph.graph import Graph
from wcol_graphs.graph.structures import PathDecomposition, TreeDecomposition
from wcol_graphs.graph.validation import validate_structure


class Parameter(Enum):
    """The graph parameters the library computes exactly."""

    TD = "td"
    TD2 = "td2"
    RTD2 = "rtd2"
    VC = "vc"
    TW = "tw"
    PW = "pw"

    @classmethod
    def infer_type(cls, name: str) -> Parameter:
        """Parse a parameter name as used on the command line.

        Raises:
            BadParams: If the name is not one of td, td2, rtd2, vc, tw, pw.
        """
        try:
            return cls(name.strip().lower())
        except ValueError as error:
            choices = ", ".join(member.value for member in cls)
            raise BadParams(f"unknown parameter {name!r}, expected one of {choices}") from error


class StepKind(Enum):
    """Kinds of steps in a witness tree of a recursively defined parameter."""

    EMPTY = "empty"
    DELETE = "delete"
    SPLIT = "split"
    SEPARATE = "separate"


@dataclass(frozen=True)
class WitnessStep:
    """One node of a witness tree.

    Attributes:
        kind (StepKind): EMPTY for the null graph; DELETE removes `chosen[0]`; SPLIT breaks the scope into its
            components (td, rtd2) or blocks (td2); SEPARATE cuts off the leaf block attached at `chosen[0]`.
        scope (frozenset[int]): Vertices of the induced subgraph this step acts on, in labels of the input graph.
        chosen (tuple[int, ...]): The deleted vertex or the cut vertex.
        children (tuple[WitnessStep, ...]): Steps for the pieces. For SEPARATE the first child is the A side
            (containing the cut vertex) and the second child is B minus the cut vertex.
    """

    kind: StepKind
    scope: frozenset[int]
    chosen: tuple[int, ...] = ()
    children: tuple[WitnessStep, ...] = ()

    def to_json(self) -> list:
        return [self.kind.value, sorted(self.scope), list(self.chosen), [child.to_json() for child in self.children]]

    @classmethod
    def from_json(cls, data: list) -> WitnessStep:
        kind, scope, chosen, children = data
        return cls(
            StepKind(kind), frozenset(scope), tuple(chosen), tuple(cls.from_json(child) for child in children)
        )

    def depth(self) -> int:
        return 1 + max((child.depth() for child in self.children), default=0)


Witness = WitnessStep | frozenset[int] | TreeDecomposition | PathDecomposition


@dataclass(frozen=True)
class ParamCertificate:
    """Value of a parameter together with a witness that replays to it.

    Attributes:
        parameter (Parameter): Which parameter.
        value (int): The exact value.
        witness (Witness): A witness tree for td, td2 and rtd2, a vertex cover for vc, a decomposition for tw and pw.
    """

    parameter: Parameter
    value: int
    witness: Witness

    def to_json(self) -> dict:
        if isinstance(self.witness, WitnessStep):
            witness = self.witness.to_json()
        elif isinstance(self.witness, frozenset):
            witness = sorted(self.witness)
        else:
            witness = self.witness.to_json()
        return {"parameter": self.parameter.value, "value": self.value, "witness": witness}


def _fail(step: WitnessStep, reason: str) -> InvalidCertificate:
    return InvalidCertificate(f"{step.kind.value} step on {sorted(step.scope)}: {reason}")


def _pieces(g: Graph, scope: frozenset[int], by_blocks: bool) -> list[frozenset[int]]:
    view = g.nx.subgraph(scope)
    if by_blocks:
        return block_sets(view)
    return [frozenset(c) for c in nx.connected_components(view)]


def _replay_step(g: Graph, parameter: Parameter, step: WitnessStep) -> int:
    scope = step.scope
    if step.kind == StepKind.EMPTY:
        if scope:
            raise _fail(step, "scope is not empty")
        return 0

    if step.kind == StepKind.DELETE:
        if len(step.chosen) != 1 or step.chosen[0] not in scope or len(step.children) != 1:
            raise _fail(step, "a deletion needs one vertex of the scope and one child")
        if step.children[0].scope != scope - {step.chosen[0]}:
            raise _fail(step, "child scope is not the scope minus the deleted vertex")
        if len(_pieces(g, scope, by_blocks=parameter != Parameter.TD)) != 1:
            what = "connected" if parameter == Parameter.TD else "a single block"
            raise _fail(step, f"deletions are only allowed when the scope is {what}")
        return _replay_step(g, parameter, step.children[0]) + 1

    if step.kind == StepKind.SPLIT:
        pieces = _pieces(g, scope, by_blocks=parameter == Parameter.TD2)
        child_scopes = sorted((child.scope for child in step.children), key=sorted)
        if len(pieces) < 2 or child_scopes != sorted(pieces, key=sorted):
            raise _fail(step, "children are not the pieces of the scope")
        return max(_replay_step(g, parameter, child) for child in step.children)

    if parameter != Parameter.RTD2:
        raise _fail(step, f"separations are not part of the {parameter.value} recursion")
    if len(step.chosen) != 1 or len(step.children) != 2:
        raise _fail(step, "a separation needs one cut vertex and two children")
    cut = step.chosen[0]
    side_a, rest_b = step.children[0].scope, step.children[1].scope
    side_b = rest_b | {cut}
    if cut not in side_a or side_a | rest_b != scope or side_a & rest_b:
        raise _fail(step, "children do not form a separation at the cut vertex")
    if side_b not in block_sets(g.nx.subgraph(scope)):
        raise _fail(step, "the B side is not a block")
    if any(w in side_a - {cut} for v in rest_b for w in g.adjacency[v]):
        raise _fail(step, "an edge crosses the separation")
    return max(_replay_step(g, parameter, step.children[0]), _replay_step(g, parameter, step.children[1]) + 1)


def replay_certificate(g: Graph, certificate: ParamCertificate) -> int:
    """Re-evaluate a certificate against the definition of its parameter and return the replayed value.

    Witness trees are checked step by step; a vertex cover is checked edge by edge and a decomposition by
    validate_structure. The replayed value is returned even if it disagrees with `certificate.value`.

    Raises:
        InvalidCertificate: If the witness does not follow the recursion or is not a valid cover/decomposition.
    """
    parameter, witness = certificate.parameter, certificate.witness
    if parameter == Parameter.VC:
        g.check_vertices(witness)
        uncovered = [(u, v) for u, v in sorted(g.edges) if u not in witness and v not in witness]
        if uncovered:
            raise InvalidCertificate(f"edges {uncovered[:3]} are not covered")
        return len(witness)
    if parameter in (Parameter.TW, Parameter.PW):
        report = validate_structure(g, witness)
        if not report.valid:
            raise InvalidCertificate("; ".join(str(v) for v in report.violations[:3]))
        return max(report.width, 0)
    if not isinstance(witness, WitnessStep) or witness.scope != frozenset(g.vertices):
        raise InvalidCertificate("the witness tree must start from the whole vertex set")
    return _replay_step(g, parameter, witness)
