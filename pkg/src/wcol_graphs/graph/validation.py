"""Clause-by-clause validation of layerings, tree partitions and tree/path decompositions.

Violations are reported as data, each with a witness, never raised.
"""

from __future__ import annotations

from collections.abc import Collection
from dataclasses import dataclass, field

import networkx as nx

from wcol_graphs.graph.graph import Graph
from wcol_graphs.graph.structures import (
    Layering,
    PathDecomposition,
    StructureKind,
    TreeDecomposition,
    TreePartition,
)


@dataclass(frozen=True)
class Violation:
    """A failed clause together with the vertex, edge, node or part that witnesses the failure."""

    clause: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.clause}: {self.witness}"


@dataclass
class ValidationReport:
    """Result of validate_structure."""

    kind: StructureKind
    violations: list[Violation] = field(default_factory=list)
    width: int | None = None
    natural: bool | None = None

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, clause: str, *witness) -> None:
        self.violations.append(Violation(clause, witness))

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "valid": self.valid,
            "violations": [str(v) for v in self.violations],
            "width": self.width,
            "natural": self.natural,
        }


def _check_parts(report: ValidationReport, g: Graph, parts, scope: Collection[int] | None) -> dict[int, int]:
    """Shared clauses of layerings and tree partitions: nonempty, in range, disjoint, covering the scope."""
    owner: dict[int, int] = {}
    for index, part in enumerate(parts):
        if not part:
            report.add("part is empty", index)
        for v in sorted(part):
            if not 0 <= v < g.n:
                report.add("vertex out of range", v)
            elif v in owner:
                report.add("parts are not disjoint", v, owner[v], index)
            else:
                owner[v] = index
    if scope is not None:
        for v in sorted(set(scope) - set(owner)):
            report.add("scope vertex in no part", v)
        for v in sorted(set(owner) - set(scope)):
            report.add("part vertex outside the scope", v)
    return owner


def _check_tree(report: ValidationReport, tree: Graph, count: int, what: str) -> bool:
    if tree.n == 0 or not nx.is_tree(tree.nx):
        report.add("index graph is not a tree", tree.n, tree.m)
    if count != tree.n:
        report.add(f"one {what} per tree node required", count, tree.n)
        return False
    return True


def _validate_layering(report: ValidationReport, g: Graph, layering: Layering, scope) -> None:
    owner = _check_parts(report, g, layering.parts, scope)
    for u, v in sorted(g.edges):
        if u in owner and v in owner and abs(owner[u] - owner[v]) > 1:
            report.add("edge spans non-consecutive layers", (u, v), owner[u], owner[v])


def _validate_tree_partition(report: ValidationReport, g: Graph, partition: TreePartition, scope) -> None:
    if not _check_tree(report, partition.tree, len(partition.parts), "part"):
        return
    owner = _check_parts(report, g, partition.parts, scope)
    for u, v in sorted(g.edges):
        if u in owner and v in owner and owner[u] != owner[v] and not partition.tree.has_edge(owner[u], owner[v]):
            report.add("edge joins parts of non-adjacent tree nodes", (u, v), owner[u], owner[v])


def _validate_tree_decomposition(report: ValidationReport, g: Graph, dec: TreeDecomposition, natural: bool) -> None:
    if not _check_tree(report, dec.tree, len(dec.bags), "bag"):
        return
    occurrences: dict[int, list[int]] = {v: [] for v in g.vertices}
    for x, bag in enumerate(dec.bags):
        for v in sorted(bag):
            if v not in occurrences:
                report.add("vertex out of range", v, x)
            else:
                occurrences[v].append(x)
    for v, nodes in occurrences.items():
        if not nodes:
            report.add("vertex in no bag", v)
        elif not nx.is_connected(dec.tree.nx.subgraph(nodes)):
            report.add("occurrence set is disconnected", v, tuple(nodes))
    for u, v in sorted(g.edges):
        if not any(u in bag and v in bag for bag in dec.bags):
            report.add("edge in no bag", (u, v))
    report.width = dec.width
    if natural and report.valid:
        report.natural = True
        for side, x, y in _tree_edge_sides(dec.tree):
            covered = dec.union_of(side)
            if covered and not nx.is_connected(g.nx.subgraph(covered)):
                report.natural = False
                report.add("side of tree edge is not connected", (x, y), tuple(sorted(side)))


def _tree_edge_sides(tree: Graph):
    """Yield (node set, x, y) for both components of T - xy, for every tree edge xy."""
    for x, y in sorted(tree.edges):
        cut = nx.Graph(tree.nx)
        cut.remove_edge(x, y)
        for root in (x, y):
            yield frozenset(nx.node_connected_component(cut, root)), x, y


def validate_structure(
    g: Graph,
    structure: Layering | TreePartition | TreeDecomposition | PathDecomposition,
    kind: StructureKind | str | None = None,
    natural: bool = False,
    scope: Collection[int] | None = None,
) -> ValidationReport:
    """Check every invariant clause of a claimed structure.

    Args:
        g (Graph): The graph the structure is claimed for.
        structure: The layering, tree partition or decomposition.
        kind (StructureKind | str | None): The claimed kind; inferred from the instance when omitted.
        natural (bool): Also check naturality of a tree or path decomposition.
        scope (Collection[int] | None): For layerings and tree partitions, the vertex scope they must cover.
            Defaults to the union of the parts; edges are checked inside the scope only.

    Returns:
        ValidationReport: The report; `valid` is True iff no clause failed.
    """
    if kind is None:
        kind = StructureKind.infer_type(structure)
    elif isinstance(kind, str):
        kind = StructureKind(kind)
    report = ValidationReport(kind)
    if kind != StructureKind.infer_type(structure):
        report.add("structure does not match the claimed kind", type(structure).__name__)
        return report

    if kind == StructureKind.LAYERING:
        _validate_layering(report, g, structure, scope)
    elif kind == StructureKind.TREE_PARTITION:
        _validate_tree_partition(report, g, structure, scope)
    elif kind == StructureKind.TREE_DECOMPOSITION:
        _validate_tree_decomposition(report, g, structure, natural)
    else:
        _validate_tree_decomposition(report, g, structure.as_tree_decomposition(), natural)
    return report
