"""Reading and writing the DIMACS-like graph text format.

```
c optional comment lines
p <n> <m>
e <u> <v>      (m lines, 0 <= u < v < n)
```
"""

from pathlib import Path

from wcol_graphs.errors import DuplicateEdge, GraphSyntaxError, LoopEdge
from wcol_graphs.graph.graph import Graph, normalize_edge


def _integers(tokens: list[str], count: int, line_number: int) -> list[int]:
    if len(tokens) != count:
        raise GraphSyntaxError(f"expected {count} numbers, got {len(tokens)}", line_number)
    try:
        values = [int(token) for token in tokens]
    except ValueError as e:
        raise GraphSyntaxError(f"not an integer in {tokens}", line_number) from e
    if any(value < 0 for value in values):
        raise GraphSyntaxError(f"negative number in {tokens}", line_number)
    return values


def parse_graph(text: str) -> Graph:
    """Parse a graph from its text form.

    Edges may be written in either orientation; the header counts are checked against the body.

    Args:
        text (str): The file content.

    Returns:
        Graph: The parsed graph.

    Raises:
        GraphSyntaxError: On a malformed line, a missing or repeated header, or a count mismatch.
        LoopEdge: On an edge `e v v`.
        DuplicateEdge: On an edge listed twice.
    """
    n: int | None = None
    declared_m = 0
    header_line = 0
    edges: set[tuple[int, int]] = set()
    for line_number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphSyntaxError("second header line", line_number)
            # tolerate the classic "p edge n m" header as well
            body = tokens[2:] if len(tokens) == 4 and tokens[1] == "edge" else tokens[1:]
            n, declared_m = _integers(body, 2, line_number)
            header_line = line_number
        elif tokens[0] == "e":
            u, v = _integers(tokens[1:], 2, line_number)
            if u == v:
                raise LoopEdge(f"loop at vertex {u}", line_number)
            if n is None:
                raise GraphSyntaxError("edge before the header line", line_number)
            if max(u, v) >= n:
                raise GraphSyntaxError(f"vertex {max(u, v)} out of range for n = {n}", line_number)
            edge = normalize_edge(u, v)
            if edge in edges:
                raise DuplicateEdge(f"edge {edge} listed twice", line_number)
            edges.add(edge)
        else:
            raise GraphSyntaxError(f"unknown record type {tokens[0]!r}", line_number)
    if n is None:
        raise GraphSyntaxError("missing header line 'p <n> <m>'", 1)
    if declared_m != len(edges):
        raise GraphSyntaxError(f"header declares {declared_m} edges, found {len(edges)}", header_line)
    return Graph(n, frozenset(edges))


def write_graph(g: Graph, comments: list[str] | None = None) -> str:
    """Canonical text form: comments, header, then edges in increasing order."""
    lines = [f"c {comment}" for comment in comments or []]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def read_graph_file(path: Path) -> Graph:
    with open(path) as f:
        return parse_graph(f.read())


def write_graph_file(g: Graph, path: Path, comments: list[str] | None = None) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        f.write(write_graph(g, comments))
