"""Basic families: cliques, bicliques, paths, cycles, stars, ladders, complete d-ary trees, grids."""

from itertools import combinations

from wcol_graphs.graph.graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def complete_bipartite_graph(s: int, t: int) -> Graph:
    """K_{s,t} with sides 0..s-1 and s..s+t-1."""
    return Graph(s + t, frozenset((i, s + j) for i in range(s) for j in range(t)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """Centre 0 joined to 1..leaves."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def ladder_graph(rungs: int) -> Graph:
    """Rails 0..k-1 and k..2k-1 with rungs i ~ k + i."""
    k = rungs
    rails = [(i, i + 1) for i in range(k - 1)] + [(k + i, k + i + 1) for i in range(k - 1)]
    return Graph(2 * k, frozenset(rails + [(i, k + i) for i in range(k)]))


def dary_tree(height: int, branching: int) -> Graph:
    """F_{h,d}: the complete d-ary tree of vertex-height h, rooted at 0, children of i are d·i+1, ..., d·i+d."""
    n = sum(branching**level for level in range(height))
    return Graph(n, frozenset(((v - 1) // branching, v) for v in range(1, n)))


def grid_graph(rows: int, cols: int) -> Graph:
    """rows × cols grid; vertex (i, j) is i·cols + j."""
    horizontal = [(i * cols + j, i * cols + j + 1) for i in range(rows) for j in range(cols - 1)]
    vertical = [(i * cols + j, (i + 1) * cols + j) for i in range(rows - 1) for j in range(cols)]
    return Graph(rows * cols, frozenset(horizontal + vertical))
