"""Embedded fixture graphs, constructed programmatically."""

from __future__ import annotations

from itertools import combinations

from .correspondence import expand
from .graphs import Graph, graph_from_edges

__all__ = [
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "complete_bipartite",
    "prism",
    "cube",
    "petersen",
    "truncated_tetrahedron",
    "line_graph",
    "petersen_line_graph",
    "standard_fixtures",
]


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism() -> Graph:
    """Two triangles joined by a perfect matching (K3 x K2)."""
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return graph_from_edges(6, edges)


def cube() -> Graph:
    """The 3-cube: vertices are 3-bit strings, edges flip one bit."""
    edges = [(i, i ^ (1 << b)) for i in range(8) for b in range(3) if i < i ^ (1 << b)]
    return graph_from_edges(8, edges)


def petersen() -> Graph:
    """Outer 5-cycle, inner pentagram, spokes between them."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, 5 + i))
    return graph_from_edges(10, edges)


def truncated_tetrahedron() -> Graph:
    """Expansion of K4: four triangles joined pairwise by a matching."""
    return expand(complete_graph(4))


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge of g, adjacent when the edges share an endpoint."""
    edge_list = g.edges()
    index = {e: i for i, e in enumerate(edge_list)}
    out = []
    for v in range(g.n):
        incident = [index[(min(v, w), max(v, w))] for w in g.adj[v]]
        out.extend(combinations(incident, 2))
    return graph_from_edges(len(edge_list), out)


def petersen_line_graph() -> Graph:
    """15-vertex 4-regular claw-free C4-free graph."""
    return line_graph(petersen())


def standard_fixtures() -> dict[str, Graph]:
    """The named fixture set used throughout the tests and demos."""
    return {
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "C5": cycle_graph(5),
        "PRISM": prism(),
        "CUBE": cube(),
        "PETERSEN": petersen(),
        "TRUNC_TET": truncated_tetrahedron(),
        "L_PETERSEN": petersen_line_graph(),
    }
