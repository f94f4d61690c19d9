"""Simple undirected graphs on vertices 0..n-1, with the traversals the rest
of the library builds on.

Graphs are immutable after construction.  Adjacency is kept twice: as sorted
neighbor tuples (the deterministic iteration order every algorithm uses) and
as per-vertex integer bitmasks (fast membership and set algebra).  All
operations here are pure functions; values are safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import PreconditionFailed

__all__ = [
    "Graph",
    "Path",
    "Cycle",
    "graph_from_edges",
    "is_connected",
    "connected_components",
    "cut_vertices",
    "shortest_path",
    "bfs_distances",
    "is_path_in",
    "is_cycle_in",
]


class Graph:
    """Immutable simple graph: no loops, no parallel edges, symmetric adjacency."""

    __slots__ = ("n", "adj", "neighbor_masks")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...], masks: tuple[int, ...]):
        # Internal constructor; build graphs through graph_from_edges or the
        # other factories in this package.
        self.n = n
        self.adj = adj
        self.neighbor_masks = masks

    @classmethod
    def _from_masks(cls, n: int, masks: Sequence[int]) -> "Graph":
        adj = tuple(tuple(_bits(m)) for m in masks)
        return cls(n, adj, tuple(masks))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(len(a) for a in self.adj)

    def max_degree(self) -> int:
        if self.n == 0:
            return 0
        return max(len(a) for a in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.neighbor_masks[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Path:
    """Ordered vertex sequence, pairwise distinct, consecutive pairs adjacent."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


@dataclass(frozen=True)
class Cycle:
    """Ordered vertex sequence closing back on itself; length is the vertex count."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def is_path_in(g: Graph, path: Path) -> bool:
    """True iff ``path`` is a valid simple path of ``g``."""
    vs = path.vertices
    if len(vs) == 0 or len(set(vs)) != len(vs):
        return False
    if any(v < 0 or v >= g.n for v in vs):
        return False
    return all(g.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))


def is_cycle_in(g: Graph, cycle: Cycle) -> bool:
    """True iff ``cycle`` is a valid simple cycle of ``g`` (length >= 3)."""
    vs = cycle.vertices
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    if any(v < 0 or v >= g.n for v in vs):
        return False
    return all(g.has_edge(u, v) for u, v in cycle.edges())


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on vertices 0..n-1 from an edge list.

    Duplicate pairs (in either orientation) collapse to a single edge.
    Raises PreconditionFailed for out-of-range endpoints or loop edges.
    """
    if n < 0:
        raise PreconditionFailed(f"vertex count must be nonnegative, got {n}")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise PreconditionFailed(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise PreconditionFailed(f"loop edge at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph._from_masks(n, masks)


def bfs_distances(g: Graph, source: int, forbidden: frozenset[int] | set[int] = frozenset()) -> list[int]:
    """BFS distances from ``source``; -1 marks unreachable or forbidden vertices."""
    dist = [-1] * g.n
    if source in forbidden:
        return dist
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adj[u]:
            if dist[w] == -1 and w not in forbidden:
                dist[w] = du + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches every vertex (n <= 1 counts as connected)."""
    if g.n <= 1:
        return True
    dist = bfs_distances(g, 0)
    return all(d >= 0 for d in dist)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest member."""
    seen = [False] * g.n
    out: list[tuple[int, ...]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def cut_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose removal increases the number of connected components.

    Iterative Hopcroft-Tarjan articulation point search, one DFS per
    component, children explored in ascending label order.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    points: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        # stack entries: (vertex, parent, iterator over neighbors)
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                elif w != parent:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if pv != root and low[v] >= disc[pv]:
                        points.add(pv)
        if root_children > 1:
            points.add(root)
    return frozenset(points)


def shortest_path(
    g: Graph,
    u: int,
    v: int,
    forbidden: frozenset[int] | set[int] = frozenset(),
) -> Path | None:
    """A shortest u-v path avoiding ``forbidden``, or None if none exists.

    Ties are broken deterministically: the returned path is the
    lexicographically smallest vertex sequence among shortest paths, obtained
    by walking from ``u`` along decreasing BFS distance to ``v`` and always
    taking the smallest qualifying neighbor.
    """
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise PreconditionFailed(f"endpoints ({u}, {v}) out of range for n={g.n}")
    if u in forbidden or v in forbidden:
        raise PreconditionFailed("path endpoints must not be forbidden")
    if u == v:
        return Path((u,))
    dist = bfs_distances(g, v, forbidden)
    if dist[u] == -1:
        return None
    walk = [u]
    cur = u
    while cur != v:
        cur = next(w for w in g.adj[cur] if w not in forbidden and dist[w] == dist[cur] - 1)
        walk.append(cur)
    return Path(tuple(walk))
