"""Structural recognizers: claws, 4-cycles, girth, exact per-length cycle
search, the full cycle-length spectrum, and triangulated-edge status.

Cycle enumeration is anchored DFS: for each anchor m in ascending order,
simple paths are extended through vertices larger than m only, closing a
cycle on return to m.  Each cycle is visited exactly once, at its minimum
vertex, with the orientation fixed by requiring the second path vertex to be
smaller than the last.  Exponential in the worst case, which is fine at desk
scale; per-length queries exit early on the first hit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import PreconditionFailed
from .graphs import Cycle, Graph

__all__ = [
    "ClawWitness",
    "CycleSpectrum",
    "TriangulationStatus",
    "find_claw",
    "find_c4",
    "girth",
    "has_cycle_of_length",
    "cycle_spectrum",
    "power_of_two_cycle",
    "triangulation_status",
]


@dataclass(frozen=True)
class ClawWitness:
    """An induced K_{1,3}: center adjacent to three pairwise non-adjacent leaves."""

    center: int
    leaves: tuple[int, int, int]


@dataclass(frozen=True)
class CycleSpectrum:
    """Achievable cycle lengths up to a bound, one witness cycle per length."""

    lengths: frozenset[int]
    witnesses: tuple[tuple[int, Cycle], ...]

    def witness(self, length: int) -> Cycle | None:
        for ln, cyc in self.witnesses:
            if ln == length:
                return cyc
        return None


@dataclass(frozen=True)
class TriangulationStatus:
    """Triangle membership of an edge; ``detour`` is set iff the triangle is unique."""

    edge: tuple[int, int]
    triangle_count: int
    detour: int | None


def find_claw(g: Graph) -> ClawWitness | None:
    """First induced claw in deterministic scan order, or None if claw-free."""
    masks = g.neighbor_masks
    for center in range(g.n):
        nbrs = g.adj[center]
        if len(nbrs) < 3:
            continue
        for a, b, c in combinations(nbrs, 3):
            if not ((masks[a] >> b) & 1 or (masks[a] >> c) & 1 or (masks[b] >> c) & 1):
                return ClawWitness(center, (a, b, c))
    return None


def find_c4(g: Graph) -> Cycle | None:
    """A 4-cycle subgraph (chords permitted), or None.

    Two vertices with at least two common neighbors span a 4-cycle; pairs are
    scanned in lexicographic order, so the result is deterministic.
    """
    masks = g.neighbor_masks
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = masks[u] & masks[v]
            if common.bit_count() >= 2:
                x = (common & -common).bit_length() - 1
                common ^= 1 << x
                y = (common & -common).bit_length() - 1
                return Cycle((u, x, v, y))
    return None


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    One BFS per root; every non-tree edge (u, w) closes a cycle of length at
    most dist(u) + dist(w) + 1, and over all roots the minimum is exact.
    """
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        for u in range(g.n):
            if dist[u] == -1:
                continue
            for w in g.adj[u]:
                if w <= u or dist[w] == -1:
                    continue
                if parent[u] == w or parent[w] == u:
                    continue
                cand = dist[u] + dist[w] + 1
                if best is None or cand < best:
                    best = cand
        if best == 3:
            return 3
    return best


def _cycles_upto(g: Graph, max_len: int) -> Iterator[tuple[int, ...]]:
    """All simple cycles of length <= max_len, each exactly once."""
    masks = g.neighbor_masks
    adj = g.adj
    for anchor in range(g.n):
        anchor_bit = 1 << anchor
        path = [anchor]

        def extend(last: int, used: int) -> Iterator[tuple[int, ...]]:
            if len(path) >= 3 and (masks[last] & anchor_bit) and path[1] < path[-1]:
                yield tuple(path)
            if len(path) == max_len:
                return
            for w in adj[last]:
                if w > anchor and not (used >> w) & 1:
                    path.append(w)
                    yield from extend(w, used | (1 << w))
                    path.pop()

        yield from extend(anchor, anchor_bit)


def has_cycle_of_length(g: Graph, length: int) -> Cycle | None:
    """Some cycle of exactly ``length``, or None; an exact decision, not a heuristic."""
    if length < 3:
        raise PreconditionFailed(f"cycle length must be >= 3, got {length}")
    if length > g.n:
        return None
    masks = g.neighbor_masks
    adj = g.adj
    for anchor in range(g.n - length + 1):
        anchor_bit = 1 << anchor
        path = [anchor]

        def extend(last: int, used: int) -> tuple[int, ...] | None:
            if len(path) == length:
                if (masks[last] & anchor_bit) and path[1] < path[-1]:
                    return tuple(path)
                return None
            for w in adj[last]:
                if w > anchor and not (used >> w) & 1:
                    path.append(w)
                    hit = extend(w, used | (1 << w))
                    if hit is not None:
                        return hit
                    path.pop()
            return None

        found = extend(anchor, anchor_bit)
        if found is not None:
            return Cycle(found)
    return None


def cycle_spectrum(g: Graph, max_len: int) -> CycleSpectrum:
    """Exactly the set of cycle lengths <= max_len, with one witness each."""
    if max_len > g.n:
        raise PreconditionFailed(f"max_len={max_len} exceeds vertex count {g.n}")
    witnesses: dict[int, Cycle] = {}
    want = max(0, max_len - 2)
    for vs in _cycles_upto(g, max_len):
        ln = len(vs)
        if ln not in witnesses:
            witnesses[ln] = Cycle(vs)
            if len(witnesses) == want:
                break
    return CycleSpectrum(
        lengths=frozenset(witnesses),
        witnesses=tuple(sorted(witnesses.items())),
    )


def power_of_two_cycle(g: Graph) -> tuple[Cycle, int] | None:
    """A cycle of length 2^k with the smallest k >= 2, or None."""
    k = 2
    while (1 << k) <= g.n:
        hit = has_cycle_of_length(g, 1 << k)
        if hit is not None:
            return hit, k
        k += 1
    return None


def triangulation_status(g: Graph, edge: tuple[int, int]) -> TriangulationStatus:
    """Triangle count of an edge and, when unique, its detour vertex."""
    u, v = edge
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise PreconditionFailed(f"({u}, {v}) is not an edge")
    common = g.neighbor_masks[u] & g.neighbor_masks[v]
    count = common.bit_count()
    detour = common.bit_length() - 1 if count == 1 else None
    return TriangulationStatus((u, v), count, detour)
