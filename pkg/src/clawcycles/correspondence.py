"""The bijection between simple cubic graphs and cubic claw-free C4-free
graphs: every such graph splits uniquely into vertex-disjoint triangles
joined by a perfect matching, contraction shrinks each triangle to a vertex,
and expansion replaces each vertex by a triangle.

Expansion fixes labels concretely: vertex i becomes the triangle
{3i, 3i+1, 3i+2}, and 3i+r is matched toward the r-th smallest neighbor of
i.  Contraction cannot recover labels, so round trips are exact only up to
isomorphism in general (label-exact for graphs built by ``expand``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    C4Found,
    ClawFound,
    MultiLink,
    NoTriangleAt,
    NotCubic,
    PreconditionFailed,
    StructureViolation,
)
from .graphs import Cycle, Graph, graph_from_edges, is_cycle_in
from .recognizers import find_c4, find_claw

__all__ = [
    "TriangleDecomposition",
    "ContractionResult",
    "triangle_decomposition",
    "contract",
    "expand",
    "lift_cycle",
]


@dataclass(frozen=True)
class TriangleDecomposition:
    """Partition into triangles plus the inter-triangle perfect matching."""

    triangles: tuple[tuple[int, int, int], ...]
    matching: tuple[tuple[int, int], ...]
    triangle_of: tuple[int, ...]


@dataclass(frozen=True)
class ContractionResult:
    """The cubic quotient graph together with the decomposition that produced it."""

    quotient: Graph
    decomposition: TriangleDecomposition


def _require_cubic(g: Graph) -> None:
    bad = next((v for v in range(g.n) if g.degree(v) != 3), None)
    if bad is not None:
        raise NotCubic(f"vertex {bad} has degree {g.degree(bad)}, expected 3")


def triangle_decomposition(g: Graph) -> TriangleDecomposition:
    """Unique triangle partition of a cubic claw-free C4-free graph.

    Raises NotCubic / ClawFound / C4Found when the preconditions fail, and
    NoTriangleAt if a vertex lies in no triangle, which the preceding gates
    are supposed to make impossible; its appearance is a falsification
    report, not an input error.
    """
    _require_cubic(g)
    witness = find_claw(g)
    if witness is not None:
        raise ClawFound(witness)
    c4 = find_c4(g)
    if c4 is not None:
        raise C4Found(c4)

    masks = g.neighbor_masks
    triangle_of = [-1] * g.n
    triangles: list[tuple[int, int, int]] = []
    for v in range(g.n):
        if triangle_of[v] != -1:
            continue
        nbrs = g.adj[v]
        inner = [(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1 :] if (masks[a] >> b) & 1]
        if not inner:
            raise NoTriangleAt(v, evidence={"neighbors": nbrs})
        if len(inner) > 1:
            # Two edges among three neighbors give a 4-cycle through v;
            # unreachable once find_c4 has passed.
            raise StructureViolation(
                f"vertex {v} lies in multiple triangles", evidence={"edges": inner}
            )
        a, b = inner[0]
        tri = tuple(sorted((v, a, b)))
        idx = len(triangles)
        for t in tri:
            if triangle_of[t] != -1:
                raise StructureViolation(
                    f"vertex {t} claimed by two triangles", evidence={"triangle": tri}
                )
            triangle_of[t] = idx
        triangles.append(tri)  # type: ignore[arg-type]

    tri_masks = []
    for tri in triangles:
        m = 0
        for t in tri:
            m |= 1 << t
        tri_masks.append(m)
    matching = []
    for v in range(g.n):
        outside = masks[v] & ~tri_masks[triangle_of[v]]
        if outside.bit_count() != 1:
            raise StructureViolation(
                f"vertex {v} has {outside.bit_count()} matching edges",
                evidence={"vertex": v},
            )
        w = outside.bit_length() - 1
        if v < w:
            matching.append((v, w))
    return TriangleDecomposition(
        triangles=tuple(triangles),
        matching=tuple(sorted(matching)),
        triangle_of=tuple(triangle_of),
    )


def contract(g: Graph) -> ContractionResult:
    """Shrink each triangle of the decomposition to a single quotient vertex.

    The quotient has one vertex per triangle (in discovery order, i.e. sorted
    by smallest member) and an edge wherever a matching edge joins two
    triangles.  MultiLink flags a doubly-linked triangle pair, which cannot
    occur for C4-free input.
    """
    dec = triangle_decomposition(g)
    k = len(dec.triangles)
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for u, w in dec.matching:
        pair = tuple(sorted((dec.triangle_of[u], dec.triangle_of[w])))
        if pair in seen:
            raise MultiLink(pair, evidence={"matching_edge": (u, w)})
        seen.add(pair)
        edges.append(pair)  # type: ignore[arg-type]
    quotient = graph_from_edges(k, edges)
    assert all(quotient.degree(v) == 3 for v in range(k))
    return ContractionResult(quotient=quotient, decomposition=dec)


def expand(h: Graph) -> Graph:
    """Replace each vertex of a simple cubic graph by a triangle.

    Vertex i becomes {3i, 3i+1, 3i+2}; for each edge {i, j}, the matching
    edge joins 3i+r to 3j+r' where r is j's rank among i's sorted neighbors
    and r' is i's rank among j's.  The result is cubic, claw-free, and
    C4-free.
    """
    _require_cubic(h)
    edges: list[tuple[int, int]] = []
    for i in range(h.n):
        base = 3 * i
        edges.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)])
        for r, j in enumerate(h.adj[i]):
            if i < j:
                rp = h.adj[j].index(i)
                edges.append((base + r, 3 * j + rp))
    return graph_from_edges(3 * h.n, edges)


def lift_cycle(result: ContractionResult, cycle: Cycle) -> list[Cycle]:
    """Lift a length-k quotient cycle to cycles of lengths 2k, 2k+1, ..., 3k.

    The base traversal crosses, per quotient edge, the matching edge plus one
    triangle edge; each increment additionally detours through one more
    third-triangle vertex, in traversal order.
    """
    quotient = result.quotient
    dec = result.decomposition
    if not is_cycle_in(quotient, cycle):
        raise PreconditionFailed(f"not a cycle of the quotient: {cycle.vertices}")

    qs = cycle.vertices
    k = len(qs)
    # Matching edge between each consecutive triangle pair, oriented along
    # the traversal: link[t] = (exit vertex in triangle qs[t], entry vertex
    # in triangle qs[t+1]).
    by_pair: dict[tuple[int, int], tuple[int, int]] = {}
    for u, w in dec.matching:
        by_pair[(dec.triangle_of[u], dec.triangle_of[w])] = (u, w)
        by_pair[(dec.triangle_of[w], dec.triangle_of[u])] = (w, u)
    links = [by_pair[(qs[t], qs[(t + 1) % k])] for t in range(k)]

    out: list[Cycle] = []
    for extra in range(k + 1):
        walk: list[int] = []
        for t in range(k):
            entry = links[t - 1][1]
            exit_ = links[t][0]
            assert entry != exit_
            walk.append(entry)
            if t < extra:
                tri = dec.triangles[qs[t]]
                third = next(x for x in tri if x != entry and x != exit_)
                walk.append(third)
            walk.append(exit_)
        out.append(Cycle(tuple(walk)))
    return out
