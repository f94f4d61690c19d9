"""Constructive witness engines.

``two_power_or_triple_cycle`` produces a cycle of length 2^k or 3*2^k in any
claw-free graph of minimum degree 3: a 4-cycle if one exists, otherwise a
smallest hole stretched edge by edge through its marked detour vertices
until the length hits a target in [s, 3s/2].

``two_power_cycle_through`` produces a power-of-two cycle through a given
non-cut vertex of a 4-regular claw-free C4-free graph, stretching the
shortest hole through the vertex across [s, 2s].

``pow2_window_check`` decides, for a cubic graph, whether some cycle length
l admits an exponent k with 2l <= 2^k < 3l.  Absence on a connected cubic
graph is a reportable research finding, never asserted impossible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    C4Found,
    ClawFound,
    CutVertexFound,
    MinDegreeTooLow,
    NotCubic,
    PreconditionFailed,
    StructureViolation,
    TargetMissing,
)
from .graphs import Cycle, Graph, cut_vertices, is_cycle_in, shortest_path
from .holes import Hole, is_hole_in, mark_hole, smallest_hole, smallest_hole_through, stretched_cycle
from .recognizers import find_c4, find_claw, has_cycle_of_length

__all__ = [
    "Form",
    "CycleWitness",
    "target_in_interval",
    "pow2_in_interval",
    "two_power_or_triple_cycle",
    "two_power_cycle_through",
    "pow2_window_check",
]


class Form(Enum):
    POW2 = "pow2"
    THREE_POW2 = "three_pow2"


@dataclass(frozen=True)
class CycleWitness:
    """A cycle whose length is 2^k (POW2) or 3*2^k (THREE_POW2)."""

    cycle: Cycle
    k: int
    form: Form

    @property
    def length(self) -> int:
        return self.cycle.length


def target_in_interval(lo: int, hi: int) -> tuple[int, Form, int] | None:
    """Smallest element of {2^k : k >= 2} | {3*2^k : k >= 1} in [lo, hi], or None."""
    if not 3 <= lo <= hi:
        raise PreconditionFailed(f"need 3 <= lo <= hi, got [{lo}, {hi}]")
    p = max(4, 1 << (lo - 1).bit_length())
    c = (lo + 2) // 3
    t = 3 * max(2, 1 << (c - 1).bit_length())
    best: tuple[int, Form, int] | None = None
    if p <= hi:
        best = (p, Form.POW2, p.bit_length() - 1)
    if t <= hi and (best is None or t < best[0]):
        best = (t, Form.THREE_POW2, (t // 3).bit_length() - 1)
    return best


def pow2_in_interval(lo: int, hi: int) -> int | None:
    """Smallest exponent k >= 2 with lo <= 2^k <= hi, or None."""
    if lo < 1:
        raise PreconditionFailed(f"lo must be positive, got {lo}")
    p = max(4, 1 << (lo - 1).bit_length())
    return p.bit_length() - 1 if p <= hi else None


def two_power_or_triple_cycle(g: Graph) -> CycleWitness:
    """A valid cycle of g whose length is 2^k or 3*2^k, for claw-free delta >= 3.

    Prefers the cheap 4-cycle branch; otherwise marks a smallest hole (length
    s, even) and detours through target - s marked edges, lowest index
    first, where target is the smallest qualifying value in [s, 3s/2].
    Propagates StructureViolation from the marking step as a finding.
    """
    if g.min_degree() < 3:
        raise MinDegreeTooLow(f"minimum degree {g.min_degree()} < 3")
    witness = find_claw(g)
    if witness is not None:
        raise ClawFound(witness)
    c4 = find_c4(g)
    if c4 is not None:
        return CycleWitness(cycle=c4, k=2, form=Form.POW2)
    hole = smallest_hole(g)
    if hole is None:
        # A C4-free graph of minimum degree 3 always has a hole of length
        # at least 5; reaching this line would falsify that.
        raise StructureViolation("C4-free graph with min degree 3 has no hole", evidence=g)
    marked = mark_hole(g, hole)
    s = hole.length
    target = target_in_interval(s, (3 * s) // 2)
    if target is None:
        raise TargetMissing(f"no target in [{s}, {(3 * s) // 2}]")
    value, form, k = target
    cycle = stretched_cycle(marked, value - s)
    assert cycle.length == value and is_cycle_in(g, cycle)
    return CycleWitness(cycle=cycle, k=k, form=form)


def _disjoint_adjacent_pairs(g: Graph, v: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """The two disjoint edges a claw-free C4-free 4-neighborhood must induce."""
    nbrs = g.adj[v]
    masks = g.neighbor_masks
    inner = [
        (a, b)
        for i, a in enumerate(nbrs)
        for b in nbrs[i + 1 :]
        if (masks[a] >> b) & 1
    ]
    for i, e1 in enumerate(inner):
        for e2 in inner[i + 1 :]:
            if set(e1).isdisjoint(e2):
                return e1, e2
    raise StructureViolation(
        f"neighborhood of {v} induces no two disjoint edges",
        evidence={"vertex": v, "neighbors": nbrs, "edges": inner},
    )


def _unique_external_detours(g: Graph, cycle: Cycle) -> list[int]:
    """Per-edge unique triangle vertices, all off the cycle and pairwise distinct."""
    on_cycle = 0
    for v in cycle.vertices:
        on_cycle |= 1 << v
    masks = g.neighbor_masks
    detours: list[int] = []
    for x, y in cycle.edges():
        common = masks[x] & masks[y]
        if common.bit_count() != 1:
            raise StructureViolation(
                f"edge ({x}, {y}) lies in {common.bit_count()} triangles, expected 1",
                evidence={"edge": (x, y), "cycle": cycle.vertices},
            )
        z = common.bit_length() - 1
        if (on_cycle >> z) & 1:
            raise StructureViolation(
                f"triangle vertex {z} of edge ({x}, {y}) lies on the cycle",
                evidence={"edge": (x, y), "cycle": cycle.vertices},
            )
        detours.append(z)
    if len(set(detours)) != len(detours):
        raise StructureViolation(
            "triangle vertices of distinct cycle edges collide",
            evidence={"cycle": cycle.vertices, "detours": detours},
        )
    return detours


def two_power_cycle_through(g: Graph, v: int) -> CycleWitness:
    """A power-of-two cycle (k >= 3) through a non-cut vertex.

    Requires claw-free, minimum degree 4, no C4; such a graph is forced to be
    4-regular.  Builds the shortest hole through v from the shortest path in
    g - v between cross endpoints of the two disjoint neighborhood edges,
    re-validates minimality, then stretches through unique triangle detours
    to the smallest power of two in [s, 2s].
    """
    if not 0 <= v < g.n:
        raise PreconditionFailed(f"vertex {v} out of range")
    if g.min_degree() < 4:
        raise MinDegreeTooLow(f"minimum degree {g.min_degree()} < 4")
    witness = find_claw(g)
    if witness is not None:
        raise ClawFound(witness)
    c4 = find_c4(g)
    if c4 is not None:
        raise C4Found(c4)
    # Claw-free + C4-free caps every degree at 4 (a degree-5 vertex would
    # carry a 2-edge path in its neighborhood, hence a 4-cycle).
    assert g.max_degree() == 4
    if v in cut_vertices(g):
        raise CutVertexFound(v)

    (w, u), (x, y) = _disjoint_adjacent_pairs(g, v)
    forbidden = frozenset((v,))
    candidates = [
        shortest_path(g, w, y, forbidden),
        shortest_path(g, w, x, forbidden),
        shortest_path(g, x, u, forbidden),
        shortest_path(g, y, u, forbidden),
    ]
    assert all(p is not None for p in candidates)
    best = min(candidates, key=lambda p: p.length)  # first minimum wins ties
    cycle = Cycle((v,) + best.vertices)
    s = cycle.length
    assert s >= 5
    hole = Hole(cycle)
    if not is_hole_in(g, hole):
        raise StructureViolation(
            "closed shortest path is not chordless", evidence={"cycle": cycle.vertices}
        )
    reference = smallest_hole_through(g, v)
    if reference is None or reference.length != s:
        raise StructureViolation(
            f"constructed hole length {s} is not minimal through {v}",
            evidence={"cycle": cycle.vertices, "smallest": reference},
        )

    detours = _unique_external_detours(g, cycle)
    k = pow2_in_interval(s, 2 * s)
    assert k is not None and k >= 3
    extra = (1 << k) - s
    vs = cycle.vertices
    walk: list[int] = []
    for i, a in enumerate(vs):
        walk.append(a)
        if i < extra:
            walk.append(detours[i])
    out = Cycle(tuple(walk))
    assert out.length == (1 << k) and is_cycle_in(g, out) and v in out.vertices
    return CycleWitness(cycle=out, k=k, form=Form.POW2)


def pow2_window_check(g: Graph) -> tuple[int, int] | None:
    """Smallest cycle length l of a cubic graph with 2l <= 2^k < 3l for some k.

    Returns (l, k) with the smallest qualifying l and its smallest exponent,
    or None when no cycle length has a power of two in its window.  Lengths
    are tested directly with the exact per-length search, ascending.
    """
    bad = next((v for v in range(g.n) if g.degree(v) != 3), None)
    if bad is not None:
        raise NotCubic(f"vertex {bad} has degree {g.degree(bad)}, expected 3")
    for length in range(3, g.n + 1):
        k = pow2_in_interval(2 * length, 3 * length - 1)
        if k is None:
            continue
        if has_cycle_of_length(g, length) is not None:
            return length, k
    return None
