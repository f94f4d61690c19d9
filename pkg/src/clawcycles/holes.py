"""Hole machinery: long cycles from minimum degree, chord-splitting descent
to a chordless cycle, smallest-hole search, and the alternating marked-hole
structure used to stretch a hole one vertex at a time.

``mark_hole`` verifies rather than trusts: when the expected alternating
assignment of external triangle vertices does not exist, it raises
StructureViolation carrying the offending configuration instead of
proceeding.  Callers treat that as a reportable finding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MinDegreeTooLow, PreconditionFailed, StructureViolation, ClawFound, C4Found
from .graphs import Cycle, Graph, is_cycle_in
from .recognizers import find_c4, find_claw

__all__ = [
    "Hole",
    "MarkedHole",
    "is_hole_in",
    "long_cycle_min_degree",
    "chordless_descend",
    "smallest_hole",
    "smallest_hole_through",
    "mark_hole",
    "stretched_cycle",
]


@dataclass(frozen=True)
class Hole:
    """A chordless cycle of length at least 4."""

    cycle: Cycle

    @property
    def length(self) -> int:
        return self.cycle.length

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.cycle.vertices


@dataclass(frozen=True)
class MarkedHole:
    """An even hole with alternating marked edges and their external detours.

    ``marked[j]`` is the j-th marked edge as an ordered pair following the
    hole orientation; ``detours[j]`` is its external triangle vertex.  Marked
    edges cover every other edge of the hole, and detour vertices are
    pairwise distinct and lie off the hole.
    """

    hole: Hole
    marked: tuple[tuple[int, int], ...]
    detours: tuple[int, ...]


def _chords(g: Graph, vs: tuple[int, ...]) -> list[tuple[int, int]]:
    """Chord endpoints of a cycle, as sorted vertex pairs in lexicographic order."""
    k = len(vs)
    pos = {v: i for i, v in enumerate(vs)}
    out = []
    for i, u in enumerate(vs):
        for w in g.adj[u]:
            j = pos.get(w)
            if j is None or w < u:
                continue
            if (j - i) % k in (1, k - 1):
                continue
            out.append((u, w))
    out.sort()
    return out


def is_hole_in(g: Graph, hole: Hole) -> bool:
    """True iff the hole is a valid chordless cycle of length >= 4 in g."""
    if hole.length < 4 or not is_cycle_in(g, hole.cycle):
        return False
    return not _chords(g, hole.vertices)


def long_cycle_min_degree(g: Graph) -> Cycle:
    """A cycle of length at least min_degree + 1.

    Greedily extends a path from vertex 0, always taking the smallest
    unvisited neighbor, until the endpoint is maximal; the cycle closes at
    the endpoint's neighbor farthest back along the path.
    """
    delta = g.min_degree()
    if delta < 2:
        raise MinDegreeTooLow(f"minimum degree {delta} < 2")
    path = [0]
    on_path = {0}
    while True:
        tail = path[-1]
        nxt = next((w for w in g.adj[tail] if w not in on_path), None)
        if nxt is None:
            break
        path.append(nxt)
        on_path.add(nxt)
    tail = path[-1]
    index = {v: i for i, v in enumerate(path)}
    first = min(index[w] for w in g.adj[tail])
    return Cycle(tuple(path[first:]))


def _split_at_chord(vs: tuple[int, ...], i: int, j: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # Positions i < j of the chord endpoints; the two sub-cycles share them.
    side_a = vs[i : j + 1]
    side_b = vs[j:] + vs[: i + 1]
    return side_a, side_b


def chordless_descend(g: Graph, cycle: Cycle) -> Hole | Cycle:
    """Repeatedly split at the lexicographically least chord until chordless.

    Keeps, of the two sub-cycles, the one of length >= 5 when exactly one
    qualifies; when both or neither qualify, the shorter one (ties broken by
    the lexicographically smaller vertex set).  Returns a Hole when the
    chordless result has length >= 4, otherwise the triangle as a Cycle.
    """
    if not is_cycle_in(g, cycle):
        raise PreconditionFailed(f"not a valid cycle: {cycle.vertices}")
    vs = cycle.vertices
    while True:
        chords = _chords(g, vs)
        if not chords:
            return Hole(Cycle(vs)) if len(vs) >= 4 else Cycle(vs)
        u, w = chords[0]
        pos = {v: i for i, v in enumerate(vs)}
        i, j = sorted((pos[u], pos[w]))
        a, b = _split_at_chord(vs, i, j)
        a_ok, b_ok = len(a) >= 5, len(b) >= 5
        if a_ok != b_ok:
            vs = a if a_ok else b
        else:
            key_a = (len(a), tuple(sorted(a)))
            key_b = (len(b), tuple(sorted(b)))
            vs = a if key_a <= key_b else b


def _chordless_cycles_of_length(g: Graph, length: int, through: int | None = None):
    """Chordless cycles of an exact length, each yielded once, deterministic order.

    A partial path is extended only by vertices non-adjacent to every earlier
    path vertex except the predecessor; the closing vertex must additionally
    be adjacent to the anchor.  With ``through`` set, the anchor is that
    vertex and other cycle vertices are unrestricted; otherwise anchors
    ascend and carry only larger vertices.
    """
    if g.n < length:
        return
    masks = g.neighbor_masks
    adj = g.adj
    anchors = [through] if through is not None else range(g.n)
    for anchor in anchors:
        anchor_bit = 1 << anchor
        floor = -1 if through is not None else anchor
        path = [anchor]

        def extend(last: int, used: int, blocked: int):
            # blocked: vertices adjacent to path[1:-1]; adjacency back to the
            # anchor is tracked separately so the closing step can use it.
            depth = len(path)
            closing = depth == length - 1
            for w in adj[last]:
                if w <= floor or w == anchor or (used >> w) & 1:
                    continue
                wbit = 1 << w
                if blocked & wbit:
                    continue
                adj_anchor = (masks[w] & anchor_bit) != 0
                if closing:
                    if adj_anchor and path[1] < w:
                        yield tuple(path) + (w,)
                    continue
                if adj_anchor and depth >= 2:
                    continue
                path.append(w)
                child_blocked = blocked | masks[last] if depth >= 2 else blocked
                yield from extend(w, used | wbit, child_blocked)
                path.pop()

        yield from extend(anchor, anchor_bit, 0)


def smallest_hole(g: Graph) -> Hole | None:
    """A hole of minimum length (>= 4), or None when every such cycle has a chord."""
    for length in range(4, g.n + 1):
        for vs in _chordless_cycles_of_length(g, length):
            return Hole(Cycle(vs))
    return None


def smallest_hole_through(g: Graph, v: int) -> Hole | None:
    """A minimum-length hole containing ``v``, or None."""
    if not 0 <= v < g.n:
        raise PreconditionFailed(f"vertex {v} out of range")
    for length in range(4, g.n + 1):
        for vs in _chordless_cycles_of_length(g, length, through=v):
            return Hole(Cycle(vs))
    return None


def _external_triangle_vertices(g: Graph, on_hole: int, x: int, y: int) -> list[int]:
    common = g.neighbor_masks[x] & g.neighbor_masks[y] & ~on_hole
    out = []
    while common:
        low = common & -common
        out.append(low.bit_length() - 1)
        common ^= low
    return out


def mark_hole(g: Graph, hole: Hole) -> MarkedHole:
    """Alternating marked edges of a smallest hole, with distinct external detours.

    Preconditions: g claw-free with minimum degree >= 3 and no C4 subgraph,
    ``hole`` a valid hole of g with length >= 5.  Marked edges are chosen by
    backtracking over both parities and over each marked edge's external
    common-neighbor candidates; the first consistent assignment in
    deterministic order wins.  If the hole has odd length, or no consistent
    assignment exists, raises StructureViolation with the evidence.
    """
    witness = find_claw(g)
    if witness is not None:
        raise ClawFound(witness)
    if g.min_degree() < 3:
        raise MinDegreeTooLow(f"minimum degree {g.min_degree()} < 3")
    c4 = find_c4(g)
    if c4 is not None:
        raise C4Found(c4)
    if hole.length < 5 or not is_hole_in(g, hole):
        raise PreconditionFailed(f"not a hole of length >= 5: {hole.vertices}")

    vs = hole.vertices
    s = len(vs)
    on_hole = 0
    for v in vs:
        on_hole |= 1 << v
    if s % 2 == 1:
        raise StructureViolation(
            f"hole length {s} is odd; no alternating marked structure exists",
            evidence={"hole": vs},
        )

    candidate_sets: dict[int, list[int]] = {}
    for i in range(s):
        x, y = vs[i], vs[(i + 1) % s]
        candidate_sets[i] = _external_triangle_vertices(g, on_hole, x, y)

    for parity in (0, 1):
        positions = tuple(range(parity, s, 2))
        chosen: list[int] = []
        used: set[int] = set()

        def assign(idx: int) -> bool:
            if idx == len(positions):
                return True
            for z in candidate_sets[positions[idx]]:
                if z not in used:
                    used.add(z)
                    chosen.append(z)
                    if assign(idx + 1):
                        return True
                    chosen.pop()
                    used.remove(z)
            return False

        if assign(0):
            marked = tuple((vs[i], vs[(i + 1) % s]) for i in positions)
            return MarkedHole(hole=hole, marked=marked, detours=tuple(chosen))

    raise StructureViolation(
        "no alternating assignment of distinct external detours exists",
        evidence={"hole": vs, "candidates": candidate_sets},
    )


def stretched_cycle(marked_hole: MarkedHole, extra: int) -> Cycle:
    """The hole lengthened by detouring through the first ``extra`` marked edges."""
    if not 0 <= extra <= len(marked_hole.marked):
        raise PreconditionFailed(
            f"extra={extra} outside 0..{len(marked_hole.marked)}"
        )
    vs = marked_hole.hole.vertices
    detour_after = {
        edge[0]: marked_hole.detours[j]
        for j, edge in enumerate(marked_hole.marked)
        if j < extra
    }
    out: list[int] = []
    for v in vs:
        out.append(v)
        z = detour_after.get(v)
        if z is not None:
            out.append(z)
    return Cycle(tuple(out))
