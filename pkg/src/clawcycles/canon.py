"""Canonical labeling and isomorphism certificates for small graphs.

Exact canonical form by individualization-refinement: vertices are first
partitioned by a label-invariant key (degree, neighbor degrees, BFS level
profile), the partition is refined to equitability, and remaining ambiguity
is resolved by branching on every vertex of the first non-singleton cell.
The certificate is the lexicographically smallest graph6 line over all
discrete partitions reached, so two graphs receive equal certificates
exactly when they are isomorphic.  Exponential in the worst case; intended
for n up to a few dozen.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph6 import parse_graph6, write_graph6
from .graphs import Graph

__all__ = ["CanonicalCert", "canonical_cert", "canonical_form", "are_isomorphic"]


@dataclass(frozen=True)
class CanonicalCert:
    """Label-invariant certificate: the canonical graph6 line."""

    graph6: str


def _invariant_key(g: Graph, v: int) -> tuple:
    """Label-invariant seed color: degree, sorted neighbor degrees, BFS profile."""
    degs = g.degrees()
    level = [-1] * g.n
    level[v] = 0
    frontier = [v]
    profile = []
    depth = 0
    while frontier:
        inner = 0
        masks = g.neighbor_masks
        fmask = 0
        for u in frontier:
            fmask |= 1 << u
        for u in frontier:
            inner += (masks[u] & fmask).bit_count()
        profile.append((len(frontier), inner // 2))
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if level[w] == -1:
                    level[w] = depth + 1
                    nxt.append(w)
        frontier = nxt
        depth += 1
    return (degs[v], tuple(sorted(degs[w] for w in g.adj[v])), tuple(profile))


def _refine(masks: tuple[int, ...], partition: list[list[int]]) -> list[list[int]]:
    """Split cells by per-cell neighbor counts until equitable.

    Sub-cells of a split cell are ordered by their signature, which is a
    function of the partition structure only, so refinement commutes with
    isomorphism.
    """
    part = [list(c) for c in partition]
    while True:
        cell_masks = []
        for cell in part:
            m = 0
            for v in cell:
                m |= 1 << v
            cell_masks.append(m)
        new_part: list[list[int]] = []
        changed = False
        for cell in part:
            if len(cell) == 1:
                new_part.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple((masks[v] & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_part.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_part.append(groups[sig])
        part = new_part
        if not changed:
            return part


def _code_for(g: Graph, order: list[int]) -> str:
    """graph6 line of g relabeled so that order[i] becomes vertex i."""
    n = g.n
    position = [0] * n
    for new, old in enumerate(order):
        position[old] = new
    masks = [0] * n
    for u in range(n):
        pu = position[u]
        row = g.neighbor_masks[u]
        while row:
            low = row & -row
            row ^= low
            masks[pu] |= 1 << position[low.bit_length() - 1]
    return write_graph6(Graph._from_masks(n, masks))


def canonical_cert(g: Graph) -> CanonicalCert:
    """Certificate string equal for two graphs iff they are isomorphic."""
    if g.n == 0:
        return CanonicalCert(write_graph6(g))
    keys = {v: _invariant_key(g, v) for v in range(g.n)}
    initial: dict[tuple, list[int]] = {}
    for v in range(g.n):
        initial.setdefault(keys[v], []).append(v)
    partition = [initial[k] for k in sorted(initial)]
    masks = g.neighbor_masks
    best: list[str | None] = [None]

    def search(part: list[list[int]]) -> None:
        part = _refine(masks, part)
        target = next((i for i, c in enumerate(part) if len(c) > 1), None)
        if target is None:
            code = _code_for(g, [c[0] for c in part])
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        cell = part[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(part[:target] + [[v], rest] + part[target + 1 :])

    search(partition)
    assert best[0] is not None
    return CanonicalCert(best[0])


def canonical_form(g: Graph) -> Graph:
    """The canonically labeled copy of g."""
    return parse_graph6(canonical_cert(g).graph6)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_cert(g) == canonical_cert(h)
