"""Exhaustive isomorph-free generation of small graph families.

Both enumerators run degree-constrained backtracking over adjacency
completion in lexicographic order: vertices are completed in ascending
label order, and a vertex's neighbors among the higher labels are chosen
per equivalence class of identical adjacency columns, always taking a
prefix of each class.  The lex-maximal labeling of every isomorphism class
survives that rule, so no class is lost; duplicates are removed at the end
via canonical certificates.

With the prefix rule, a vertex v > 0 that reaches its own completion with
degree zero can never be connected back to vertex 0, so connected-only
generation prunes exactly there.
"""

from __future__ import annotations

from typing import Iterator

from .canon import canonical_cert
from .errors import PreconditionFailed
from .graphs import Graph

__all__ = ["enumerate_cubic_graphs", "clawfree_min_degree3_graphs"]


def _column_classes(masks: list[int], candidates: list[int]) -> list[list[int]]:
    """Group candidates (ascending) by identical adjacency columns."""
    groups: dict[int, list[int]] = {}
    for w in candidates:
        groups.setdefault(masks[w], []).append(w)
    return [groups[key] for key in sorted(groups, key=lambda k: groups[k][0])]


def _count_vectors(sizes: list[int], need: int) -> Iterator[tuple[int, ...]]:
    """All ways to take ``need`` items as per-class prefix counts."""
    if not sizes:
        if need == 0:
            yield ()
        return
    first, rest = sizes[0], sizes[1:]
    tail_capacity = sum(rest)
    lo = max(0, need - tail_capacity)
    for c in range(lo, min(first, need) + 1):
        for tail in _count_vectors(rest, need - c):
            yield (c,) + tail


def enumerate_cubic_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of (connected) cubic graphs on n vertices."""
    if n % 2 == 1:
        raise PreconditionFailed(f"no cubic graph on an odd number of vertices ({n})")
    if n < 4:
        raise PreconditionFailed(f"cubic graphs need n >= 4, got {n}")
    return _generate(n, exact_degree=3, connected_only=connected_only, clawfree=False)


def clawfree_min_degree3_graphs(n: int, connected_only: bool = True, dedup: bool = True) -> Iterator[Graph]:
    """Claw-free graphs with minimum degree >= 3 on n vertices.

    With ``dedup`` the stream is isomorph-free; without it, every generated
    labeled representative is yielded (each class appears at least once),
    which is cheaper when downstream work tolerates repeats.
    """
    if n < 4:
        raise PreconditionFailed(f"min degree 3 needs n >= 4, got {n}")
    return _generate(n, exact_degree=None, connected_only=connected_only, clawfree=True, dedup=dedup)


def _generate(
    n: int,
    exact_degree: int | None,
    connected_only: bool,
    clawfree: bool,
    dedup: bool = True,
) -> Iterator[Graph]:
    min_deg = exact_degree if exact_degree is not None else 3
    # In the lex-maximal labeling of any class, vertex 0 has maximum degree,
    # so its degree caps everyone else's; for the variable-degree search the
    # cap is fixed the moment vertex 0 completes.
    cap = [exact_degree if exact_degree is not None else n - 1]
    masks = [0] * n
    deg = [0] * n
    seen: set[str] = set()

    def determined_claw_at(v: int) -> bool:
        """Any induced claw among {0..v} whose largest vertex is v."""
        # v as center: leaves among lower neighbors.
        lows = [w for w in range(v) if (masks[v] >> w) & 1]
        for i in range(len(lows)):
            a = lows[i]
            for j in range(i + 1, len(lows)):
                b = lows[j]
                if (masks[a] >> b) & 1:
                    continue
                ab = masks[a] | masks[b]
                for t in range(j + 1, len(lows)):
                    c = lows[t]
                    if not (ab >> c) & 1:
                        return True
        # v as leaf: center u < v adjacent to v, two co-leaves below v.
        for u in lows:
            others = [w for w in range(v) if w != u and (masks[u] >> w) & 1 and not (masks[v] >> w) & 1]
            for i in range(len(others)):
                a = others[i]
                for j in range(i + 1, len(others)):
                    b = others[j]
                    if not (masks[a] >> b) & 1:
                        return True
        return False

    def feasible_after(v: int) -> bool:
        incomplete = [w for w in range(v + 1, n) if deg[w] < min_deg]
        # Vertices already at the cap cannot take more; others may pair freely.
        open_count = sum(1 for w in range(v + 1, n) if deg[w] < cap[0])
        for w in incomplete:
            if min_deg - deg[w] > open_count - 1:
                return False
        return True

    def complete(v: int) -> Iterator[Graph]:
        if v == n:
            g = Graph._from_masks(n, masks)
            if dedup:
                cert = canonical_cert(g).graph6
                if cert in seen:
                    return
                seen.add(cert)
            yield g
            return
        if connected_only and v > 0 and deg[v] == 0:
            return
        # Every vertex pair involving only labels <= v is decided by now, so
        # claws whose largest vertex is v are final and independent of the
        # upcoming choice.
        if clawfree and determined_claw_at(v):
            return
        candidates = [w for w in range(v + 1, n) if deg[w] < cap[0]]
        if exact_degree is not None:
            needs = [exact_degree - deg[v]]
            if needs[0] < 0:
                return
        else:
            lo = max(0, min_deg - deg[v])
            hi = min(len(candidates), cap[0] - deg[v])
            needs = list(range(lo, hi + 1))
        classes = _column_classes(masks, candidates)
        sizes = [len(c) for c in classes]
        for need in needs:
            if need > len(candidates):
                continue
            for counts in _count_vectors(sizes, need):
                chosen = [w for cls, c in zip(classes, counts) for w in cls[:c]]
                for w in chosen:
                    masks[v] |= 1 << w
                    masks[w] |= 1 << v
                    deg[v] += 1
                    deg[w] += 1
                if v == 0 and exact_degree is None:
                    cap[0] = deg[0]
                if deg[v] >= min_deg and feasible_after(v):
                    yield from complete(v + 1)
                for w in chosen:
                    masks[v] &= ~(1 << w)
                    masks[w] &= ~(1 << v)
                    deg[v] -= 1
                    deg[w] -= 1
        if v == 0 and exact_degree is None:
            cap[0] = n - 1

    return complete(0)
