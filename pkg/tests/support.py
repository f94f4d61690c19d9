"""Shared helpers for the test suite.

The oracle functions here are deliberately independent of the library's own
algorithms: cycle spectra come from permutation enumeration, holes from
arrangement filtering, cut vertices from the removal definition, and so on.
They exist so library results can be checked against a second route.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from clawcycles import Graph, graph_from_edges
from clawcycles.fixtures import line_graph, petersen


# ---------------------------------------------------------------------------
# Brute-force oracles


def oracle_cycle_lengths(g: Graph, max_len: int) -> set[int]:
    """Cycle lengths by exhaustive enumeration of cyclic vertex arrangements."""
    found: set[int] = set()
    for length in range(3, max_len + 1):
        if _has_arrangement(g, length, chordless=False):
            found.add(length)
    return found


def oracle_smallest_hole_length(g: Graph) -> int | None:
    """Minimum chordless-cycle length >= 4 by exhaustive arrangement search."""
    for length in range(4, g.n + 1):
        if _has_arrangement(g, length, chordless=True):
            return length
    return None


def oracle_smallest_hole_through_length(g: Graph, v: int) -> int | None:
    """Minimum chordless-cycle length >= 4 over cycles containing ``v``."""
    for length in range(4, g.n + 1):
        if _has_arrangement(g, length, chordless=True, must_contain=v):
            return length
    return None


def _has_arrangement(g: Graph, length: int, chordless: bool, must_contain: int | None = None) -> bool:
    for subset in combinations(range(g.n), length):
        if must_contain is not None and must_contain not in subset:
            continue
        first = subset[0]
        rest = subset[1:]
        for perm in permutations(rest):
            if perm[0] > perm[-1]:
                continue  # each cyclic order once per direction
            cyc = (first,) + perm
            if not all(g.has_edge(cyc[i], cyc[(i + 1) % length]) for i in range(length)):
                continue
            if chordless:
                pairs = combinations(range(length), 2)
                if any(
                    g.has_edge(cyc[i], cyc[j])
                    for i, j in pairs
                    if (j - i) % length not in (1, length - 1)
                ):
                    continue
            return True
    return False


def oracle_has_claw(g: Graph) -> bool:
    """Induced-claw existence by scanning all 4-subsets of vertices."""
    for quad in combinations(range(g.n), 4):
        for center in quad:
            leaves = [v for v in quad if v != center]
            if all(g.has_edge(center, leaf) for leaf in leaves) and not any(
                g.has_edge(a, b) for a, b in combinations(leaves, 2)
            ):
                return True
    return False


def oracle_cut_vertices(g: Graph) -> set[int]:
    """Cut vertices straight from the definition: removal adds components."""

    def component_count(skip: int | None) -> int:
        seen = set()
        count = 0
        for start in range(g.n):
            if start == skip or start in seen:
                continue
            count += 1
            stack = [start]
            seen.add(start)
            while stack:
                u = stack.pop()
                for w in g.adj[u]:
                    if w != skip and w not in seen:
                        seen.add(w)
                        stack.append(w)
        return count

    base = component_count(None)
    return {v for v in range(g.n) if component_count(v) > base}


def oracle_shortest_distance(g: Graph, u: int, v: int, forbidden: frozenset[int] = frozenset()) -> int | None:
    """d(u, v) by exhaustive simple-path enumeration (small n only)."""
    best: list[int | None] = [None]

    def walk(cur: int, seen: set[int], steps: int) -> None:
        if cur == v:
            if best[0] is None or steps < best[0]:
                best[0] = steps
            return
        for w in g.adj[cur]:
            if w not in seen and w not in forbidden:
                walk(w, seen | {w}, steps + 1)

    if u == v:
        return 0
    walk(u, {u}, 0)
    return best[0]


def labeled_cubic_graphs(n: int):
    """Every labeled cubic graph on n vertices, by plain backtracking.

    No symmetry pruning at all; this is the reference stream the
    isomorph-free enumerator is validated against.
    """
    masks = [0] * n
    deg = [0] * n

    def complete(v: int):
        if v == n:
            yield Graph._from_masks(n, masks)
            return
        need = 3 - deg[v]
        candidates = [w for w in range(v + 1, n) if deg[w] < 3]
        for chosen in combinations(candidates, need):
            for w in chosen:
                masks[v] |= 1 << w
                masks[w] |= 1 << v
                deg[w] += 1
            deg[v] += need
            yield from complete(v + 1)
            for w in chosen:
                masks[v] &= ~(1 << w)
                masks[w] &= ~(1 << v)
                deg[w] -= 1
            deg[v] -= need

    yield from complete(0)


def automorphism_count(g: Graph) -> int:
    """|Aut(g)| by brute force over all vertex permutations."""
    edges = set(g.edges())
    count = 0
    for perm in permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in edges for u, v in edges):
            count += 1
    return count


def min_code_over_all_permutations(g: Graph) -> str:
    """Fully independent canonical form: minimum graph6 over every relabeling."""
    from clawcycles import write_graph6

    best = None
    for perm in permutations(range(g.n)):
        h = graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        code = write_graph6(h)
        if best is None or code < best:
            best = code
    return best


# ---------------------------------------------------------------------------
# Graph families


def relabeled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def random_graph(n: int, m: int, rng: random.Random) -> Graph:
    edges = rng.sample(list(combinations(range(n), 2)), m)
    return graph_from_edges(n, edges)


def random_min_degree3_graph(n: int, m: int, rng: random.Random, require_connected: bool = True) -> Graph | None:
    from clawcycles import is_connected

    for _ in range(200):
        g = random_graph(n, m, rng)
        if g.min_degree() >= 3 and (not require_connected or is_connected(g)):
            return g
    return None


def random_clawfree_min_degree3(rng: random.Random, max_n: int = 20) -> Graph:
    """Random connected claw-free graph with min degree >= 3 and n <= max_n.

    Line graphs of random graphs with min degree 3 are claw-free with min
    degree >= 4; expansions of small cubic graphs contribute the C4-free,
    triangle-rich side of the family.  Labels are shuffled afterwards.
    """
    from clawcycles import expand, enumerate_cubic_graphs

    if rng.random() < 0.3:
        base_n = rng.choice((4, 6))
        reps = list(enumerate_cubic_graphs(base_n, connected_only=True))
        g = expand(relabeled(rng.choice(reps), rng))
    else:
        while True:
            nh = rng.randrange(5, 10)
            m = rng.randrange(max(8, (3 * nh + 1) // 2), min(max_n, nh * (nh - 1) // 2) + 1)
            h = random_min_degree3_graph(nh, m, rng)
            if h is not None:
                g = line_graph(h)
                break
    return relabeled(g, rng)


def bridged_double_petersen() -> Graph:
    """Cubic girth-5 graph with a bridge: two Petersen copies, one edge each
    replaced by a hook to a shared two-vertex bridge."""
    P = petersen()
    edges = []
    for copy in range(2):
        off = 10 * copy
        for u, v in P.edges():
            if (u, v) != (0, 1):
                edges.append((u + off, v + off))
    b1, b2 = 20, 21
    edges += [(b1, 0), (b1, 1), (b2, 10), (b2, 11), (b1, b2)]
    return graph_from_edges(22, edges)


def cut_vertex_line_graph() -> Graph:
    """4-regular claw-free C4-free graph with a cut vertex (the bridge edge)."""
    return line_graph(bridged_double_petersen())
