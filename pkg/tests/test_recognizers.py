from __future__ import annotations

import random

import pytest

from clawcycles import (
    PreconditionFailed,
    cycle_spectrum,
    find_c4,
    find_claw,
    girth,
    has_cycle_of_length,
    is_cycle_in,
    power_of_two_cycle,
    triangulation_status,
)
from clawcycles.fixtures import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen,
    petersen_line_graph,
    prism,
    standard_fixtures,
)

from support import cut_vertex_line_graph, oracle_cycle_lengths, oracle_has_claw, random_graph


def test_find_claw_examples():
    assert find_claw(complete_graph(4)) is None
    w = find_claw(petersen())
    assert w is not None and w.center == 0
    assert sorted(w.leaves) == [1, 4, 5]
    assert find_claw(prism()) is None


def test_find_claw_witness_is_induced():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randrange(4, 10)
        m = rng.randrange(0, n * (n - 1) // 2 + 1)
        g = random_graph(n, m, rng)
        w = find_claw(g)
        assert (w is not None) == oracle_has_claw(g)
        if w is not None:
            a, b, c = w.leaves
            assert all(g.has_edge(w.center, leaf) for leaf in w.leaves)
            assert not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c)


def test_find_c4_examples():
    hit = find_c4(complete_graph(4))
    assert hit is not None and hit.length == 4
    hit = find_c4(prism())
    assert hit is not None and is_cycle_in(prism(), hit)
    assert find_c4(petersen()) is None


def test_find_c4_matches_spectrum():
    rng = random.Random(9)
    for _ in range(100):
        n = rng.randrange(4, 9)
        m = rng.randrange(0, n * (n - 1) // 2 + 1)
        g = random_graph(n, m, rng)
        assert (find_c4(g) is not None) == (4 in oracle_cycle_lengths(g, 4))


def test_girth_examples():
    assert girth(complete_graph(4)) == 3
    assert girth(cycle_graph(5)) == 5
    assert girth(petersen()) == 5
    assert girth(path_graph(4)) is None


def test_girth_equals_min_spectrum():
    rng = random.Random(17)
    for _ in range(120):
        n = rng.randrange(3, 9)
        m = rng.randrange(0, n * (n - 1) // 2 + 1)
        g = random_graph(n, m, rng)
        lengths = oracle_cycle_lengths(g, n)
        assert girth(g) == (min(lengths) if lengths else None)


def test_has_cycle_of_length_examples():
    p = petersen()
    assert has_cycle_of_length(p, 7) is None
    eight = has_cycle_of_length(p, 8)
    assert eight is not None and eight.length == 8 and is_cycle_in(p, eight)
    four = has_cycle_of_length(complete_graph(4), 4)
    assert four is not None and four.length == 4
    with pytest.raises(PreconditionFailed):
        has_cycle_of_length(p, 2)


def test_cycle_spectrum_examples():
    assert cycle_spectrum(cycle_graph(5), 5).lengths == frozenset({5})
    assert cycle_spectrum(complete_graph(4), 4).lengths == frozenset({3, 4})
    assert cycle_spectrum(petersen(), 10).lengths == frozenset({5, 6, 8, 9})


def test_cycle_spectrum_witnesses_are_valid():
    p = petersen()
    spectrum = cycle_spectrum(p, 10)
    for length, cyc in spectrum.witnesses:
        assert cyc.length == length
        assert is_cycle_in(p, cyc)
    assert spectrum.witness(5) is not None and spectrum.witness(7) is None


def test_cycle_spectrum_respects_max_len():
    spectrum = cycle_spectrum(petersen(), 6)
    assert spectrum.lengths == frozenset({5, 6})
    with pytest.raises(PreconditionFailed):
        cycle_spectrum(petersen(), 11)


def test_spectrum_matches_permutation_oracle_on_random_graphs():
    rng = random.Random(29)
    for _ in range(40):
        n = rng.randrange(3, 8)
        m = rng.randrange(0, n * (n - 1) // 2 + 1)
        g = random_graph(n, m, rng)
        assert cycle_spectrum(g, n).lengths == frozenset(oracle_cycle_lengths(g, n))


def test_power_of_two_cycle_examples():
    cyc, k = power_of_two_cycle(complete_graph(4))
    assert k == 2 and cyc.length == 4
    cyc, k = power_of_two_cycle(petersen())
    assert k == 3 and cyc.length == 8
    assert power_of_two_cycle(cycle_graph(5)) is None


def test_triangulation_status_examples():
    k4 = complete_graph(4)
    st = triangulation_status(k4, (0, 1))
    assert st.triangle_count == 2 and st.detour is None
    st = triangulation_status(prism(), (0, 1))
    assert st.triangle_count == 1 and st.detour == 2
    st = triangulation_status(petersen(), (0, 1))
    assert st.triangle_count == 0 and st.detour is None
    with pytest.raises(PreconditionFailed):
        triangulation_status(petersen(), (0, 2))


def test_every_edge_uniquely_triangulated_in_4regular_clawfree_c4free():
    for g in (petersen_line_graph(), cut_vertex_line_graph()):
        assert find_claw(g) is None and find_c4(g) is None
        assert set(g.degrees()) == {4}
        for edge in g.edges():
            st = triangulation_status(g, edge)
            assert st.triangle_count == 1
            assert st.detour is not None


def test_spectrum_on_all_fixtures_matches_oracle():
    for name, g in standard_fixtures().items():
        if g.n <= 10:
            assert cycle_spectrum(g, g.n).lengths == frozenset(
                oracle_cycle_lengths(g, g.n)
            ), name


def test_find_claw_matches_oracle_on_fixtures():
    for name, g in standard_fixtures().items():
        if g.n <= 10:
            assert (find_claw(g) is not None) == oracle_has_claw(g), name
