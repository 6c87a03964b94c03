import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from distext.graph import Graph, complete, configuration, diamond, empty, extremal_bipartite, extremal_general, union
from distext.matching import (
    Matching,
    blossom_mate,
    brute_force_matching_number,
    has_perfect_matching,
    hopcroft_karp_mate,
    matching_number,
    max_matching,
    odd_components,
    tutte_berge_check,
    tutte_berge_deficiency,
)

from .helpers import random_graph, to_nx


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


PETERSEN = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])


def nx_size(g):
    return len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


@pytest.mark.parametrize("g,size", [(complete(4), 2), (path(5), 2), (PETERSEN, 5), (empty(3), 0), (complete(1), 0)])
def test_matching_sizes(g, size):
    m = max_matching(g)
    assert len(m) == size and m.is_valid_for(g)
    assert brute_force_matching_number(g) == size


def test_c6_has_perfect_matching():
    assert has_perfect_matching(cycle(6))


def test_no_perfect_matching_example():
    g = configuration(1, [7, 1, 1])
    assert g.n == 10 and not has_perfect_matching(g)
    deficiency, s = tutte_berge_deficiency(g)
    assert deficiency == 2 and s == (0,)
    # one matching edge short of perfect
    assert g.n // 2 - matching_number(g) == 1


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 6) for k in range(1, n)])
def test_extremal_graphs_have_perfect_matchings(n, k):
    assert has_perfect_matching(extremal_general(n, k))
    assert has_perfect_matching(extremal_bipartite(n, k))


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (4, 2), (5, 3)])
def test_odd_components_extremal(n, k):
    assert odd_components(extremal_general(n, k), range(2 * k)) == 2


@pytest.mark.parametrize("m", range(1, 7))
def test_odd_components_complete(m):
    assert odd_components(complete(m)) == m % 2


def test_odd_components_path():
    assert odd_components(path(4), [1, 2]) == 2
    assert odd_components(path(4), [1]) == 1


def test_c6_deficiency_zero_at_empty_set():
    assert tutte_berge_deficiency(cycle(6)) == (0, ())
    assert tutte_berge_check(cycle(6))


def test_matching_from_mate_roundtrip():
    mate = blossom_mate(PETERSEN)
    m = Matching.from_mate(mate)
    assert len(m) == 5 and len(m.covered) == 10


def test_blossom_on_odd_cycles_with_tails():
    # odd cycle attached to a path forces blossom contraction
    g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6), (6, 7)])
    assert len(max_matching(g)) == 4 == nx_size(g)


def test_hopcroft_karp_requires_bipartition():
    with pytest.raises(ValueError):
        hopcroft_karp_mate(path(4))


def test_hopcroft_karp_agrees_with_blossom():
    rng = random.Random(5)
    for _ in range(300):
        a, b = rng.randint(1, 7), rng.randint(1, 7)
        p = rng.random()
        edges = [(u, a + w) for u in range(a) for w in range(b) if rng.random() < p]
        g = Graph.from_edges(a + b, edges).with_bipartition(range(a), range(a, a + b))
        hk = Matching.from_mate(hopcroft_karp_mate(g))
        assert hk.is_valid_for(g)
        assert len(hk) == len(Matching.from_mate(blossom_mate(g))) == nx_size(g)


def test_blossom_agrees_with_networkx_random():
    rng = random.Random(11)
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 14))
        m = Matching.from_mate(blossom_mate(g))
        assert m.is_valid_for(g)
        assert len(m) == nx_size(g)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 11), st.floats(0.0, 1.0), st.randoms(use_true_random=False))
def test_blossom_matches_brute_force(n, p, rng):
    g = random_graph(rng, n, p)
    assert matching_number(g) == brute_force_matching_number(g)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 10), st.floats(0.0, 1.0), st.randoms(use_true_random=False))
def test_tutte_berge_parity(n, p, rng):
    g = random_graph(rng, n, p)
    deficiency, s = tutte_berge_deficiency(g)
    assert (deficiency - n) % 2 == 0
    assert odd_components(g, s) - len(s) == deficiency
    assert matching_number(g) == (n - deficiency) // 2


def test_tutte_berge_all_connected_up_to_7(connected_by_order):
    for n in range(1, 8):
        assert all(tutte_berge_check(g) for g in connected_by_order[n])


def test_tutte_berge_cap():
    from distext.iso import UnsupportedSizeError

    with pytest.raises(UnsupportedSizeError):
        tutte_berge_check(complete(13))


def test_union_matching_adds():
    g = union(complete(3), diamond(1, 1, 1, 1))
    assert matching_number(g) == 1 + 2
