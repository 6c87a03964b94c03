import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from distext.extendability import (
    Witness,
    is_k_extendable_deletion,
    is_k_extendable_direct,
    is_k_extendable_hall,
    is_k_extendable_tutte,
    is_k_factor_critical,
    is_k_factor_critical_tutte,
    k_matchings,
    odd_component_sizes,
    recheck_witness,
)
from distext.graph import Graph, complete, diamond, extremal_bipartite, extremal_factor_critical, extremal_general
from distext.iso import UnsupportedSizeError
from distext.matching import has_perfect_matching

from .helpers import random_graph


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def c6_bipartite():
    return cycle(6).with_bipartition([0, 2, 4], [1, 3, 5])


def naive_extendable(g, k):
    """Independent oracle: enumerate edge subsets of size k directly."""
    if g.n % 2:
        return False
    edges = g.edges()
    found = False
    for sub in combinations(edges, k):
        vs = [v for e in sub for v in e]
        if len(set(vs)) < 2 * k:
            continue
        found = True
        if not has_perfect_matching(g.remove(vs)):
            return False
    return found or k == 0 and has_perfect_matching(g)


@pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2), (4, 1)])
def test_extremal_general_not_extendable(n, k):
    g = extremal_general(n, k)
    v = is_k_extendable_direct(g, k)
    assert not v and v.witness.kind == "bad-matching"
    assert recheck_witness(g, v)


@pytest.mark.parametrize("n", range(1, 5))
def test_complete_even_extendable(n):
    for k in range(n):
        assert is_k_extendable_direct(complete(2 * n), k)
        assert is_k_extendable_tutte(complete(2 * n), k)


def test_c6_one_extendable():
    assert is_k_extendable_direct(cycle(6), 1)
    assert not is_k_extendable_direct(cycle(6), 2)


def test_tutte_witness_extremal_3_1():
    g = extremal_general(3, 1)
    v = is_k_extendable_tutte(g, 1)
    assert not v and v.witness.kind == "tutte-set"
    assert recheck_witness(g, v)
    # the join vertices form a violating set
    assert odd_component_sizes(g, [0, 1]) == [1, 3]


def test_tutte_k6_k2():
    assert is_k_extendable_tutte(complete(6), 2)


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_odd_order_parity(n):
    for decide in (is_k_extendable_direct, is_k_extendable_tutte):
        v = decide(complete(n), 1)
        assert not v and v.witness.kind == "parity"
        assert recheck_witness(complete(n), v)


def test_tutte_cap():
    with pytest.raises(UnsupportedSizeError):
        is_k_extendable_tutte(complete(14), 1)
    with pytest.raises(UnsupportedSizeError):
        is_k_factor_critical_tutte(complete(13), 1)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 6) for k in range(1, n)])
def test_hall_witness_extremal_bipartite(n, k):
    g = extremal_bipartite(n, k)
    v = is_k_extendable_hall(g, k)
    assert not v and v.witness.kind == "hall-set"
    assert recheck_witness(g, v)
    # the (n-k)-block of U sees exactly the (n-1)-block of W
    block = tuple(range(n - k))
    nbhd = set().union(*(g.neighbors(x) for x in block))
    assert len(nbhd) == n - 1


@pytest.mark.parametrize("n", range(1, 5))
def test_complete_bipartite_extendable(n):
    g = diamond(n, n, 0, 0)
    for k in range(n):
        assert is_k_extendable_hall(g, k)
        assert is_k_extendable_deletion(g, k)


def test_unbalanced_parity():
    g = diamond(2, 3, 0, 0)
    v = is_k_extendable_hall(g, 1)
    assert not v and v.witness.kind == "parity"
    assert recheck_witness(g, v)
    assert not is_k_extendable_deletion(g, 1)


def test_missing_bipartition():
    with pytest.raises(ValueError):
        is_k_extendable_hall(cycle(6), 1)
    with pytest.raises(ValueError):
        is_k_extendable_deletion(cycle(6), 1)


def test_deletion_examples():
    g = extremal_bipartite(3, 1)
    v = is_k_extendable_deletion(g, 1)
    assert not v and v.witness.kind == "bad-set" and recheck_witness(g, v)
    assert is_k_extendable_deletion(diamond(3, 3, 0, 0), 2)
    assert is_k_extendable_deletion(c6_bipartite(), 1)


def test_no_k_matching_marker():
    star = diamond(1, 3, 0, 0)
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    for v in (is_k_extendable_direct(g, 2), is_k_extendable_tutte(g, 2)):
        assert v.no_k_matching and recheck_witness(g, v)
    assert is_k_extendable_hall(star.with_bipartition([0], [1, 2, 3]), 1).witness.kind == "parity"


@pytest.mark.parametrize("n,k", [(4, 2), (5, 1), (5, 3), (6, 2)])
def test_extremal_factor_critical(n, k):
    g = extremal_factor_critical(n, k)
    for decide in (is_k_factor_critical, is_k_factor_critical_tutte):
        v = decide(g, k)
        assert not v
        assert recheck_witness(g, v, mode="factor-critical")


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_factor_critical(n):
    for k in range(n % 2, n, 2):
        assert is_k_factor_critical(complete(n), k)
        assert is_k_factor_critical_tutte(complete(n), k)


def test_c5_factor_critical():
    assert is_k_factor_critical(cycle(5), 1)
    v = is_k_factor_critical(cycle(5), 2)
    assert not v and v.witness.kind == "parity"


def test_k_matchings_count():
    # K4 has 3 perfect matchings and 6 one-matchings
    assert len(list(k_matchings(complete(4), 2))) == 3
    assert len(list(k_matchings(complete(4), 1))) == 6
    assert list(k_matchings(complete(4), 0)) == [()]


def test_witness_json():
    assert Witness("tutte-set", vertices=(0, 1)).to_json() == '{"kind": "tutte-set", "vertices": [0, 1]}'
    assert Witness("bad-matching", edges=((0, 1),)).to_dict() == {"kind": "bad-matching", "edges": [[0, 1]]}


def test_recheck_rejects_forged_witness():
    g = complete(4)
    from distext.extendability import ExtendabilityVerdict

    forged = ExtendabilityVerdict(1, False, Witness("bad-matching", edges=((0, 1),)))
    assert not recheck_witness(g, forged)
    assert not recheck_witness(g, ExtendabilityVerdict(1, True))


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 4), st.floats(0.2, 1.0), st.randoms(use_true_random=False), st.integers(0, 3))
def test_direct_matches_naive_oracle(half, p, rng, k):
    g = random_graph(rng, 2 * half, p)
    v = is_k_extendable_direct(g, k)
    assert v.holds == naive_extendable(g, k)
    if not v.holds:
        assert recheck_witness(g, v)


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 5), st.floats(0.2, 1.0), st.randoms(use_true_random=False), st.integers(1, 3))
def test_direct_tutte_agree_random(half, p, rng, k):
    g = random_graph(rng, 2 * half, p)
    a, b = is_k_extendable_direct(g, k), is_k_extendable_tutte(g, k)
    assert a.holds == b.holds and a.no_k_matching == b.no_k_matching
    for v in (a, b):
        if not v.holds:
            assert recheck_witness(g, v)


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 7), st.floats(0.1, 1.0), st.randoms(use_true_random=False), st.integers(0, 5))
def test_factor_critical_deciders_agree(n, p, rng, k):
    g = random_graph(rng, n, p)
    a, b = is_k_factor_critical(g, k), is_k_factor_critical_tutte(g, k)
    assert a.holds == b.holds
    if not a.holds:
        assert recheck_witness(g, a, mode="factor-critical")
        assert recheck_witness(g, b, mode="factor-critical")


def test_factor_critical_2k_implies_extendable():
    rng = random.Random(3)
    hits = 0
    for _ in range(400):
        half = rng.randint(2, 5)
        g = random_graph(rng, 2 * half, rng.uniform(0.5, 1.0))
        for k in range(1, half):
            if is_k_factor_critical(g, 2 * k) and is_k_extendable_direct(g, k).witness is None:
                hits += 1
            elif is_k_factor_critical(g, 2 * k):
                pytest.fail(f"{g} is {2 * k}-factor-critical but not {k}-extendable")
    assert hits > 0


def test_bipartite_deciders_agree_small(balanced_bipartite_by_order):
    for order in (2, 4, 6, 8):
        for g in balanced_bipartite_by_order[order]:
            for k in range(1, order // 2):
                a = is_k_extendable_direct(g, k).holds
                assert a == is_k_extendable_hall(g, k).holds == is_k_extendable_deletion(g, k).holds
