import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from distext.graph import (
    Graph,
    Graph6Error,
    GraphFamilySpec,
    ParameterRangeWarning,
    build,
    complete,
    configuration,
    diamond,
    empty,
    extremal_bipartite,
    extremal_general,
    is_connected,
    join,
    parse_graph6,
    two_coloring,
    union,
    write_graph6,
)
from distext.iso import UnsupportedSizeError, are_isomorphic, canonical_form

from .helpers import random_graph, to_nx


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_rejects_self_loops_and_bad_bipartition():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 2)], bipartition=([0, 1], [2]))


def test_join_singletons_is_k2():
    assert join(complete(1), complete(1)).adj == complete(2).adj


def test_join_of_empties_is_complete_bipartite():
    g = join(empty(3), empty(2))
    expected = Graph.from_edges(5, [(u, v) for u in range(3) for v in range(3, 5)])
    assert g.adj == expected.adj
    assert g.bipartition == ((0, 1, 2), (3, 4))


def test_extremal_general_is_join_expression():
    n, k = 4, 1
    g = join(complete(2 * k), union(complete(2 * n - 2 * k - 1), complete(1)))
    assert g == extremal_general(n, k)


def test_diamond_1111_is_p4():
    g = diamond(1, 1, 1, 1)
    assert set(g.edges()) == set(path(4).edges())


def test_diamond_empty_second_block():
    g = diamond(2, 3, 0, 0)
    assert g.adj == join(empty(2), empty(3)).adj


def test_build_kinds():
    g = build(GraphFamilySpec("extremal-general", (3, 1)))
    assert g.n == 6 and g.num_edges == 5 * 4 // 2 + 2
    b = build(GraphFamilySpec("extremal-bipartite", (3, 1)))
    assert b == diamond(2, 2, 1, 1) and b.n == 6
    assert build(GraphFamilySpec("configuration", (2, 3, 1))) == g
    assert build(GraphFamilySpec("extremal-factor-critical", (5, 1))) == configuration(1, [3, 1])
    assert build(GraphFamilySpec("join", (2, 3))) == complete(5)
    assert build(GraphFamilySpec("union", (2, 2))).num_edges == 2
    assert build(GraphFamilySpec("empty", (3,))).num_edges == 0


def test_build_warns_outside_theorem_range():
    with pytest.warns(ParameterRangeWarning):
        g = build(GraphFamilySpec("extremal-factor-critical", (5, 2)))
    assert g.n == 5
    with pytest.raises(ValueError):
        GraphFamilySpec("wheel", (3,))


def test_is_connected():
    assert is_connected(complete(4))
    assert not is_connected(union(complete(2), complete(2)))
    assert is_connected(extremal_general(4, 1))
    assert not is_connected(empty(0))


@given(graphs(7), graphs(7))
def test_join_edge_count(g, h):
    assert join(g, h).num_edges == g.num_edges + h.num_edges + g.n * h.n


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_diamond_is_bipartite_with_part_sizes(a, b, c, d):
    if a + b + c + d < 1:
        return
    g = diamond(a, b, c, d)
    assert two_coloring(g) is not None
    assert sorted(map(len, g.bipartition)) == sorted([a + c, b + d])


# -- graph6 --------------------------------------------------------------------------------


def test_graph6_known_string_matches_networkx():
    g = parse_graph6("D?{")
    ref = nx.from_graph6_bytes(b"D?{")
    assert set(g.edges()) == {tuple(sorted(e)) for e in ref.edges()}
    assert write_graph6(g) == "D?{"


def test_graph6_k1():
    assert write_graph6(complete(1)) == "@"
    assert parse_graph6("@").n == 1


def test_graph6_round_trip_extremal():
    g = extremal_general(3, 2)
    assert parse_graph6(write_graph6(g)).adj == g.adj


def test_graph6_matches_networkx_writer():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 20))
        ours = write_graph6(g)
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert ours == theirs


def test_graph6_round_trip_1000_random():
    rng = random.Random(11)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 12))
        assert parse_graph6(write_graph6(g)).adj == g.adj


def test_graph6_errors_name_offsets():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("D?")
    assert exc.value.offset == 2
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C!~")
    assert exc.value.offset == 1
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C~~")
    assert exc.value.offset == 2
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C\x01")
    assert exc.value.offset == 1
    with pytest.raises(Graph6Error):
        parse_graph6("")


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<C~").adj == complete(4).adj


# -- canonical forms --------------------------------------------------------------------------


def test_canonical_relabelled_path():
    p = path(4)
    q = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_form(p) == canonical_form(q)


def test_canonical_c4_vs_star():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(cycle(4)) != canonical_form(star)


def test_all_labelings_of_p4_give_one_form():
    forms = {canonical_form(path(4).relabel(perm)) for perm in itertools.permutations(range(4))}
    assert len(forms) == 1


def test_canonical_cap():
    with pytest.raises(UnsupportedSizeError):
        canonical_form(complete(13))
    assert canonical_form(complete(13), cap=None)


def test_canonical_invariant_under_50_relabelings():
    rng = random.Random(3)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 12))
        key = canonical_form(g)
        for _ in range(50):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == key


def test_canonical_agrees_with_networkx_isomorphism():
    rng = random.Random(5)
    for _ in range(500):
        n = rng.randint(1, 8)
        p = rng.random()
        g, h = random_graph(rng, n, p), random_graph(rng, n, p)
        assert (canonical_form(g) == canonical_form(h)) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_canonical_on_symmetric_graphs():
    for ref in (nx.petersen_graph(), nx.cycle_graph(12), nx.circulant_graph(12, [1, 5]), nx.hypercube_graph(3)):
        ref = nx.convert_node_labels_to_integers(ref)
        g = Graph.from_edges(ref.number_of_nodes(), ref.edges())
        perm = list(range(g.n))
        random.Random(1).shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_coloured_canonical_form_respects_colours():
    g = path(3)
    assert canonical_form(g, [0, 1, 0]) != canonical_form(g, [1, 0, 1])
    assert canonical_form(g, [0, 1, 1]) == canonical_form(g.relabel([2, 1, 0]), [1, 1, 0])


def test_are_isomorphic_extremal_bipartite_family():
    assert are_isomorphic(diamond(1, 1, 2, 2), extremal_bipartite(3, 1))
