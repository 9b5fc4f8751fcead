import itertools

import pytest
from hypothesis import given, strategies as st

from unavoidable.graphs import (
    GraphError,
    bits,
    complement,
    complete_bipartite,
    complete_graph,
    complete_split,
    cycle_graph,
    disjoint_union,
    empty_graph,
    generate_named,
    graph_from_mask,
    index_pairs,
    make_graph,
    matching_graph,
    pair_count,
    pair_index,
    parse_named,
    path_graph,
    staircase_bipartite,
    staircase_split,
    star_graph,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    mask = draw(st.integers(0, (1 << pair_count(n)) - 1))
    return graph_from_mask(n, mask)


def test_pair_index_matches_graph6_column_order():
    assert [pair_index(i, j) for i, j in index_pairs(4)] == list(range(6))
    assert index_pairs(3) == [(0, 1), (0, 2), (1, 2)]
    assert pair_index(2, 0) == pair_index(0, 2)


def test_make_graph_examples():
    k3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert k3 == complete_graph(3)
    assert make_graph(4, []).num_edges == 0
    assert make_graph(4, [(0, 1), (0, 1)]).num_edges == 1


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_make_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        make_graph(4, edges)


def test_named_generators():
    s22 = complete_split(2, 2)
    assert (s22.n, s22.num_edges) == (4, 5)
    assert staircase_split(3).num_edges == 9
    assert staircase_bipartite(3).num_edges == 6
    assert star_graph(4).degrees() == [4, 1, 1, 1, 1]
    assert matching_graph(3).edges() == [(0, 1), (2, 3), (4, 5)]
    assert complete_bipartite(2, 3).num_edges == 6
    assert cycle_graph(5).degrees() == [2] * 5
    assert path_graph(4).num_edges == 3


@pytest.mark.parametrize("t", range(1, 7))
def test_staircase_adjacency_rule(t):
    h, e = staircase_split(t), staircase_bipartite(t)
    assert h.num_edges == t * t
    assert e.num_edges == t * (t + 1) // 2
    # vertices 0..t-1 form A (independent), t..2t-1 form B
    for i in range(1, t + 1):
        for j in range(1, t + 1):
            want = j <= i
            assert e.has_edge(i - 1, t + j - 1) == want
            assert h.has_edge(i - 1, t + j - 1) == want
    assert all(h.has_edge(a, b) for a, b in itertools.combinations(range(t, 2 * t), 2))
    assert not any(h.has_edge(a, b) for a, b in itertools.combinations(range(t), 2))
    assert not any(e.has_edge(a, b) for a, b in itertools.combinations(range(t, 2 * t), 2))


def test_h3_max_degree_vertex():
    assert max(staircase_split(3).degrees()) == 5


def test_complement_examples():
    assert complement(complete_graph(4)) == empty_graph(4)
    assert complement(matching_graph(2)).num_edges == 4
    assert sorted(complement(matching_graph(2)).degrees()) == [2, 2, 2, 2]
    assert complement(complete_split(2, 2)).num_edges == 1


def test_disjoint_union_examples():
    assert disjoint_union([complete_graph(2)] * 3) == matching_graph(3)
    assert disjoint_union([complete_graph(3)] * 2).num_edges == 6
    assert disjoint_union([]).n == 0


def test_parse_named_and_errors():
    assert parse_named("H_t:3") == staircase_split(3)
    assert parse_named("S:2,2") == complete_split(2, 2)
    with pytest.raises(GraphError):
        parse_named("nope:3")
    with pytest.raises(GraphError):
        generate_named("K", 0)
    with pytest.raises(GraphError):
        generate_named("Kst", 2)


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert g.num_edges + complement(g).num_edges == pair_count(g.n)


@given(graphs())
def test_mask_round_trip_and_degrees(g):
    assert graph_from_mask(g.n, g.edge_mask()) == g
    assert sum(g.degrees()) == 2 * g.num_edges
    assert sorted(v for c in g.components() for v in c) == list(range(g.n))


@given(graphs(), st.randoms())
def test_relabel_preserves_degree_multiset(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    for u, v in g.edges():
        assert h.has_edge(perm[u], perm[v])


def test_induced_and_without_isolated():
    g = make_graph(5, [(0, 1), (1, 2), (3, 4)])
    assert g.induced([0, 1, 2]) == path_graph(3)
    assert make_graph(4, [(1, 3)]).without_isolated() == complete_graph(2)
    assert list(bits(0b10110)) == [1, 2, 4]
