import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from unavoidable import canon
from unavoidable.graphs import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    graph_from_mask,
    make_graph,
    matching_graph,
    pair_count,
    path_graph,
    star_graph,
)

from conftest import rand_graph, to_nx


def test_reference_examples():
    p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    p4b = make_graph(4, [(3, 1), (1, 0), (0, 2)])
    assert canon.certificate(p4) == canon.certificate(p4b)
    assert canon.certificate(star_graph(3)) != canon.certificate(p4)
    assert canon.certificate(cycle_graph(6)) != canon.certificate(disjoint_union([complete_graph(3)] * 2))


@settings(max_examples=200)
@given(st.integers(0, 9), st.data(), st.randoms())
def test_certificate_invariant_under_relabelling(n, data, r):
    g = graph_from_mask(n, data.draw(st.integers(0, (1 << pair_count(n)) - 1)))
    perm = list(range(n))
    r.shuffle(perm)
    assert canon.certificate(g) == canon.certificate(g.relabel(perm))
    assert canon.are_isomorphic(canon.canonical_graph(g), g)


def test_certificates_separate_non_isomorphic_graphs_like_networkx():
    rng = random.Random(7)
    pairs = 0
    for _ in range(400):
        n = rng.randint(4, 8)
        g = rand_graph(rng, n, 0.5)
        h = rand_graph(rng, n, 0.5)
        if g.num_edges != h.num_edges:
            continue
        pairs += 1
        assert canon.are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
    assert pairs > 20


def test_hard_regular_pair():
    # two non-isomorphic 3-regular graphs on 8 vertices: the cube and the Moebius ladder
    cube = make_graph(8, [(0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4),
                          (0, 4), (1, 5), (2, 6), (3, 7)])
    mobius = make_graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    assert not canon.are_isomorphic(cube, mobius)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_graphs_by_order_counts(n, count):
    gs = list(canon.graphs_by_order(n))
    assert len(gs) == count
    assert len({canon.certificate(g) for g in gs}) == count


@pytest.mark.parametrize("k,count", [(1, 1), (2, 2), (3, 5), (4, 11), (5, 26), (6, 68)])
def test_enumerate_graphs_by_edges(k, count):
    gs = list(canon.enumerate_graphs(k))
    assert len(gs) == count
    assert all(g.num_edges == k and min(g.degrees()) >= 1 for g in gs)


def test_enumerate_k3_classes():
    want = {canon.certificate(g) for g in (
        complete_graph(3), path_graph(4), star_graph(3),
        disjoint_union([path_graph(3), complete_graph(2)]), matching_graph(3))}
    assert {canon.certificate(g) for g in canon.enumerate_graphs(3)} == want


def test_enumerate_brute_force_oracle_k4():
    # every 4-edge graph lives inside K_8; dedup all C(28,4) subsets by networkx WL hash + iso
    import itertools
    reps = []
    for combo in itertools.combinations(itertools.combinations(range(8), 2), 4):
        g = make_graph(8, list(combo)).without_isolated()
        h = to_nx(g)
        if not any(nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
    assert len(reps) == len(list(canon.enumerate_graphs(4)))


def test_enumerate_padding_without_min_degree():
    gs = list(canon.enumerate_graphs(2, min_degree_one=False))
    assert all(g.n == 4 for g in gs) and len(gs) == 2


def test_hereditary_pruning():
    triangle_free = [g for g in canon.graphs_by_order(5)
                     if not any(g.adj[a] & g.adj[b] for a, b in g.edges())]
    pruned = list(canon.graphs_by_order(5, keep=lambda g: not any(g.adj[a] & g.adj[b] for a, b in g.edges())))
    assert {canon.certificate(g) for g in pruned} == {canon.certificate(g) for g in triangle_free}
    assert len(pruned) == 14
