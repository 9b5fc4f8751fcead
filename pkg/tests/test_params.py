import itertools
import random

import networkx as nx
import pytest

from unavoidable import params
from unavoidable.graphs import (
    complete_graph,
    complete_split,
    cycle_graph,
    empty_graph,
    make_graph,
    matching_graph,
    path_graph,
    staircase_split,
    star_graph,
)

from conftest import rand_graph, to_nx


@pytest.mark.parametrize("g,want", [(complete_graph(4), 2), (path_graph(4), 2), (complete_split(2, 2), 2),
                                    (empty_graph(3), 0), (cycle_graph(7), 3)])
def test_matching_number_examples(g, want):
    assert params.matching_number(g) == want


@pytest.mark.parametrize("g,want", [(empty_graph(5), 5), (complete_graph(5), 1), (cycle_graph(5), 2)])
def test_independence_examples(g, want):
    assert params.independence_number(g) == want


def test_max_degree_examples():
    assert params.max_degree(star_graph(4)) == 4
    assert params.max_degree(matching_graph(4)) == 1
    assert params.max_degree(staircase_split(3)) == 5


def test_strong_coloring_examples():
    assert params.greedy_strong_edge_coloring(matching_graph(4))[0] == 1
    assert params.greedy_strong_edge_coloring(star_graph(3))[0] == 3
    assert params.greedy_strong_edge_coloring(path_graph(4))[0] == 3


def test_matching_against_networkx():
    rng = random.Random(3)
    for _ in range(500):
        g = rand_graph(rng, rng.randint(1, 14))
        m = params.maximum_matching(g)
        assert all(g.has_edge(u, v) for u, v in m)
        assert len({x for e in m for x in e}) == 2 * len(m)
        assert len(m) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


def test_independence_against_brute_force():
    rng = random.Random(4)
    for _ in range(200):
        g = rand_graph(rng, rng.randint(1, 9))
        brute = max(len(s) for r in range(g.n + 1) for s in itertools.combinations(range(g.n), r)
                    if not any(g.has_edge(a, b) for a, b in itertools.combinations(s, 2)))
        assert params.independence_number(g) == brute


def test_strong_coloring_classes_are_induced_matchings():
    rng = random.Random(5)
    for _ in range(300):
        g = rand_graph(rng, rng.randint(1, 10))
        count, cls = params.greedy_strong_edge_coloring(g)
        assert set(cls) == set(g.edges())
        groups = {}
        for e, c in cls.items():
            groups.setdefault(c, []).append(e)
        assert len(groups) == count
        assert all(params.is_induced_matching(g, es) for es in groups.values())


def test_is_induced_matching():
    p4 = path_graph(4)
    assert not params.is_induced_matching(p4, [(0, 1), (2, 3)])
    assert params.is_induced_matching(make_graph(4, [(0, 1), (2, 3)]), [(0, 1), (2, 3)])
