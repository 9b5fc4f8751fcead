import itertools
import random

import networkx as nx
import pytest

from unavoidable.graphs import SimpleGraph, make_graph


def to_nx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def rand_graph(rng: random.Random, n: int, p: float | None = None) -> SimpleGraph:
    p = rng.random() if p is None else p
    return make_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        r = RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if r.passed else 'FAIL'} ({r.seconds:.1f}s) {r.summary}")
