import itertools
import random

import pytest

from unavoidable import patterns
from unavoidable.colorings import TwoColoring, coloring_from_mask, coloring_from_red
from unavoidable.constructions import layered_coloring, matching_coloring, star_coloring
from unavoidable.graphs import (
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    make_graph,
    matching_graph,
    path_graph,
    star_graph,
)
from unavoidable.patterns import (
    INDUCED,
    WEAK,
    Member,
    PatternError,
    PatternFamily,
    avoids_family,
    family_F,
    family_L,
    find_balanced_copy,
    find_induced,
    find_induced_mono,
    find_weakly_induced,
    grid_alignment,
    verify_alignment,
    verify_witness,
)
from unavoidable.suites import brute_balanced, brute_induced, brute_weak

from conftest import rand_graph


def test_find_induced_examples():
    assert find_induced(cycle_graph(5), path_graph(3)) is not None
    assert find_induced(complete_graph(4), path_graph(3)) is None
    assert find_induced(complete_bipartite(2, 2), matching_graph(2)) is None


def test_find_induced_mono_examples():
    w = find_induced_mono(star_coloring(6), star_graph(3))
    assert w is not None and w.color == "red"
    w = find_induced_mono(matching_coloring(8), matching_graph(3))
    assert w is not None and w.color == "red"
    assert find_induced_mono(layered_coloring(20, 2, 2, 3), complete_bipartite(2, 3)) is None


def test_avoids_family_examples():
    mono = coloring_from_red(6, complete_graph(6))
    assert avoids_family(mono, family_F(2, 2))[0]
    assert avoids_family(coloring_from_red(6, empty_graph(6)), family_L(2, 2, 3))[0]
    mixed = coloring_from_red(5, make_graph(5, [(0, 1)]))
    ok, (idx, w) = avoids_family(mixed, family_F(1, 2))
    assert not ok and verify_witness(mixed, w)
    assert avoids_family(layered_coloring(20, 2, 2, 3), family_L(2, 2, 3))[0]


def test_weakly_induced_examples():
    two_k3 = disjoint_union([complete_graph(3)] * 2)
    assert find_weakly_induced(two_k3, matching_graph(2)) is not None
    assert find_weakly_induced(complete_graph(6), matching_graph(2)) is None
    emb = find_weakly_induced(cycle_graph(6), matching_graph(2))
    assert emb is not None and not any(cycle_graph(6).has_edge(emb[a], emb[b]) for a in (0, 1) for b in (2, 3))


def test_complement_duality():
    rng = random.Random(14)
    for _ in range(200):
        c = coloring_from_mask(6, rng.getrandbits(15))
        h = rand_graph(rng, rng.randint(2, 5))
        assert (find_induced_mono(c, h) is None) == (find_induced_mono(c, complement(h)) is None)


def test_weak_is_weaker_than_induced():
    # P3 + K2 sits weakly (not induced) in K3 + K2: the triangle closes the path
    host = disjoint_union([complete_graph(3), complete_graph(2)])
    h = disjoint_union([path_graph(3), complete_graph(2)])
    assert find_weakly_induced(host, h) is not None
    assert find_induced(host, h) is None
    assert find_weakly_induced(host, h, strict=True) is None


def test_balanced_examples():
    c = coloring_from_red(4, make_graph(4, [(0, 1)]))
    w = find_balanced_copy(c, path_graph(3))
    assert w is not None and w.red_count == 1 and verify_witness(c, w)
    assert find_balanced_copy(coloring_from_red(5, complete_graph(5)), complete_graph(3)) is None
    tri = coloring_from_red(4, make_graph(4, [(0, 1), (1, 2), (0, 2)]))
    assert find_balanced_copy(tri, path_graph(4)) is not None


def test_family_validation():
    with pytest.raises(PatternError):
        PatternFamily((Member(complete_graph(3)),))
    with pytest.raises(PatternError):
        PatternFamily((Member(path_graph(3), WEAK),))
    with pytest.raises(PatternError):
        PatternFamily((Member(path_graph(3), "bogus"),))
    assert len(family_L(2, 2, 3)) == 3
    assert family_F(1, 2).name == "F:1,2"


def test_detectors_match_brute_force():
    rng = random.Random(11)
    for _ in range(1500):
        host = rand_graph(rng, rng.randint(1, 7))
        h = rand_graph(rng, rng.randint(1, min(5, host.n)))
        emb = find_induced(host, h)
        assert (emb is not None) == brute_induced(host, h)
        if emb is not None:
            assert all(h.has_edge(a, b) == host.has_edge(emb[a], emb[b])
                       for a, b in itertools.combinations(range(h.n), 2))
        assert (find_weakly_induced(host, h) is not None) == brute_weak(host, h)
        if h.num_edges:
            c = TwoColoring(host.n, host)
            assert (find_balanced_copy(c, h) is not None) == brute_balanced(c, h)


def test_witnesses_reverify():
    rng = random.Random(12)
    fam = family_L(2, 2, 2)
    hits = 0
    for _ in range(300):
        c = coloring_from_mask(7, rng.getrandbits(21))
        ok, hit = avoids_family(c, fam)
        if not ok:
            hits += 1
            assert verify_witness(c, hit[1])
    assert hits > 0


def test_grid_alignment_examples():
    all_red = coloring_from_red(12, complete_graph(12))
    layout = [list(range(0, 6)), list(range(6, 12))]
    assert grid_alignment(all_red, 2, 6, 3, layout) == [0, 1, 2]
    rng = random.Random(13)
    for _ in range(30):
        c = coloring_from_mask(6, rng.getrandbits(15))
        cols = grid_alignment(c, 1, 6, 3, [list(range(6))])
        assert cols is not None and verify_alignment(c, [list(range(6))], cols)


def test_grid_alignment_adversarial():
    # row 1: red C5 on 0..4; row 2: red complement of C5 on 5..9; cross edges irrelevant
    red = [(i, (i + 1) % 5) for i in range(5)]
    red += [(5 + a, 5 + b) for a, b in itertools.combinations(range(5), 2) if (b - a) % 5 not in (1, 4)]
    c = coloring_from_red(10, make_graph(10, red))
    layout = [list(range(5)), list(range(5, 10))]
    assert grid_alignment(c, 2, 5, 3, layout) is None
    brute = [L for L in itertools.combinations(range(5), 3) if verify_alignment(c, layout, L)]
    assert brute == []


def test_grid_alignment_rejects_bad_layout():
    c = coloring_from_red(4, complete_graph(4))
    with pytest.raises(PatternError):
        grid_alignment(c, 2, 2, 2, [[0, 1], [1, 2]])
