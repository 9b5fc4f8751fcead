import itertools
import random

import pytest

from unavoidable import balance, canon
from unavoidable.graphs import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    make_graph,
    matching_graph,
    path_graph,
    staircase_bipartite,
    staircase_split,
)
from unavoidable.params import matching_number
from unavoidable.search import bal_exact

from conftest import rand_graph


def brute_charbp(g):
    e = g.num_edges
    ok = {e // 2, (e + 1) // 2}
    cut = inside = False
    for r in range(g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            s = set(s)
            if sum((u in s) != (v in s) for u, v in g.edges()) in ok:
                cut = True
            if sum(u in s and v in s for u, v in g.edges()) in ok:
                inside = True
    return cut and inside


def test_half_family_examples():
    assert [m.graph for m in balance.half_family(path_graph(3)).members] == [complete_graph(2)]
    assert len(balance.half_family(complete_graph(3))) == 2
    c4 = balance.half_family(cycle_graph(4))
    got = {canon.certificate(m.graph) for m in c4.members}
    assert got == {canon.certificate(path_graph(3)), canon.certificate(matching_graph(2))}
    kept = balance.half_family(path_graph(3), keep_isolated=True)
    assert kept.members[0].graph.n == 3
    with pytest.raises(balance.BalanceError):
        balance.half_family(make_graph(3, []))


def test_charbp_examples():
    w = balance.charBP_witness(complete_bipartite(3, 3))
    assert w.cut == 4 and w.inside == 4
    assert balance.charBP_witness(disjoint_union([complete_graph(3)] * 2)) is None
    w = balance.charBP_witness(complete_graph(2))
    assert w is not None and balance.verify_balance_witness(complete_graph(2), w)


def test_charbp_against_brute_force():
    rng = random.Random(31)
    for _ in range(300):
        g = rand_graph(rng, rng.randint(2, 8))
        if g.num_edges == 0:
            continue
        w = balance.charBP_witness(g)
        assert (w is not None) == brute_charbp(g)
        if w is not None:
            assert balance.verify_balance_witness(g, w)


@pytest.mark.parametrize("t,cut,inside", [(2, 2, 2), (3, 4, 4), (4, 8, 8)])
def test_ktt_witness_formulas(t, cut, inside):
    w = balance.ktt_witness(t)
    assert (w.cut, w.inside) == (cut, inside)
    assert balance.verify_balance_witness(complete_bipartite(t, t), w)


@pytest.mark.parametrize("t", range(2, 6))
def test_staircases_balanceable(t):
    for g in (staircase_split(t), staircase_bipartite(t)):
        assert balance.charBP_witness(g) is not None


def test_two_k_t_matches_nonnegative_convention():
    mismatches_positive = []
    for t in range(2, 7):
        g = disjoint_union([complete_graph(t)] * 2)
        found = balance.charBP_witness(g) is not None
        conv = balance.two_squares(t)
        assert found == conv["nonnegative"]
        if found != conv["positive"]:
            mismatches_positive.append(t)
    assert mismatches_positive == [4]


def test_two_squares_examples():
    assert balance.two_squares(2) == {"positive": True, "nonnegative": True}
    assert balance.two_squares(3) == {"positive": False, "nonnegative": False}
    assert balance.two_squares(4) == {"positive": False, "nonnegative": True}


def test_in_ck_examples():
    assert balance.in_Ck(cycle_graph(4)).member
    p3_2k2 = disjoint_union([path_graph(3), matching_graph(2)])
    rep = balance.in_Ck(p3_2k2)
    assert rep.member and rep.beta == 3 and balance.verify_ck_report(p3_2k2, rep)
    rep = balance.in_Ck(complete_graph(4))
    assert not rep.member and rep.beta == 2
    assert not balance.in_Ck(path_graph(4)).member


def test_ck_witnesses_for_all_small_members():
    for k in (2, 4, 6):
        for g in canon.enumerate_graphs(k):
            rep = balance.in_Ck(g)
            assert rep.member == (matching_number(g) >= k // 2 and k // 2 in g.degrees())
            if rep.member:
                assert balance.verify_ck_report(g, rep)


def test_tampered_ck_report_fails():
    g = cycle_graph(4)
    rep = balance.in_Ck(g)
    rep.apex_matching = rep.apex_matching[:1]
    assert not balance.verify_ck_report(g, rep)


def test_constant_predicate_examples():
    assert balance.constant_bal_predicate(cycle_graph(4)).value
    rep = balance.constant_bal_predicate(path_graph(4))
    assert rep.value and rep.removed_edge is not None
    assert balance.in_Ck(path_graph(4).remove_edge(1, 2)).member
    assert not balance.constant_bal_predicate(complete_graph(4)).value


def test_constant_predicate_stabilises_bal():
    # graphs with a constant balancing number give the same bal value for n = 6, 7
    for g in (cycle_graph(4), path_graph(4), disjoint_union([path_graph(3), complete_graph(2)])):
        assert balance.constant_bal_predicate(g).value
        assert bal_exact(6, g).value == bal_exact(7, g).value
