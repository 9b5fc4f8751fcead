"""Named property suites run by ``unavoidable verify --suite NAME``.

Each suite returns a SuiteResult with one Check per property instance and
the first counterexamples it met.  Randomised suites take a seed.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable

from . import balance, canon, constructions, multicolor, params, patterns, search
from .colorings import TwoColoring, class_sizes
from .graphs import (
    SimpleGraph,
    complete_bipartite,
    complete_graph,
    make_graph,
    staircase_bipartite,
    staircase_split,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: object = None

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail=None) -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def to_json(self) -> dict:
        failed = [c.to_json() for c in self.checks if not c.ok]
        return {"suite": self.suite, "passed": self.passed, "checks": len(self.checks),
                "failures": failed[:10]}


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    return make_graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def ex2_degenerate(workers: int = 1, n_max: int = 8) -> SuiteResult:
    res = SuiteResult("ex2-degenerate")
    fam = patterns.family_F(1, 2)
    for n in range(4, n_max + 1):
        cert = search.ex2_exact(n, fam, "raw", workers)
        res.add(f"ex2({n}, F:1,2) = 0", cert.value == 0, cert.to_json())
    return res


def layered_avoidance(n_values=range(10, 17)) -> SuiteResult:
    res = SuiteResult("layered")
    for r, s, t in itertools.product((2, 3), (2, 3), (2, 3, 4)):
        if t < s:
            continue
        fam = patterns.family_L(r, s, t)
        for n in n_values:
            c = constructions.layered_coloring(n, r, s, t)
            ok, hit = patterns.avoids_family(c, fam)
            res.add(f"layered({n},{r},{s},{t})", ok, None if ok else hit[1].to_json())
    return res


def lower_bound(workers: int = 1) -> SuiteResult:
    res = SuiteResult("lower-bound")
    for n in (7, 8):
        for r, s, t in ((2, 2, 2), (2, 2, 3)):
            lb = class_sizes(constructions.layered_coloring(n, r, s, t))[2]
            cert = search.ex2_exact(n, patterns.family_L(r, s, t), "raw", workers, lower_bound=lb)
            res.add(f"ex2({n}, L:{r},{s},{t}) >= {lb}", cert.value >= lb, cert.to_json())
    return res


def ramsey() -> SuiteResult:
    res = SuiteResult("ramsey")
    at5, wit = search.ramsey_check(3, 5)
    k3 = patterns.PatternFamily((patterns.Member(complete_graph(3), patterns.INDUCED, "K3"),), "K3",
                                allow_trivial=True)
    res.add("R(3) > 5", not at5 and wit is not None and patterns.avoids_family(wit, k3)[0],
            wit.to_json() if wit else None)
    res.add("R(3) <= 6", search.ramsey_check(3, 6)[0])
    at4, rows = search.bipartite_ramsey_check(2, 4)
    res.add("BR(2) > 4", not at4, rows)
    res.add("BR(2) <= 5", search.bipartite_ramsey_check(2, 5)[0])
    return res


def zarankiewicz(size: int = 6) -> SuiteResult:
    res = SuiteResult("zarankiewicz")
    for m in range(1, size + 1):
        for n in range(1, size + 1):
            cert = search.zarankiewicz_exact(m, n, 2, 2)
            bound = constructions.kst_bounds(m, n, 2, 2).zarankiewicz_bound
            # with one row or column no K_{2,2} fits and z = mn meets the bound exactly
            ok = cert.value < bound if min(m, n) >= 2 else cert.value == m * n
            res.add(f"z({m},{n};2,2)={cert.value} vs {bound:.3f}", ok)
    res.add("z(4,4;2,2) = 9", search.zarankiewicz_exact(4, 4, 2, 2).value == 9)
    return res


def strong_coloring(seed: int = 0, samples: int = 10_000, max_edges: int = 9) -> SuiteResult:
    res = SuiteResult("strong-coloring")

    def check(g: SimpleGraph, label: str) -> None:
        d = params.max_degree(g)
        count, classes = params.greedy_strong_edge_coloring(g)
        groups: dict[int, list] = {}
        for e, c in classes.items():
            groups.setdefault(c, []).append(e)
        valid = all(params.is_induced_matching(g, es) for es in groups.values())
        if count > 2 * d * d - 2 * d + 1 or not valid:
            res.add(label, False, {"edges": g.edges(), "count": count, "delta": d})

    for n in range(1, 8):
        for g in canon.graphs_by_order(n):
            check(g, f"order {n}")
    for k in range(1, max_edges + 1):
        for g in canon.enumerate_graphs(k):
            check(g, f"{k} edges")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, 12)
        check(random_graph(rng, n, rng.random()), "random")
    res.add("all graphs within 2D^2-2D+1", not res.checks)
    return res


def char_bp() -> SuiteResult:
    res = SuiteResult("char-bp")
    for t in range(2, 6):
        for label, g in (("K_t,t", complete_bipartite(t, t)), ("H_t", staircase_split(t)),
                         ("E_t", staircase_bipartite(t))):
            w = balance.charBP_witness(g)
            res.add(f"{label} t={t}", w is not None and balance.verify_balance_witness(g, w),
                    w.to_json() if w else None)
        kw = balance.ktt_witness(t)
        g = complete_bipartite(t, t)
        res.add(f"closed form t={t}", balance.verify_balance_witness(g, kw)
                and kw.cut == kw.inside == t * t // 2)
    two_k3 = make_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    res.add("2K_3 has no witness", balance.charBP_witness(two_k3) is None)
    return res


def lemma_structure(k_values=(4, 6, 8)) -> SuiteResult:
    res = SuiteResult("lemma-structure")
    for k in k_values:
        members = bad = 0
        for g in canon.enumerate_graphs(k):
            rep = balance.in_Ck(g)
            if rep.member:
                members += 1
                if not balance.verify_ck_report(g, rep):
                    bad += 1
                    res.add(f"k={k} {g.edges()}", False, rep.to_json())
        res.add(f"k={k}: {members} members re-verify", bad == 0, {"members": members})
    return res


def constant_regime(workers: int = 1, n_values=(6, 7, 8)) -> SuiteResult:
    res = SuiteResult("constant-regime")
    fam = patterns.family_L(3, 1, 3)
    values = {}
    for n in n_values:
        cert = search.ex2_exact(n, fam, "raw", workers)
        values[n] = cert.value
        res.add(f"ex2({n}, L:3,1,3) = {cert.value}", search.verify_certificate(cert, fam), cert.to_json())
    a, b = sorted(values)[-2:]
    res.add(f"stable at n={a},{b}", values[a] == values[b], values)
    return res


def incidence() -> SuiteResult:
    res = SuiteResult("incidence")
    for q in (2, 3):
        g = constructions.incidence_bipartite(q)
        pts = q * q + q + 1
        c4_free = search.is_kst_free(g, g.n, 2, 2)
        res.add(f"q={q} C4-free", c4_free)
        res.add(f"q={q} regular", all(d == q + 1 for d in g.degrees()))
        res.add(f"q={q} edges", g.num_edges == (q + 1) * pts and g.n == 2 * pts)
    return res


def multicolor_example() -> SuiteResult:
    res = SuiteResult("multicolor")
    c = constructions.multicolor_partition_coloring(12, 3)
    cls = multicolor.classify_colors(c, 2)
    res.add("A_f={3}, B_f={1,2}", cls.A_f == {3} and cls.B_f == {1, 2}, cls.to_json())
    res.add("A_f witnesses verify", multicolor.verify_classification(c, cls))
    grid = multicolor.search_clique_grid(c, 2)
    res.add("clique grid verifies", grid is not None and multicolor.verify_multicolor_b(c, 2, grid), grid)
    return res


def brute_induced(host: SimpleGraph, h: SimpleGraph) -> bool:
    for vs in itertools.permutations(range(host.n), h.n):
        if all(h.has_edge(a, b) == host.has_edge(vs[a], vs[b]) for a, b in itertools.combinations(range(h.n), 2)):
            return True
    return False


def brute_weak(host: SimpleGraph, h: SimpleGraph) -> bool:
    comp = {v: i for i, cs in enumerate(h.components()) for v in cs}
    for vs in itertools.permutations(range(host.n), h.n):
        ok = True
        for a, b in itertools.combinations(range(h.n), 2):
            he = host.has_edge(vs[a], vs[b])
            if h.has_edge(a, b) and not he or comp[a] != comp[b] and he:
                ok = False
                break
        if ok:
            return True
    return False


def brute_balanced(c: TwoColoring, g: SimpleGraph) -> bool:
    lo, hi = g.num_edges // 2, (g.num_edges + 1) // 2
    for vs in itertools.permutations(range(c.n), g.n):
        red = sum(c.red.has_edge(vs[a], vs[b]) for a, b in g.edges())
        if red in (lo, hi):
            return True
    return False


def detector_oracle(seed: int = 0, samples: int = 10_000) -> SuiteResult:
    res = SuiteResult("detector-oracle")
    rng = random.Random(seed)
    bad = 0
    for i in range(samples):
        host = random_graph(rng, rng.randint(1, 7), rng.random())
        h = random_graph(rng, rng.randint(1, min(5, host.n)), rng.random())
        kind = i % 3
        if kind == 0:
            got, want = patterns.find_induced(host, h) is not None, brute_induced(host, h)
        elif kind == 1:
            got, want = patterns.find_weakly_induced(host, h) is not None, brute_weak(host, h)
        else:
            if h.num_edges == 0:
                h = make_graph(max(h.n, 2), [(0, 1)])
            if h.n > host.n:
                continue
            c = TwoColoring(host.n, host)
            got, want = patterns.find_balanced_copy(c, h) is not None, brute_balanced(c, h)
        if got != want:
            bad += 1
            if bad <= 10:
                res.add(f"sample {i}", False, {"host": host.edges(), "n": host.n, "pattern": h.edges(),
                                               "k": h.n, "kind": kind, "got": got})
    res.add(f"{samples} samples agree", bad == 0, {"disagreements": bad})
    return res


def determinism(workers: tuple[int, int] = (1, 8)) -> SuiteResult:
    res = SuiteResult("determinism")
    for n, fam in ((6, patterns.family_F(2, 2)), (7, patterns.family_L(2, 2, 2))):
        outs = [json.dumps(search.ex2_exact(n, fam, "raw", w).to_json(), sort_keys=True) for w in workers]
        res.add(f"ex2({n}, {fam.name}) identical at workers {workers}", len(set(outs)) == 1)
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "ex2-degenerate": ex2_degenerate,
    "layered": layered_avoidance,
    "lower-bound": lower_bound,
    "ramsey": ramsey,
    "zarankiewicz": zarankiewicz,
    "strong-coloring": strong_coloring,
    "char-bp": char_bp,
    "lemma-structure": lemma_structure,
    "constant-regime": constant_regime,
    "incidence": incidence,
    "multicolor": multicolor_example,
    "detector-oracle": detector_oracle,
    "determinism": determinism,
}
