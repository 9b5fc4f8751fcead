"""Exact ex_2, balancing numbers, small Ramsey and Zarankiewicz numbers."""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Optional, Union

from . import canon, graph6
from ._kernel import compile_family, scan_max_min_class, violation
from .colorings import RAW_MAX_N, CANONICAL_MAX_N, TwoColoring, class_sizes, coloring_from_mask
from .graphs import SimpleGraph, complete_graph, make_graph, pair_count
from .patterns import (
    INDUCED,
    Member,
    PatternFamily,
    avoids_family,
    find_balanced_copy,
)


class SearchError(ValueError):
    pass


@dataclass
class ExtremalCertificate:
    quantity: str
    params: dict
    value: int
    witness: Union[TwoColoring, SimpleGraph, None]
    exhaustive: bool = True
    nodes_searched: int = 0
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)

    def to_json(self, timing: bool = False) -> dict:
        out = {"quantity": self.quantity, "params": self.params, "value": self.value,
               "exhaustive": self.exhaustive, "nodes": self.nodes_searched}
        w = self.witness
        if isinstance(w, TwoColoring):
            out["witness"] = w.to_json()
            out["witness_certificate"] = canon.certificate(w.red)
        elif isinstance(w, SimpleGraph):
            out["witness"] = {"graph6": graph6.encode(w)}
        else:
            out["witness"] = None
        out.update(self.extra)
        if timing:
            out["time"] = round(self.wall_time, 3)
        return out


def _family_members(fam: PatternFamily):
    return [(m.graph, m.mode) for m in fam.members]


def _max_min_class(n: int, mode: str, workers: int, lower_bound: int, members, strict_weak: bool,
                   balanced: Optional[SimpleGraph]) -> tuple[int, Optional[TwoColoring], int]:
    if mode == "raw":
        if n > RAW_MAX_N:
            raise SearchError(f"raw mode supports n <= {RAW_MAX_N}")
        cf = compile_family(n, members, strict_weak, balanced)
        value, mask, nodes = scan_max_min_class(cf, workers, lower_bound)
        return value, (coloring_from_mask(n, mask) if mask >= 0 else None), nodes
    if mode == "canonical":
        if n > CANONICAL_MAX_N:
            raise SearchError(f"canonical mode supports n <= {CANONICAL_MAX_N}")
        compiled = {v: compile_family(v, members, strict_weak, balanced) for v in range(1, n + 1)}
        nodes = 0

        def keep(g: SimpleGraph) -> bool:
            nonlocal nodes
            nodes += 1
            return violation(compiled[g.n], g.edge_mask()) == -1

        best, witness = -1, None
        for g in canon.graphs_by_order(n, keep):
            c = TwoColoring(n, g)
            m = class_sizes(c)[2]
            if m > best:
                best, witness = m, c
        return best, witness, nodes
    raise SearchError(f"unknown search mode {mode!r}")


def ex2_exact(n: int, fam: PatternFamily, mode: str = "raw", workers: int = 1,
              lower_bound: int = 0, strict_weak: bool = False) -> ExtremalCertificate:
    """Largest min{e(R), e(B)} over colourings of K_n with no induced monochromatic member of ``fam``.

    At fixed n the value is always finite; 0 is attained by a monochromatic
    colouring whenever ``fam`` has no complete or empty member.
    """
    if fam.allow_trivial is False:
        for m in fam.members:
            if m.graph.num_edges in (0, pair_count(m.graph.n)):
                raise SearchError("family contains a complete or empty graph")
    t0 = time.perf_counter()
    value, witness, nodes = _max_min_class(n, mode, workers, lower_bound, _family_members(fam),
                                           strict_weak, None)
    return ExtremalCertificate("ex2", {"n": n, "family": fam.name, "mode": mode}, value, witness,
                               True, nodes, time.perf_counter() - t0)


def bal_exact(n: int, g: SimpleGraph, mode: str = "raw", workers: int = 1,
              with_half_family: bool = False) -> ExtremalCertificate:
    """Forcing threshold: largest min class over colourings of K_n with no balanced copy of g.

    ``-1`` means every colouring already contains a balanced copy.  The
    ``unbalanced_at_n`` flag marks a value equal to floor(C(n,2)/2): no
    colouring at this n forces a balanced copy.
    """
    if g.n > n:
        raise SearchError(f"pattern order {g.n} exceeds n={n}")
    if g.num_edges < 1:
        raise SearchError("bal needs at least one edge")
    t0 = time.perf_counter()
    value, witness, nodes = _max_min_class(n, mode, workers, 0, [], False, g)
    extra = {"unbalanced_at_n": value == pair_count(n) // 2}
    if with_half_family:
        from .balance import half_family
        hf = ex2_exact(n, half_family(g), mode, workers)
        extra["half_family_value"] = hf.value
    return ExtremalCertificate("bal", {"n": n, "graph": graph6.encode(g), "mode": mode}, value,
                               witness, True, nodes, time.perf_counter() - t0, extra)


def verify_certificate(cert: ExtremalCertificate, fam: Optional[PatternFamily] = None,
                       g: Optional[SimpleGraph] = None) -> bool:
    """Re-check a witness with the backtracking detectors (independent of the compiled tables)."""
    w = cert.witness
    if cert.quantity == "ex2":
        if not isinstance(w, TwoColoring) or fam is None:
            return False
        return class_sizes(w)[2] == cert.value and avoids_family(w, fam)[0]
    if cert.quantity == "bal":
        if cert.value == -1:
            return w is None
        return (isinstance(w, TwoColoring) and g is not None and class_sizes(w)[2] == cert.value
                and find_balanced_copy(w, g) is None)
    if cert.quantity == "zarankiewicz":
        m, n, s, t = (cert.params[k] for k in ("m", "n", "s", "t"))
        return isinstance(w, SimpleGraph) and w.num_edges == cert.value and is_kst_free(w, m, s, t)
    return False


# ---------------------------------------------------------------- Ramsey numbers

RAMSEY_LITERATURE = {1: 1, 2: 2, 3: 6, 4: 18}
RAMSEY_RECOMPUTE_MAX = 3
BIPARTITE_RAMSEY_LITERATURE = {1: 1, 2: 5, 3: 17}
BIPARTITE_RAMSEY_RECOMPUTE_MAX = 2


def ramsey_check(k: int, n: int) -> tuple[bool, Optional[TwoColoring]]:
    """True iff every 2-colouring of K_n has a monochromatic K_k; else a colouring without one."""
    if n > RAW_MAX_N:
        raise SearchError(f"ramsey_check is exhaustive only for n <= {RAW_MAX_N}")
    if k <= 1:
        return n >= 1, None if n >= 1 else TwoColoring(0, make_graph(0, []))
    if k > n:
        return False, TwoColoring(n, make_graph(n, []))
    fam = PatternFamily((Member(complete_graph(k), INDUCED, f"K{k}"),), f"K{k}", allow_trivial=True)
    compiled = {v: compile_family(v, _family_members(fam)) for v in range(1, n + 1)}
    for g in canon.graphs_by_order(n, lambda h: violation(compiled[h.n], h.edge_mask()) == -1):
        return False, TwoColoring(n, g)
    return True, None


def _value_lookup(k: int, table: dict, recompute_max: int, check, allow_literature: bool, name: str):
    if k <= recompute_max:
        n = 1
        while not check(k, n)[0]:
            n += 1
        return n, "computed"
    if k in table and allow_literature:
        return table[k], "literature"
    if k in table:
        raise SearchError(f"{name}({k}) = {table[k]} is a literature value; pass allow_literature")
    known = ", ".join(f"{name}({i})" for i in sorted(table))
    raise SearchError(f"{name}({k}) unknown; known range: {known}")


def ramsey_value(k: int, allow_literature: bool = False) -> tuple[int, str]:
    return _value_lookup(k, RAMSEY_LITERATURE, RAMSEY_RECOMPUTE_MAX, ramsey_check, allow_literature, "R")


def _has_mono_ktt(rows: list[int], t: int, n: int) -> bool:
    full = (1 << n) - 1
    for combo in itertools.combinations(rows, t):
        red = full
        blue = full
        for r in combo:
            red &= r
            blue &= ~r
        if red.bit_count() >= t or (blue & full).bit_count() >= t:
            return True
    return False


def bipartite_ramsey_check(t: int, n: int) -> tuple[bool, Optional[list[int]]]:
    """True iff every 2-colouring of K_{n,n} has a monochromatic K_{t,t}.

    Rows of the colour matrix are n-bit red masks taken in non-decreasing
    order (row permutations are symmetries); returns a bad matrix otherwise.
    """
    if n > 5:
        raise SearchError("bipartite_ramsey_check is exhaustive only for n <= 5")
    if t > n:
        return False, [0] * n
    if t <= 0:
        return True, None
    full = (1 << n) - 1
    rows: list[int] = []

    def ok_with(r: int) -> bool:
        for combo in itertools.combinations(rows, t - 1):
            red = r
            blue = full & ~r
            for x in combo:
                red &= x
                blue &= ~x
            if red.bit_count() >= t or blue.bit_count() >= t:
                return False
        return True

    def rec(start: int) -> bool:
        if len(rows) == n:
            return True
        for r in range(start, full + 1):
            if ok_with(r):
                rows.append(r)
                if rec(r):
                    return True
                rows.pop()
        return False

    if rec(0):
        return False, list(rows)
    return True, None


def bipartite_ramsey_value(t: int, allow_literature: bool = False) -> tuple[int, str]:
    return _value_lookup(t, BIPARTITE_RAMSEY_LITERATURE, BIPARTITE_RAMSEY_RECOMPUTE_MAX,
                         bipartite_ramsey_check, allow_literature, "BR")


# ---------------------------------------------------------------- Zarankiewicz

def kst_bound_value(m: int, n: int, s: int, t: int) -> float:
    return (s - 1) ** (1 / t) * (n - t + 1) * m ** (1 - 1 / t) + (t - 1) * m


def bipartite_from_rows(m: int, n: int, rows: list[int]) -> SimpleGraph:
    return make_graph(m + n, [(i, m + j) for i, r in enumerate(rows) for j in range(n) if r >> j & 1])


def is_kst_free(g: SimpleGraph, m: int, s: int, t: int) -> bool:
    """No s vertices of X = {0..m-1} with t common neighbours."""
    for combo in itertools.combinations(range(m), s):
        common = -1
        for v in combo:
            common &= g.adj[v]
        if common != -1 and common.bit_count() >= t:
            return False
    return True


def zarankiewicz_exact(m: int, n: int, s: int, t: int) -> ExtremalCertificate:
    """z(m, n; s, t): most edges of a bipartite graph (|X| = m, |Y| = n) with no K_{s,t},
    s vertices in X and t in Y.

    Branch and bound over the m rows of the biadjacency matrix, rows sorted
    by weight (ties: smaller mask first), first row fixed to its low bits up
    to column permutation.  For m*n > 36 the Kovari-Sos-Turan value also
    caps the search.
    """
    if min(m, n, s, t) < 1:
        raise SearchError("parameters must be positive")
    if m * n > 64:
        raise SearchError("zarankiewicz_exact supports m*n <= 64")
    t0 = time.perf_counter()
    if s > m or t > n:
        rows = [(1 << n) - 1] * m
        return ExtremalCertificate("zarankiewicz", {"m": m, "n": n, "s": s, "t": t}, m * n,
                                   bipartite_from_rows(m, n, rows), True, 1, time.perf_counter() - t0)
    cap = kst_bound_value(m, n, s, t)
    # the bound only prunes outside the exhaustive range, so small cases stay an independent check
    ceiling = m * n if m * n <= 36 else min(m * n, math.ceil(cap) - 1)
    keys = {x: (x.bit_count(), -x) for x in range(1 << n)}
    masks = sorted(keys, key=keys.__getitem__, reverse=True)
    best = -1
    best_rows: list[int] = []
    rows: list[int] = []
    nodes = 0

    def fits(r: int) -> bool:
        for combo in itertools.combinations(rows, s - 1):
            common = r
            for x in combo:
                common &= x
            if common.bit_count() >= t:
                return False
        return True

    def rec(edges: int, bound_key) -> bool:
        nonlocal best, best_rows, nodes
        nodes += 1
        if len(rows) == m:
            if edges > best:
                best, best_rows = edges, list(rows)
            return best >= ceiling
        left = m - len(rows)
        for r in masks:
            if bound_key is not None and keys[r] > bound_key:
                continue
            if edges + left * r.bit_count() <= best:
                return False
            if not rows and r != (1 << r.bit_count()) - 1:
                continue
            if fits(r):
                rows.append(r)
                done = rec(edges + r.bit_count(), keys[r])
                rows.pop()
                if done:
                    return True
        return False

    rec(0, None)
    return ExtremalCertificate("zarankiewicz", {"m": m, "n": n, "s": s, "t": t}, best,
                               bipartite_from_rows(m, n, best_rows), True, nodes,
                               time.perf_counter() - t0, {"kst_bound": cap})


def theorem_constant(r: int, t: int) -> int:
    """r * (2 T^2 - 6 T + 5) with T = R(2t); literature Ramsey values are allowed here."""
    if r < 2 or t < 2:
        raise SearchError("need r >= 2 and t >= 2")
    try:
        big_t, _ = ramsey_value(2 * t, allow_literature=True)
    except SearchError as exc:
        raise SearchError(f"R({2 * t}) unknown: {exc}") from None
    return r * (2 * big_t * big_t - 6 * big_t + 5)
