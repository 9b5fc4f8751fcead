"""Balanceability, the half-edge family F(G), membership in C_k and constant balancing number."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import canon
from .graphs import SimpleGraph, bits, make_graph
from .params import maximum_matching, matching_number
from .patterns import INDUCED, Member, PatternFamily

SUBSET_SCAN_MAX_N = 24


class BalanceError(ValueError):
    pass


def half_family(g: SimpleGraph, keep_isolated: bool = False) -> PatternFamily:
    """F(G): subgraphs of G (edge subsets) with floor(e/2) <= e(H) <= ceil(e/2), up to isomorphism.

    Members may be complete graphs (e.g. K_2 for G = P_3), so the family is
    built with ``allow_trivial``.
    """
    e = g.num_edges
    if e < 1:
        raise BalanceError("F(G) needs at least one edge")
    edges = g.edges()
    lo, hi = e // 2, (e + 1) // 2
    seen: dict[str, SimpleGraph] = {}
    for size in sorted({lo, hi}):
        for mask in _subsets_of_size(len(edges), size):
            h = make_graph(g.n, [edges[i] for i in bits(mask)])
            if not keep_isolated:
                h = h.without_isolated()
            cert = canon.certificate(h)
            seen.setdefault(cert, h)
    members = tuple(Member(seen[c], INDUCED, c) for c in sorted(seen))
    return PatternFamily(members, "half", allow_trivial=True)


def _subsets_of_size(m: int, k: int):
    if k == 0:
        yield 0
        return
    x = (1 << k) - 1
    while x < (1 << m):
        yield x
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


@dataclass
class BalanceWitness:
    X: list[int]
    Y: list[int]
    cut: int
    W: list[int]
    inside: int

    def to_json(self) -> dict:
        return {"X": self.X, "Y": self.Y, "e_XY": self.cut, "W": self.W, "e_W": self.inside}


def _subset_edge_counts(g: SimpleGraph) -> np.ndarray:
    """e(S) for every vertex subset S, indexed by bitmask."""
    n = g.n
    counts = np.zeros(1 << n, dtype=np.int32)
    for v in range(n):
        block = np.arange(1 << v, dtype=np.int64)
        counts[1 << v: 1 << (v + 1)] = counts[: 1 << v] + np.bitwise_count(block & g.adj[v]).astype(np.int32)
    return counts


def _subset_degree_sums(g: SimpleGraph) -> np.ndarray:
    n = g.n
    sums = np.zeros(1 << n, dtype=np.int32)
    for v in range(n):
        sums[1 << v: 1 << (v + 1)] = sums[: 1 << v] + g.degree(v)
    return sums


def charBP_witness(g: SimpleGraph) -> Optional[BalanceWitness]:
    """Partition (X, Y) and set W with e(X,Y), e(W) in {floor(e/2), ceil(e/2)}, if both exist.

    Exhaustive over all 2^n subsets; the smallest qualifying masks are returned.
    """
    n = g.n
    if n > SUBSET_SCAN_MAX_N:
        raise BalanceError(f"subset scan supports n <= {SUBSET_SCAN_MAX_N}")
    e = g.num_edges
    if e < 1:
        raise BalanceError("need at least one edge")
    lo, hi = e // 2, (e + 1) // 2
    inside = _subset_edge_counts(g)
    cut = _subset_degree_sums(g) - 2 * inside
    cut_ok = np.flatnonzero((cut == lo) | (cut == hi))
    w_ok = np.flatnonzero((inside == lo) | (inside == hi))
    if cut_ok.size == 0 or w_ok.size == 0:
        return None
    x, w = int(cut_ok[0]), int(w_ok[0])
    all_v = (1 << n) - 1
    return BalanceWitness(list(bits(x)), list(bits(all_v & ~x)), int(cut[x]), list(bits(w)), int(inside[w]))


def verify_balance_witness(g: SimpleGraph, wit: BalanceWitness) -> bool:
    e = g.num_edges
    allowed = (e // 2, (e + 1) // 2)
    if sorted(wit.X + wit.Y) != list(range(g.n)) or set(wit.X) & set(wit.Y):
        return False
    ym = sum(1 << v for v in wit.Y)
    cut = sum((g.adj[v] & ym).bit_count() for v in wit.X)
    wm = sum(1 << v for v in wit.W)
    inside = sum((g.adj[v] & wm).bit_count() for v in wit.W) // 2
    return cut == wit.cut and inside == wit.inside and cut in allowed and inside in allowed


def ktt_witness(t: int) -> BalanceWitness:
    """Closed-form witness for K_{t,t} with parts A = 0..t-1, B = t..2t-1.

    X = A_1 + B_1 with |A_1| = |B_1| = floor(t/2); W = A' + B' with
    |A'| = t (t even) or t-1 (t odd) and |B'| = ceil(t/2).  Both counts are
    floor(t^2/2).
    """
    if t < 1:
        raise BalanceError("need t >= 1")
    h = t // 2
    a1 = list(range(h))
    b1 = list(range(t, t + h))
    X = a1 + b1
    Y = [v for v in range(2 * t) if v not in X]
    a_prime = list(range(t if t % 2 == 0 else t - 1))
    b_prime = list(range(t, t + (t + 1) // 2))
    cut = len(a1) * (t - h) + (t - h) * len(b1)
    inside = len(a_prime) * len(b_prime)
    return BalanceWitness(X, Y, cut, a_prime + b_prime, inside)


@dataclass
class CkReport:
    k: int
    beta: int
    apex: Optional[int]
    member: bool
    beta_upper_ok: Optional[bool] = None                 # (a) beta <= k/2 + 1
    removable_edge: Optional[tuple[int, int]] = None     # (b)
    star_center: Optional[int] = None
    star_leaves: list[int] = field(default_factory=list)
    matching_edges: list[tuple[int, int]] = field(default_factory=list)
    degree_dichotomy: Optional[bool] = None              # (c)
    apex_matching: list[tuple[int, int]] = field(default_factory=list)  # (d)

    def to_json(self) -> dict:
        return {
            "k": self.k, "beta": self.beta, "apex": self.apex, "member": self.member,
            "a_beta_upper": self.beta_upper_ok,
            "b_removable_edge": list(self.removable_edge) if self.removable_edge else None,
            "b_star_center": self.star_center, "b_star_leaves": self.star_leaves,
            "b_matching": [list(e) for e in self.matching_edges],
            "c_degree_dichotomy": self.degree_dichotomy,
            "d_matching_at_apex": [list(e) for e in self.apex_matching],
        }


def _is_matching(edges) -> bool:
    verts = [v for e in edges for v in e]
    return len(verts) == len(set(verts))


def _decomposition(g: SimpleGraph, x: int, half: int):
    """Edge e with G - e = star K_{1,half} at x plus (half-1)K_2."""
    star = {(min(x, v), max(x, v)) for v in bits(g.adj[x])}
    for e in g.edges():
        if e in star:
            continue
        rest = [f for f in g.edges() if f != e and f not in star]
        if len(rest) == half - 1 and _is_matching(rest):
            return e, rest
    return None


def _matching_at(g: SimpleGraph, x: int) -> list[tuple[int, int]]:
    m = maximum_matching(g)
    if any(x in e for e in m):
        return m
    for idx, (y, z) in enumerate(m):
        for a, b in ((y, z), (z, y)):
            if g.has_edge(x, a):
                return m[:idx] + [(min(x, a), max(x, a))] + m[idx + 1:]
    # x's neighbours are all unmatched, contradicting maximality
    u = next(bits(g.adj[x]))
    return m + [(min(x, u), max(x, u))]


def in_Ck(g: SimpleGraph) -> CkReport:
    """Membership in C_k (e = k even, beta >= k/2, a vertex of degree k/2) plus structure witnesses."""
    k = g.num_edges
    if k < 2:
        raise BalanceError("need at least two edges")
    beta = matching_number(g)
    apex = None
    if k % 2 == 0:
        apex = next((v for v in range(g.n) if g.degree(v) == k // 2), None)
    member = k % 2 == 0 and beta >= k // 2 and apex is not None
    rep = CkReport(k, beta, apex, member)
    if not member:
        return rep
    half = k // 2
    rep.beta_upper_ok = beta <= half + 1
    for x in range(g.n):
        if g.degree(x) != half:
            continue
        dec = _decomposition(g, x, half)
        if dec is not None:
            rep.apex = x
            rep.removable_edge, rep.matching_edges = dec
            rep.star_center = x
            rep.star_leaves = list(bits(g.adj[x]))
            break
    rep.degree_dichotomy = all(d <= 3 or d == half for d in g.degrees())
    rep.apex_matching = _matching_at(g, apex)
    return rep


def verify_ck_report(g: SimpleGraph, rep: CkReport) -> bool:
    """Re-check the four structure witnesses of a member from scratch."""
    if not rep.member:
        return False
    half = rep.k // 2
    if not rep.beta_upper_ok or matching_number(g) > half + 1:
        return False
    e = rep.removable_edge
    if e is None or not g.has_edge(*e):
        return False
    rest = g.remove_edge(*e)
    star = [(min(rep.star_center, v), max(rep.star_center, v)) for v in rep.star_leaves]
    if len(star) != half or not _is_matching(rep.matching_edges) or len(rep.matching_edges) != half - 1:
        return False
    if sorted(star + rep.matching_edges) != sorted(rest.edges()):
        return False
    if not rep.degree_dichotomy or not all(d <= 3 or d == half for d in g.degrees()):
        return False
    m = rep.apex_matching
    if not _is_matching(m) or any(not g.has_edge(*f) for f in m):
        return False
    return len(m) == matching_number(g) and any(rep.apex in f for f in m)


@dataclass
class ConstantBalReport:
    value: bool
    k: int
    removed_edge: Optional[tuple[int, int]]
    report: Optional[CkReport]


def constant_bal_predicate(g: SimpleGraph) -> ConstantBalReport:
    """Even k: G in C_k.  Odd k: G - e in C_{k-1} for some edge e (returned)."""
    k = g.num_edges
    if k < 2:
        raise BalanceError("need at least two edges")
    if k % 2 == 0:
        rep = in_Ck(g)
        return ConstantBalReport(rep.member, k, None, rep)
    for e in g.edges():
        if k - 1 < 2:
            break
        rep = in_Ck(g.remove_edge(*e))
        if rep.member:
            return ConstantBalReport(True, k, e, rep)
    return ConstantBalReport(False, k, None, None)


def two_squares(t: int) -> dict[str, bool]:
    """Whether t is a sum of two squares, with squares of positive / non-negative integers."""
    if t < 1:
        raise BalanceError("need t >= 1")
    positive = nonnegative = False
    for a in range(math.isqrt(t) + 1):
        b2 = t - a * a
        b = math.isqrt(b2)
        if b * b == b2:
            nonnegative = True
            if a >= 1 and b >= 1:
                positive = True
    return {"positive": positive, "nonnegative": nonnegative}
