"""Extremal colourings and graphs behind the lower bounds, plus KST evaluators."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .colorings import KColoring, TwoColoring, kcoloring_from_parts
from .graphs import (
    SimpleGraph,
    complement,
    disjoint_union,
    complete_graph,
    empty_graph,
    index_pairs,
    make_graph,
    star_graph,
)


class ConstructionError(ValueError):
    pass


def matching_coloring(n: int) -> TwoColoring:
    """Red = floor(n/2) disjoint edges."""
    if n < 2:
        raise ConstructionError("need n >= 2")
    return TwoColoring(n, make_graph(n, [(2 * i, 2 * i + 1) for i in range(n // 2)]))


def star_coloring(n: int) -> TwoColoring:
    """Red = K_{1,n-1} centred at 0."""
    if n < 2:
        raise ConstructionError("need n >= 2")
    return TwoColoring(n, star_graph(n - 1))


def clique_blowup_coloring(n: int, t: int) -> TwoColoring:
    """Blue = floor(n/(t-1)) disjoint K_{t-1}; leftover vertices only see red."""
    if t < 3 or n < t - 1:
        raise ConstructionError("need t >= 3 and n >= t - 1")
    parts = [complete_graph(t - 1)] * (n // (t - 1))
    blue = disjoint_union(parts + [empty_graph(n % (t - 1))])
    return TwoColoring(n, complement(blue))


def layered_parts(n: int, r: int, s: int, t: int) -> tuple[list[list[int]], list[int]]:
    w = min(r, s)
    size = t - 1
    parts = [list(range(i * size, (i + 1) * size)) for i in range(w - 1)]
    rest = list(range((w - 1) * size, n))
    return parts, rest


def layered_coloring(n: int, r: int, s: int, t: int) -> TwoColoring:
    """V = V_1..V_{w-1} (each of size t-1) + W, w = min(r, s), W last.

    Red: inside W and between distinct V_i, V_j.  Blue: inside each V_i and V_i-W.
    """
    if not (t >= s >= 2 and r >= 2):
        raise ConstructionError("need t >= s >= 2 and r >= 2")
    w = min(r, s)
    if n <= (w - 1) * (t - 1):
        raise ConstructionError(f"need n > {(w - 1) * (t - 1)}")
    parts, rest = layered_parts(n, r, s, t)
    part_of = {v: i for i, p in enumerate(parts) for v in p}
    red = []
    for u, v in index_pairs(n):
        pu, pv = part_of.get(u), part_of.get(v)
        if (pu is None and pv is None) or (pu is not None and pv is not None and pu != pv):
            red.append((u, v))
    return TwoColoring(n, make_graph(n, red))


def layered_blue_count(n: int, r: int, s: int, t: int) -> int:
    w = min(r, s)
    return (w - 1) * (t - 1) * (n - (w - 1) * (t - 1)) + (w - 1) * math.comb(t - 1, 2)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, math.isqrt(q) + 1))


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalised homogeneous coordinates of PG(2, q): first nonzero entry is 1."""
    pts = []
    for a in range(q):
        for b in range(q):
            pts.append((1, a, b))
    for b in range(q):
        pts.append((0, 1, b))
    pts.append((0, 0, 1))
    return pts


def incidence_bipartite(q: int) -> SimpleGraph:
    """Point-line incidence graph of PG(2, q): points 0..N-1, lines N..2N-1."""
    if not _is_prime(q):
        raise ConstructionError(f"q={q} is not prime")
    pts = projective_points(q)
    size = len(pts)
    edges = []
    for i, p in enumerate(pts):
        for j, line in enumerate(pts):
            if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0:
                edges.append((i, size + j))
    return make_graph(2 * size, edges)


def bipartite_free_coloring(n: int, q: int | None = None, blue: SimpleGraph | None = None) -> TwoColoring:
    """Blue = a bipartite K_{s,t}-free graph padded to n vertices; red = the rest.

    Uses the PG(2, q) incidence graph by default; any other graph (e.g. a
    norm graph read from graph6) can be supplied as ``blue``.
    """
    if blue is None:
        if q is None:
            raise ConstructionError("give q or a blue graph")
        blue = incidence_bipartite(q)
    if n < blue.n:
        raise ConstructionError(f"need n >= {blue.n}")
    padded = SimpleGraph(n, blue.adj + (0,) * (n - blue.n))
    return TwoColoring(n, complement(padded))


def balanced_parts(n: int, parts: int) -> list[list[int]]:
    base, extra = divmod(n, parts)
    out, start = [], 0
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        out.append(list(range(start, start + size)))
        start += size
    return out


def multicolor_partition_coloring(n: int, k: int) -> KColoring:
    """k-1 near-equal parts, part i coloured i inside; all cross edges colour k."""
    if k < 3 or n < k - 1:
        raise ConstructionError("need k >= 3 and n >= k - 1")
    part_of = {v: i + 1 for i, p in enumerate(balanced_parts(n, k - 1)) for v in p}
    assignment = {(u, v): part_of[u] if part_of[u] == part_of[v] else k for u, v in index_pairs(n)}
    return kcoloring_from_parts(n, k, assignment)


@dataclass(frozen=True)
class BoundReport:
    m: int
    n: int
    s: int
    t: int
    zarankiewicz_bound: float
    extremal_bound: float


def kst_bounds(m: int, n: int, s: int, t: int) -> BoundReport:
    """KST values: z(m,n;s,t) < (s-1)^(1/t) (n-t+1) m^(1-1/t) + (t-1) m and
    ex(n, K_{s,t}) <= ((t-1)^(1/s) n^(2-1/s) + (s-1) n) / 2.

    Floating point; for reporting and pruning only.
    """
    if min(m, n, s, t) < 1:
        raise ConstructionError("parameters must be positive")
    if s > t:
        raise ConstructionError("need s <= t")
    z = (s - 1) ** (1 / t) * (n - t + 1) * m ** (1 - 1 / t) + (t - 1) * m
    ex = 0.5 * ((t - 1) ** (1 / s) * n ** (2 - 1 / s) + (s - 1) * n)
    return BoundReport(m, n, s, t, z, ex)


CONSTRUCTIONS = {
    "matching": matching_coloring,
    "star": star_coloring,
    "blowup": clique_blowup_coloring,
    "layered": layered_coloring,
    "incidence": bipartite_free_coloring,
    "multicolor": multicolor_partition_coloring,
}
