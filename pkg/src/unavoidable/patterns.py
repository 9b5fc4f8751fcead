"""Detection of induced, weakly induced and balanced monochromatic patterns."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from . import graph6
from .colorings import TwoColoring
from .graphs import (
    SimpleGraph,
    bits,
    complement,
    complete_bipartite,
    complete_split,
    index_pairs,
    matching_graph,
    pair_count,
    pair_index,
    star_graph,
)

INDUCED = "induced-mono"
WEAK = "weakly-induced-mono"
MODES = (INDUCED, WEAK)


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class Member:
    graph: SimpleGraph
    mode: str = INDUCED
    label: str = ""


@dataclass(frozen=True)
class PatternFamily:
    members: tuple[Member, ...]
    name: str = ""
    allow_trivial: bool = False

    def __post_init__(self):
        for m in self.members:
            if m.mode not in MODES:
                raise PatternError(f"unknown containment mode {m.mode!r}")
            e, full = m.graph.num_edges, pair_count(m.graph.n)
            if not self.allow_trivial and (e == 0 or e == full):
                raise PatternError(f"member {m.label or m.graph} is complete or empty")
            if m.mode == WEAK and m.graph.is_connected():
                raise PatternError(f"weakly induced member {m.label or m.graph} must be disconnected")

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def union(self, other: "PatternFamily", name: str = "") -> "PatternFamily":
        return PatternFamily(self.members + other.members, name or f"{self.name}+{other.name}",
                             self.allow_trivial or other.allow_trivial)


@dataclass
class PatternWitness:
    color: str
    vertices: list[int]
    pattern: Optional[SimpleGraph] = None
    mode: str = INDUCED
    edges: list[tuple[int, int]] = field(default_factory=list)
    red_count: Optional[int] = None

    def to_json(self) -> dict:
        out = {"color": self.color, "vertices": self.vertices, "mode": self.mode}
        if self.pattern is not None:
            out["pattern"] = graph6.encode(self.pattern)
        if self.edges:
            out["edges"] = [list(e) for e in self.edges]
        if self.red_count is not None:
            out["red_count"] = self.red_count
        return out


# ---------------------------------------------------------------- families

def family_F(s: int, t: int) -> PatternFamily:
    """F_{s,t} = {K_{s,t}, S_{t,t}}."""
    return PatternFamily((Member(complete_bipartite(s, t), INDUCED, f"K_{s},{t}"),
                          Member(complete_split(t, t), INDUCED, f"S_{t},{t}")), f"F:{s},{t}")


def family_L(r: int, s: int, t: int) -> PatternFamily:
    """L_{r,s,t} = {rK_2} + F_{s,t}."""
    m = PatternFamily((Member(matching_graph(r), INDUCED, f"{r}K2"),), f"{r}K2")
    return m.union(family_F(s, t), f"L:{r},{s},{t}")


def single(h: SimpleGraph, mode: str = INDUCED, label: str = "") -> PatternFamily:
    return PatternFamily((Member(h, mode, label),), label or graph6.encode(h))


# ---------------------------------------------------------------- induced search

def _search_order(h: SimpleGraph) -> list[int]:
    degs = h.degrees()
    freq: dict[int, int] = {}
    for d in degs:
        freq[d] = freq.get(d, 0) + 1
    remaining = set(range(h.n))
    order: list[int] = []
    placed = 0
    while remaining:
        # rarest degree first, then most links into the placed prefix
        v = min(remaining, key=lambda u: (-(h.adj[u] & placed).bit_count(), freq[degs[u]], -degs[u], u))
        order.append(v)
        remaining.discard(v)
        placed |= 1 << v
    return order


def _embed(host: SimpleGraph, h: SimpleGraph, compatible) -> Optional[list[int]]:
    """Generic injective backtracking; ``compatible(hv, placed_h, cand)`` narrows candidates."""
    if h.n > host.n:
        return None
    order = _search_order(h)
    image = [-1] * h.n
    hdeg = h.degrees()
    hostdeg = host.degrees()
    full = (1 << host.n) - 1
    deg_ok = [0] * h.n
    for hv in range(h.n):
        m = 0
        for v in range(host.n):
            if hostdeg[v] >= hdeg[hv]:
                m |= 1 << v
        deg_ok[hv] = m

    def rec(depth: int, used: int) -> bool:
        if depth == h.n:
            return True
        hv = order[depth]
        cand = full & ~used & deg_ok[hv]
        cand = compatible(hv, order[:depth], image, cand)
        for v in bits(cand):
            image[hv] = v
            if rec(depth + 1, used | (1 << v)):
                return True
        image[hv] = -1
        return False

    return list(image) if rec(0, 0) else None


def find_induced(host: SimpleGraph, h: SimpleGraph) -> Optional[list[int]]:
    """Vertex list ``U`` (``U[i]`` is the image of pattern vertex ``i``) with host[U] == h, or None."""
    full = (1 << host.n) - 1

    def compatible(hv, placed, image, cand):
        for hu in placed:
            if h.adj[hv] >> hu & 1:
                cand &= host.adj[image[hu]]
            else:
                cand &= full & ~host.adj[image[hu]]
        return cand

    return _embed(host, h, compatible)


def find_subgraph(host: SimpleGraph, h: SimpleGraph) -> Optional[list[int]]:
    """Plain (not necessarily induced) subgraph embedding."""

    def compatible(hv, placed, image, cand):
        for hu in placed:
            if h.adj[hv] >> hu & 1:
                cand &= host.adj[image[hu]]
        return cand

    return _embed(host, h, compatible)


def find_weakly_induced(host: SimpleGraph, h: SimpleGraph, strict: bool = False) -> Optional[list[int]]:
    """Embed h as a subgraph with no host edge between images of distinct components.

    ``strict`` additionally requires each component image to be induced,
    which makes the whole image induced.
    """
    if strict:
        return find_induced(host, h)
    comp_of = [0] * h.n
    for ci, comp in enumerate(h.components()):
        for v in comp:
            comp_of[v] = ci
    full = (1 << host.n) - 1

    def compatible(hv, placed, image, cand):
        for hu in placed:
            if h.adj[hv] >> hu & 1:
                cand &= host.adj[image[hu]]
            elif comp_of[hu] != comp_of[hv]:
                cand &= full & ~host.adj[image[hu]]
        return cand

    return _embed(host, h, compatible)


def find_induced_mono(c: TwoColoring, h: SimpleGraph) -> Optional[PatternWitness]:
    """Induced red copy of h, else induced blue copy (= induced red copy of the complement)."""
    u = find_induced(c.red, h)
    if u is not None:
        return PatternWitness("red", u, h, INDUCED)
    u = find_induced(c.red, complement(h))
    if u is not None:
        return PatternWitness("blue", u, h, INDUCED)
    return None


def find_weakly_induced_mono(c: TwoColoring, h: SimpleGraph, strict: bool = False) -> Optional[PatternWitness]:
    for color in ("red", "blue"):
        u = find_weakly_induced(c.graph(color), h, strict)
        if u is not None:
            return PatternWitness(color, u, h, WEAK)
    return None


def avoids_family(c: TwoColoring, fam: PatternFamily, strict_weak: bool = False
                  ) -> tuple[bool, Optional[tuple[int, PatternWitness]]]:
    for idx, m in enumerate(fam.members):
        if m.graph.n > c.n:
            continue
        if m.mode == INDUCED:
            w = find_induced_mono(c, m.graph)
        else:
            w = find_weakly_induced_mono(c, m.graph, strict_weak)
        if w is not None:
            return False, (idx, w)
    return True, None


# ---------------------------------------------------------------- balanced copies

def balanced_counts(e: int) -> tuple[int, int]:
    return e // 2, (e + 1) // 2


@lru_cache(maxsize=256)
def _copy_masks_cached(n: int, g6: str) -> tuple[tuple[int, tuple[int, ...]], ...]:
    g = graph6.decode(g6)
    edges = g.edges()
    seen: dict[int, tuple[int, ...]] = {}
    for image in itertools.permutations(range(n), g.n):
        m = 0
        for a, b in edges:
            m |= 1 << pair_index(image[a], image[b])
        if m not in seen:
            seen[m] = image
    return tuple(sorted(seen.items()))


def copy_masks(n: int, g: SimpleGraph) -> list[tuple[int, tuple[int, ...]]]:
    """Every copy of g in K_n once, as (edge mask, one vertex image), ordered by mask."""
    if g.n > n:
        return []
    return list(_copy_masks_cached(n, graph6.encode(g)))


def find_balanced_copy(c: TwoColoring, g: SimpleGraph) -> Optional[PatternWitness]:
    lo, hi = balanced_counts(g.num_edges)
    red = c.red_mask
    for mask, image in copy_masks(c.n, g):
        r = (mask & red).bit_count()
        if r == lo or r == hi:
            edges = [(min(image[a], image[b]), max(image[a], image[b])) for a, b in g.edges()]
            return PatternWitness("mixed", list(image), g, "balanced", edges, r)
    return None


# ---------------------------------------------------------------- witness checks

def verify_witness(c: TwoColoring, w: PatternWitness, strict_weak: bool = False) -> bool:
    if w.mode == "balanced":
        g = w.pattern
        if len(set(w.vertices)) != len(w.vertices) or g is None:
            return False
        expect = sorted((min(w.vertices[a], w.vertices[b]), max(w.vertices[a], w.vertices[b]))
                        for a, b in g.edges())
        if sorted(w.edges) != expect:
            return False
        r = sum(c.red.has_edge(a, b) for a, b in w.edges)
        return r == w.red_count and r in balanced_counts(g.num_edges)
    host = c.graph(w.color)
    h = w.pattern
    if h is None or len(w.vertices) != h.n or len(set(w.vertices)) != h.n:
        return False
    comp_of = {}
    for ci, comp in enumerate(h.components()):
        for v in comp:
            comp_of[v] = ci
    for a, b in index_pairs(h.n):
        he = h.has_edge(a, b)
        ge = host.has_edge(w.vertices[a], w.vertices[b])
        if w.mode == INDUCED or strict_weak:
            if he != ge:
                return False
        elif he and not ge:
            return False
        elif comp_of[a] != comp_of[b] and ge:
            return False
    return True


# ---------------------------------------------------------------- grid alignment

def _mono_clique_cols(c: TwoColoring, row: Sequence[int], cols: Sequence[int]) -> list[int]:
    """Largest set of columns whose row vertices form a monochromatic clique (exact)."""
    red = c.red
    best: list[int] = []
    for colour_red in (True, False):
        # adjacency among cols in the chosen colour
        nb = {}
        for a in cols:
            m = 0
            for b in cols:
                if a != b and red.has_edge(row[a], row[b]) == colour_red:
                    m |= 1 << b
            nb[a] = m
        cur: list[int] = []

        def grow(cand: int) -> None:
            nonlocal best
            if len(cur) + cand.bit_count() <= len(best):
                return
            if not cand:
                best = list(cur)
                return
            while cand:
                if len(cur) + cand.bit_count() <= len(best):
                    return
                v = (cand & -cand).bit_length() - 1
                cur.append(v)
                grow(cand & nb[v])
                cur.pop()
                cand &= ~(1 << v)

        grow(sum(1 << a for a in cols))
    return sorted(best)


def grid_alignment(c: TwoColoring, m: int, q: int, ell: int, layout: Sequence[Sequence[int]],
                   exhaustive_limit: int = 20) -> Optional[list[int]]:
    """Columns L, |L| = ell, such that every row restricted to L is a monochromatic clique.

    First shrinks the column set row by row to a largest monochromatic clique;
    if that leaves fewer than ``ell`` columns and ``q <= exhaustive_limit``,
    falls back to exhaustive backtracking over column sets.
    """
    if len(layout) != m or any(len(r) != q for r in layout):
        raise PatternError("layout shape does not match m x q")
    flat = [v for r in layout for v in r]
    if len(set(flat)) != len(flat) or any(not 0 <= v < c.n for v in flat):
        raise PatternError("layout vertices must be distinct vertices of the coloring")
    if ell > q:
        return None
    cols = list(range(q))
    for row in layout:
        cols = _mono_clique_cols(c, row, cols)
        if len(cols) < ell:
            break
    if len(cols) >= ell:
        return cols[:ell]
    if q > exhaustive_limit:
        return None
    red = c.red
    chosen: list[int] = []
    row_color: list[Optional[bool]] = [None] * m

    def fits(j: int) -> Optional[list[Optional[bool]]]:
        new = list(row_color)
        for i, row in enumerate(layout):
            for jj in chosen:
                col = red.has_edge(row[j], row[jj])
                if new[i] is None:
                    new[i] = col
                elif new[i] != col:
                    return None
        return new

    def rec(start: int) -> bool:
        nonlocal row_color
        if len(chosen) == ell:
            return True
        for j in range(start, q - (ell - len(chosen)) + 1):
            new = fits(j)
            if new is None:
                continue
            saved = row_color
            row_color = new
            chosen.append(j)
            if rec(j + 1):
                return True
            chosen.pop()
            row_color = saved
        return False

    return list(chosen) if rec(0) else None


def verify_alignment(c: TwoColoring, layout: Sequence[Sequence[int]], cols: Sequence[int]) -> bool:
    for row in layout:
        colours = {c.red.has_edge(row[a], row[b]) for a, b in itertools.combinations(cols, 2)}
        if len(colours) > 1:
            return False
    return True


def star_family(t: int) -> PatternFamily:
    return single(star_graph(t), INDUCED, f"K_1,{t}")
