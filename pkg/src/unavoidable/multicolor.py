"""Colour classification for k-colourings and the clique grid of the multicolour theorem.

The classifier takes a single size ``t`` and tests each colour graph for an
induced K_{1,t} or an induced tK_2.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .colorings import KColoring
from .graphs import SimpleGraph, bits, matching_graph, star_graph
from .patterns import find_induced

SEARCH_MAX_N = 14


class MulticolorError(ValueError):
    pass


@dataclass
class ColorClassification:
    t: int
    A_f: set[int]
    B_f: set[int]
    witnesses: dict[int, tuple[str, list[int]]] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "A_f": sorted(self.A_f),
            "B_f": sorted(self.B_f),
            "witnesses": {str(i): {"pattern": p, "vertices": vs} for i, (p, vs) in sorted(self.witnesses.items())},
        }


def _patterns(t: int) -> list[tuple[str, SimpleGraph]]:
    return [(f"K_1,{t}", star_graph(t)), (f"{t}K_2", matching_graph(t))]


def classify_colors(c: KColoring, t: int) -> ColorClassification:
    """A_f: colours whose graph has an induced K_{1,t} or induced tK_2; B_f: the rest."""
    if t < 2:
        raise MulticolorError("need t >= 2")
    a_f, b_f, wits = set(), set(), {}
    for i, gi in c.color_graphs().items():
        for label, h in _patterns(t):
            emb = find_induced(gi, h) if h.n <= gi.n else None
            if emb is not None:
                a_f.add(i)
                wits[i] = (label, emb)
                break
        else:
            b_f.add(i)
    return ColorClassification(t, a_f, b_f, wits)


def verify_classification(c: KColoring, cls: ColorClassification) -> bool:
    """Each A_f witness must induce its pattern in its colour graph."""
    if cls.A_f | cls.B_f != set(range(1, c.k + 1)) or cls.A_f & cls.B_f:
        return False
    pats = dict(_patterns(cls.t))
    for i in cls.A_f:
        label, vs = cls.witnesses[i]
        h = pats[label]
        gi = c.color_graph(i)
        if len(set(vs)) != h.n:
            return False
        for a, b in itertools.combinations(range(h.n), 2):
            if h.has_edge(a, b) != gi.has_edge(vs[a], vs[b]):
                return False
    return True


def _is_mono_clique(c: KColoring, vs: Sequence[int], colour: int) -> bool:
    return all(c.color_of(u, v) == colour for u, v in itertools.combinations(vs, 2))


def verify_multicolor_b(c: KColoring, t: int, cliques: Mapping[int, Sequence[int]],
                        cls: Optional[ColorClassification] = None) -> bool:
    """Every pair of B_f cliques spans a monochromatic K_{t,t} whose colour is in A_f.

    ``cliques`` must map each colour of B_f to t vertices forming a clique of
    that colour; anything else raises MulticolorError.
    """
    cls = cls or classify_colors(c, t)
    if set(cliques) != cls.B_f:
        raise MulticolorError(f"clique map keys {sorted(cliques)} differ from B_f {sorted(cls.B_f)}")
    for i, vs in cliques.items():
        if len(vs) != t or len(set(vs)) != t or any(not 0 <= v < c.n for v in vs):
            raise MulticolorError(f"C_{i} must be {t} distinct vertices")
        if not _is_mono_clique(c, vs, i):
            raise MulticolorError(f"C_{i} is not a clique of colour {i}")
    for i, j in itertools.combinations(sorted(cliques), 2):
        ci, cj = cliques[i], cliques[j]
        if set(ci) & set(cj):
            return False
        colours = {c.color_of(u, v) for u in ci for v in cj}
        if len(colours) != 1 or colours.pop() not in cls.A_f:
            return False
    return True


def _cliques_of(g: SimpleGraph, t: int):
    """All t-cliques of g as sorted vertex lists, in lexicographic order."""
    def rec(chosen: list[int], cand: int):
        if len(chosen) == t:
            yield list(chosen)
            return
        for v in bits(cand):
            chosen.append(v)
            yield from rec(chosen, cand & g.adj[v] & ~((1 << (v + 1)) - 1))
            chosen.pop()
    yield from rec([], (1 << g.n) - 1)


def search_clique_grid(c: KColoring, t: int) -> Optional[dict[int, list[int]]]:
    """Backtracking over t-cliques of each B_f colour; the first verifying map or None."""
    if c.n > SEARCH_MAX_N:
        raise MulticolorError(f"clique grid search supports n <= {SEARCH_MAX_N}")
    cls = classify_colors(c, t)
    order = sorted(cls.B_f)
    options = {i: list(_cliques_of(c.color_graph(i), t)) for i in order}
    chosen: dict[int, list[int]] = {}

    def compatible(i: int, vs: list[int]) -> bool:
        for j, ws in chosen.items():
            if set(vs) & set(ws):
                return False
            colours = {c.color_of(u, v) for u in vs for v in ws}
            if len(colours) != 1 or next(iter(colours)) not in cls.A_f:
                return False
        return True

    def rec(idx: int) -> bool:
        if idx == len(order):
            return True
        i = order[idx]
        for vs in options[i]:
            if compatible(i, vs):
                chosen[i] = vs
                if rec(idx + 1):
                    return True
                del chosen[i]
        return False

    return dict(chosen) if rec(0) else None
