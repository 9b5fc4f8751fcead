"""Red/blue and k-colourings of E(K_n)."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Mapping

from . import graph6
from .canon import graphs_by_order
from .graphs import (
    SimpleGraph,
    complement,
    graph_from_mask,
    index_pairs,
    make_graph,
    pair_count,
)

RAW_MAX_N = 8
CANONICAL_MAX_N = 10


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class TwoColoring:
    """A 2-colouring of K_n held as its red graph; blue is the complement."""

    n: int
    red: SimpleGraph

    @property
    def red_mask(self) -> int:
        return self.red.edge_mask()

    @property
    def blue(self) -> SimpleGraph:
        return complement(self.red)

    def graph(self, color: str) -> SimpleGraph:
        if color == "red":
            return self.red
        if color == "blue":
            return self.blue
        raise ColoringError(f"unknown colour {color!r}")

    def to_json(self) -> dict:
        return {"n": self.n, "red": [list(e) for e in self.red.edges()]}


def coloring_from_red(n: int, red: SimpleGraph) -> TwoColoring:
    if red.n != n:
        raise ColoringError(f"red graph has {red.n} vertices, expected {n}")
    return TwoColoring(n, red)


def coloring_from_mask(n: int, mask: int) -> TwoColoring:
    return TwoColoring(n, graph_from_mask(n, mask))


def class_sizes(c: TwoColoring) -> tuple[int, int, int]:
    e_r = c.red.num_edges
    e_b = pair_count(c.n) - e_r
    return e_r, e_b, min(e_r, e_b)


def swap_colors(c: TwoColoring) -> TwoColoring:
    return TwoColoring(c.n, complement(c.red))


def enumerate_red_graphs(n: int, mode: str = "raw") -> Iterator[TwoColoring]:
    """All colourings (``raw``) or one per isomorphism class of red graph (``canonical``)."""
    if mode == "raw":
        if n > RAW_MAX_N:
            raise ColoringError(f"raw enumeration supports n <= {RAW_MAX_N}")
        for mask in range(1 << pair_count(n)):
            yield coloring_from_mask(n, mask)
    elif mode == "canonical":
        if n > CANONICAL_MAX_N:
            raise ColoringError(f"canonical enumeration supports n <= {CANONICAL_MAX_N}")
        for g in graphs_by_order(n):
            yield TwoColoring(n, g)
    else:
        raise ColoringError(f"unknown enumeration mode {mode!r}")


@dataclass(frozen=True)
class KColoring:
    n: int
    k: int
    color: Mapping[tuple[int, int], int]

    def color_of(self, u: int, v: int) -> int:
        return self.color[(u, v) if u < v else (v, u)]

    def color_graph(self, i: int) -> SimpleGraph:
        """G_i: the graph on V(K_n) formed by the edges of colour ``i``."""
        return make_graph(self.n, [e for e, c in self.color.items() if c == i])

    def color_graphs(self) -> dict[int, SimpleGraph]:
        return {i: self.color_graph(i) for i in range(1, self.k + 1)}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "edges": [[u, v, self.color[(u, v)]] for u, v in index_pairs(self.n)],
        }


def kcoloring_from_parts(n: int, k: int, assignment: Mapping[tuple[int, int], int]) -> KColoring:
    color: dict[tuple[int, int], int] = {}
    for (u, v), c in assignment.items():
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ColoringError(f"bad edge ({u}, {v})")
        if not 1 <= c <= k:
            raise ColoringError(f"colour {c} out of range 1..{k}")
        color[(min(u, v), max(u, v))] = c
    missing = [e for e in index_pairs(n) if e not in color]
    if missing:
        raise ColoringError(f"edge {missing[0]} has no colour")
    return KColoring(n, k, dict(sorted(color.items(), key=lambda kv: (kv[0][1], kv[0][0]))))


def two_as_kcoloring(c: TwoColoring) -> KColoring:
    """Red becomes colour 1, blue colour 2."""
    return KColoring(c.n, 2, {(u, v): 1 if c.red.has_edge(u, v) else 2 for u, v in index_pairs(c.n)})


def coloring_from_json(data: dict):
    """Parse either coloring JSON layout; returns TwoColoring or KColoring."""
    try:
        n = int(data["n"])
        if "red" in data:
            return TwoColoring(n, make_graph(n, [tuple(e) for e in data["red"]]))
        k = int(data["k"])
        return kcoloring_from_parts(n, k, {(int(u), int(v)): int(c) for u, v, c in data["edges"]})
    except (KeyError, TypeError) as exc:
        raise ColoringError(f"malformed coloring JSON: {exc}") from None


def load_coloring(path: str):
    """JSON in either layout, or a text line ``<graph6 of red> [n]`` padding red to n vertices."""
    with open(path) as fh:
        text = fh.read().strip()
    if text.startswith("{"):
        return coloring_from_json(json.loads(text))
    parts = text.split()
    if not parts or len(parts) > 2:
        raise ColoringError("expected '<graph6> [n]'")
    red = graph6.decode(parts[0])
    n = int(parts[1]) if len(parts) == 2 else red.n
    if n < red.n:
        raise ColoringError(f"n={n} is smaller than the red graph's order {red.n}")
    return TwoColoring(n, SimpleGraph(n, red.adj + (0,) * (n - red.n)))
