"""Simple undirected graphs on ``{0..n-1}`` stored as neighbour bitmasks.

Edges are also addressed by a *pair index*: the pair ``(i, j)`` with
``i < j`` sits at bit ``j*(j-1)//2 + i``.  This is the column-wise upper
triangle order used by graph6, and every edge-mask in the package
(red masks of colorings, copy masks, layouts) uses it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def index_pairs(n: int) -> list[tuple[int, int]]:
    """All pairs of ``K_n`` in pair-index order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for j in range(1, self.n) for i in range(j) if self.adj[j] >> i & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def edge_mask(self) -> int:
        m = 0
        for i, j in self.edges():
            m |= 1 << pair_index(i, j)
        return m

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Subgraph induced on ``vertices``, relabelled in the given order."""
        pos = {v: k for k, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                k = pos.get(u)
                if k is not None:
                    row |= 1 << k
            adj.append(row)
        return SimpleGraph(len(vertices), tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for i, j in self.edges():
            a, b = perm[i], perm[j]
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return SimpleGraph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "SimpleGraph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return SimpleGraph(self.n, tuple(adj))

    def without_isolated(self) -> "SimpleGraph":
        return self.induced([v for v in range(self.n) if self.adj[v]])

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    if n < 0:
        raise GraphError("negative vertex count")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in edge ({u}, {v})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return SimpleGraph(n, tuple(adj))


def graph_from_mask(n: int, mask: int) -> SimpleGraph:
    adj = [0] * n
    for idx, (i, j) in enumerate(index_pairs(n)):
        if mask >> idx & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return SimpleGraph(n, tuple(adj))


def complement(g: SimpleGraph) -> SimpleGraph:
    full = (1 << g.n) - 1
    return SimpleGraph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


def disjoint_union(parts: Sequence[SimpleGraph]) -> SimpleGraph:
    adj: list[int] = []
    offset = 0
    for p in parts:
        adj.extend(a << offset for a in p.adj)
        offset += p.n
    return SimpleGraph(offset, tuple(adj))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, (0,) * n)


def complete_graph(n: int) -> SimpleGraph:
    return complement(empty_graph(n))


def path_graph(n: int) -> SimpleGraph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(t: int) -> SimpleGraph:
    """K_{1,t}, centre 0."""
    return make_graph(t + 1, [(0, i) for i in range(1, t + 1)])


def matching_graph(r: int) -> SimpleGraph:
    """rK_2 with edges (2i, 2i+1)."""
    return make_graph(2 * r, [(2 * i, 2 * i + 1) for i in range(r)])


def complete_bipartite(s: int, t: int) -> SimpleGraph:
    return make_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def complete_split(s: int, t: int) -> SimpleGraph:
    """S_{s,t}: clique on 0..s-1 fully joined to an independent set of t."""
    edges = [(i, j) for j in range(s) for i in range(j)]
    edges += [(i, s + j) for i in range(s) for j in range(t)]
    return make_graph(s + t, edges)


def staircase_split(t: int) -> SimpleGraph:
    """H_t: A = 0..t-1 independent, B = t..2t-1 a clique, v_i ~ v_{t+j} iff j <= i."""
    edges = [(t + a, t + b) for b in range(t) for a in range(b)]
    edges += [(i - 1, t + j - 1) for i in range(1, t + 1) for j in range(1, i + 1)]
    return make_graph(2 * t, edges)


def staircase_bipartite(t: int) -> SimpleGraph:
    """E_t: H_t without the clique on B."""
    edges = [(i - 1, t + j - 1) for i in range(1, t + 1) for j in range(1, i + 1)]
    return make_graph(2 * t, edges)


# name -> (builder, number of integer parameters)
NAMED_KINDS = {
    "complete": (complete_graph, 1),
    "K": (complete_graph, 1),
    "empty": (empty_graph, 1),
    "path": (path_graph, 1),
    "P": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "C": (cycle_graph, 1),
    "star": (star_graph, 1),
    "matching": (matching_graph, 1),
    "rK2": (matching_graph, 1),
    "bipartite": (complete_bipartite, 2),
    "Kst": (complete_bipartite, 2),
    "split": (complete_split, 2),
    "S": (complete_split, 2),
    "H_t": (staircase_split, 1),
    "H": (staircase_split, 1),
    "E_t": (staircase_bipartite, 1),
    "E": (staircase_bipartite, 1),
}


def generate_named(kind: str, *params: int) -> SimpleGraph:
    try:
        builder, arity = NAMED_KINDS[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None
    if len(params) != arity:
        raise GraphError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    if any(p <= 0 for p in params):
        raise GraphError(f"{kind} parameters must be positive")
    return builder(*params)


def parse_named(spec: str) -> SimpleGraph:
    """Parse ``kind:p1,p2`` (e.g. ``H_t:3``, ``S:2,2``)."""
    kind, _, rest = spec.partition(":")
    params = [int(p) for p in rest.split(",")] if rest else []
    return generate_named(kind, *params)
