"""Canonical labelling by partition refinement and enumeration up to isomorphism.

``canonical_form`` individualises vertices of an equitable ordered
partition and keeps the leaf with the largest adjacency code.  Automorphisms
discovered at equal leaves prune sibling branches in the same orbit of the
pointwise stabiliser of the current prefix.
"""
from __future__ import annotations

from typing import Callable, Iterator, Optional

from . import graph6
from .graphs import SimpleGraph, bits, empty_graph


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Coarsest equitable refinement; cells are vertex bitmasks, order is invariant."""
    cells = list(cells)
    changed = True
    while changed:
        changed = False
        for spl in list(cells):
            out = []
            for cell in cells:
                if cell & (cell - 1) == 0:
                    out.append(cell)
                    continue
                groups: dict[int, int] = {}
                for v in bits(cell):
                    k = (adj[v] & spl).bit_count()
                    groups[k] = groups.get(k, 0) | (1 << v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    out.extend(groups[k] for k in sorted(groups))
                    changed = True
            cells = out
            if changed:
                break
    return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for q in range(1, len(order)):
        row = adj[order[q]]
        for p in range(q):
            code = (code << 1) | (row >> order[p] & 1)
    return code


def _orbit_rep(gens: list[list[int]], v: int, n: int) -> int:
    """Smallest vertex in the orbit of ``v`` under the group generated by ``gens``."""
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return min(seen)


def canonical_labeling(g: SimpleGraph) -> tuple[list[int], int]:
    """Return ``(order, code)``: canonical vertex ``p`` is original ``order[p]``."""
    n = g.n
    if n == 0:
        return [], 0
    adj = g.adj
    deg_cells: dict[int, int] = {}
    for v in range(n):
        d = adj[v].bit_count()
        deg_cells[d] = deg_cells.get(d, 0) | (1 << v)
    start = [deg_cells[d] for d in sorted(deg_cells)]

    best_code = -1
    best_order: list[int] = []
    first_code = -1
    first_order: list[int] = []
    autos: list[list[int]] = []

    def record_auto(a: list[int], b: list[int]) -> None:
        perm = [0] * n
        for x, y in zip(a, b):
            perm[x] = y
        if any(perm[i] != i for i in range(n)):
            autos.append(perm)

    def search(cells: list[int], prefix: list[int]) -> None:
        nonlocal best_code, best_order, first_code, first_order
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if target is None:
            order = [c.bit_length() - 1 for c in cells]
            code = _code(adj, order)
            if first_code < 0:
                first_code, first_order = code, order
            elif code == first_code:
                record_auto(order, first_order)
            if code > best_code:
                best_code, best_order = code, order
            elif code == best_code and order != best_order:
                record_auto(order, best_order)
            return
        cell = cells[target]
        tried: list[int] = []
        for v in bits(cell):
            stab = [a for a in autos if all(a[p] == p for p in prefix)]
            if stab and any(_orbit_rep(stab, v, n) == _orbit_rep(stab, u, n) for u in tried):
                continue
            tried.append(v)
            new = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:]
            search(new, prefix + [v])

    search(start, [])
    return best_order, best_code


def canonical_form(g: SimpleGraph) -> tuple[list[int], str]:
    """Canonical labelling plus a certificate (graph6 of the relabelled graph).

    Two graphs get the same certificate iff they are isomorphic.
    """
    order, _ = canonical_labeling(g)
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return order, graph6.encode(g.relabel(perm))


def certificate(g: SimpleGraph) -> str:
    return canonical_form(g)[1]


def canonical_graph(g: SimpleGraph) -> SimpleGraph:
    return graph6.decode(certificate(g))


def are_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return certificate(g) == certificate(h)


def _add_vertex(g: SimpleGraph, nbrs: int) -> SimpleGraph:
    v = g.n
    adj = [a | ((nbrs >> u & 1) << v) for u, a in enumerate(g.adj)]
    adj.append(nbrs)
    return SimpleGraph(v + 1, tuple(adj))


def graphs_by_order(n: int, keep: Optional[Callable[[SimpleGraph], bool]] = None) -> Iterator[SimpleGraph]:
    """One graph per isomorphism class on ``n`` vertices.

    Built vertex by vertex; every class on ``v+1`` vertices arises from some
    class on ``v`` vertices plus a new vertex, so per-level canonical dedup is
    complete.  ``keep`` must be hereditary (closed under induced subgraphs):
    rejected graphs are not extended.
    """
    level = [empty_graph(0)]
    for v in range(n):
        seen: dict[str, SimpleGraph] = {}
        for g in level:
            for nbrs in range(1 << v):
                child = _add_vertex(g, nbrs)
                if keep is not None and not keep(child):
                    continue
                cert = certificate(child)
                if cert not in seen:
                    seen[cert] = graph6.decode(cert)
        level = [seen[c] for c in sorted(seen)]
    yield from level


MAX_EXHAUSTIVE_EDGES = 9


def enumerate_graphs(k_edges: int, min_degree_one: bool = True) -> Iterator[SimpleGraph]:
    """One representative per isomorphism class of graphs with ``k_edges`` edges.

    With ``min_degree_one`` the graphs have no isolated vertices; otherwise
    each class is padded with isolated vertices to order ``2*k_edges``.
    """
    if k_edges < 0:
        raise ValueError("negative edge count")
    if k_edges > MAX_EXHAUSTIVE_EDGES:
        raise ValueError(f"exhaustive enumeration supports at most {MAX_EXHAUSTIVE_EDGES} edges")
    level = {graph6.encode(empty_graph(0)): empty_graph(0)}
    for _ in range(k_edges):
        seen: dict[str, SimpleGraph] = {}
        for g in level.values():
            n = g.n
            candidates = [(i, j) for j in range(1, n) for i in range(j) if not g.adj[j] >> i & 1]
            candidates += [(i, n) for i in range(n)]
            candidates.append((n, n + 1))
            for i, j in candidates:
                m = max(n, j + 1)
                adj = list(g.adj) + [0] * (m - n)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                cert = certificate(SimpleGraph(m, tuple(adj)))
                if cert not in seen:
                    seen[cert] = graph6.decode(cert)
        level = seen
    for cert in sorted(level):
        g = level[cert]
        if not min_degree_one and g.n < 2 * k_edges:
            g = SimpleGraph(2 * k_edges, g.adj + (0,) * (2 * k_edges - g.n))
        yield g
