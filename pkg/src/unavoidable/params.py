"""Classical graph parameters: matchings, independence, strong edge colouring."""
from __future__ import annotations

from collections import deque

from .graphs import SimpleGraph, bits


def maximum_matching(g: SimpleGraph) -> list[tuple[int, int]]:
    """Maximum matching via Edmonds' augmenting paths with blossom contraction."""
    n = g.n
    nbrs = [list(bits(a)) for a in g.adj]
    match = [-1] * n

    def lca(base, parent, a, b):
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[match[b]]

    def mark_path(base, parent, blossom, v, b, child):
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(base, parent, v, to)
                    blossom = [False] * n
                    mark_path(base, parent, blossom, v, cur, to)
                    mark_path(base, parent, blossom, to, cur, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    # greedy start keeps the number of augmentations small
    for v in range(n):
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break
    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = find_path(root)
        while end != -1:
            pv = parent[end]
            ppv = match[pv]
            match[end], match[pv] = pv, end
            end = ppv
    return [(v, match[v]) for v in range(n) if match[v] > v]


def matching_number(g: SimpleGraph) -> int:
    return len(maximum_matching(g))


def max_degree(g: SimpleGraph) -> int:
    return max(g.degrees(), default=0)


def independence_number(g: SimpleGraph) -> int:
    """Exact alpha(G) by branch and bound on vertex bitsets."""
    n = g.n
    non_nbr = [((1 << n) - 1) & ~a & ~(1 << v) for v, a in enumerate(g.adj)]
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            expand(size + 1, cand & non_nbr[v])
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def greedy_strong_edge_coloring(g: SimpleGraph) -> tuple[int, dict[tuple[int, int], int]]:
    """First-fit strong edge colouring in pair-index order.

    Two edges conflict when they share a vertex or an edge of ``g`` joins
    them; each edge conflicts with at most 2*Delta*(Delta-1) others, so at
    most 2*Delta^2 - 2*Delta + 1 classes are used.
    """
    edges = g.edges()
    closed = [a | (1 << v) for v, a in enumerate(g.adj)]
    classes: list[list[tuple[int, int, int]]] = []  # per class: (u, v, closed-nbhd mask of the edge)
    colour: dict[tuple[int, int], int] = {}
    for u, v in edges:
        reach = closed[u] | closed[v]
        for c, members in enumerate(classes):
            if all(not (reach & ((1 << a) | (1 << b))) for a, b, _ in members):
                members.append((u, v, reach))
                colour[(u, v)] = c
                break
        else:
            classes.append([(u, v, reach)])
            colour[(u, v)] = len(classes) - 1
    return len(classes), colour


def is_induced_matching(g: SimpleGraph, edges: list[tuple[int, int]]) -> bool:
    verts = [x for e in edges for x in e]
    if len(set(verts)) != len(verts):
        return False
    sub = g.induced(verts)
    return sub.num_edges == len(edges)
