"""Compiled mask-level detectors and the exhaustive scan over red masks.

A family is compiled once per ``n`` into *local tables*: for every pattern
order ``k`` the set of red-edge codes on ``k`` labelled vertices that
contain a forbidden member (in either colour).  A colouring violates the
family iff the code of some ``k``-subset is in its table.  Codes use the
pair-index order of the subset's sorted vertices.  Balanced-copy checks
use the global copy masks of the target graph instead.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numba
import numpy as np
from numba import njit, prange

from . import graph6
from .graphs import SimpleGraph, pair_count, pair_index

DENSE_MAX_BITS = 21
N_CHUNK_BITS = 6

# the bundled TBB is too old here; try OpenMP first so numba does not warn
numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]


def _relabel_masks(g: SimpleGraph) -> set[int]:
    k = g.n
    edges = g.edges()
    out = set()
    for perm in itertools.permutations(range(k)):
        m = 0
        for a, b in edges:
            m |= 1 << pair_index(perm[a], perm[b])
        out.add(m)
    return out


def _superset_masks(g: SimpleGraph, strict: bool) -> set[int]:
    """Local codes of graphs on V(g) containing g weakly induced (identity embedding)."""
    base = g.edge_mask()
    if strict:
        return {base}
    comp_of = {}
    for ci, comp in enumerate(g.components()):
        for v in comp:
            comp_of[v] = ci
    free = [pair_index(a, b) for b in range(g.n) for a in range(b)
            if comp_of[a] == comp_of[b] and not g.has_edge(a, b)]
    out = set()
    for r in range(len(free) + 1):
        for combo in itertools.combinations(free, r):
            m = base
            for p in combo:
                m |= 1 << p
            out.add(m)
    return out


@lru_cache(maxsize=512)
def _member_codes(g6: str, mode: str, strict: bool) -> frozenset[int]:
    """All red codes on n(g) labelled vertices containing the member in red or in blue."""
    g = graph6.decode(g6)
    full = (1 << pair_count(g.n)) - 1
    if mode == "induced-mono" or strict:
        red = _relabel_masks(g)
    else:
        red = set()
        for perm in itertools.permutations(range(g.n)):
            red |= _superset_masks(g.relabel(perm), False)
    blue = {full & ~m for m in red}
    return frozenset(red | blue)


@dataclass
class CompiledFamily:
    """Flat arrays consumed by the numba kernels."""

    n: int
    pos: np.ndarray        # (subsets, wmax) global bit positions, int64
    groups: np.ndarray     # (G, 5): sub_start, sub_end, width, tab_off, dense
    tab_len: np.ndarray    # (G,)
    dense: np.ndarray      # uint8 concatenated dense tables
    sparse: np.ndarray     # int64 concatenated sorted tables
    copies: np.ndarray     # int64 copy masks for balanced detection
    bal_lo: int
    bal_hi: int
    subsets: list          # python list of vertex tuples, row-aligned with pos


def compile_family(n: int, members, strict_weak: bool = False, balanced: SimpleGraph | None = None
                   ) -> CompiledFamily:
    """``members``: iterable of (graph, mode). ``balanced``: graph whose balanced copies are forbidden."""
    by_k: dict[int, set[int]] = {}
    for g, mode in members:
        if g.n > n or g.n == 0:
            continue
        by_k.setdefault(g.n, set()).update(_member_codes(graph6.encode(g), mode, strict_weak))
    rows: list[list[int]] = []
    subsets: list[tuple[int, ...]] = []
    groups = []
    tab_len = []
    dense_parts: list[np.ndarray] = []
    sparse_parts: list[np.ndarray] = []
    dense_off = sparse_off = 0
    wmax = max([pair_count(k) for k in by_k] + [1])
    for k in sorted(by_k):
        width = pair_count(k)
        start = len(rows)
        for sub in itertools.combinations(range(n), k):
            rows.append([pair_index(sub[a], sub[b]) for b in range(k) for a in range(b)])
            subsets.append(sub)
        codes = by_k[k]
        if width <= DENSE_MAX_BITS:
            tab = np.zeros(1 << width, dtype=np.uint8)
            tab[np.fromiter(codes, dtype=np.int64, count=len(codes))] = 1
            groups.append((start, len(rows), width, dense_off, 1))
            tab_len.append(tab.size)
            dense_parts.append(tab)
            dense_off += tab.size
        else:
            tab = np.array(sorted(codes), dtype=np.int64)
            groups.append((start, len(rows), width, sparse_off, 0))
            tab_len.append(tab.size)
            sparse_parts.append(tab)
            sparse_off += tab.size
    pos = np.zeros((max(len(rows), 1), wmax), dtype=np.int64)
    for i, r in enumerate(rows):
        pos[i, :len(r)] = r
    if balanced is not None:
        from .patterns import copy_masks
        cm = np.array([m for m, _ in copy_masks(n, balanced)], dtype=np.int64)
        e = balanced.num_edges
        lo, hi = e // 2, (e + 1) // 2
    else:
        cm = np.zeros(0, dtype=np.int64)
        lo = hi = -1
    return CompiledFamily(
        n=n,
        pos=pos,
        groups=np.array(groups, dtype=np.int64).reshape(-1, 5),
        tab_len=np.array(tab_len, dtype=np.int64),
        dense=np.concatenate(dense_parts) if dense_parts else np.zeros(1, dtype=np.uint8),
        sparse=np.concatenate(sparse_parts) if sparse_parts else np.zeros(1, dtype=np.int64),
        copies=cm,
        bal_lo=lo,
        bal_hi=hi,
        subsets=subsets,
    )


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56 & 0xFF


@njit(cache=True)
def _violation(mask, pos, groups, tab_len, dense, sparse, copies, lo, hi):
    """Row of the first violating subset, ``-2 - i`` for balanced copy ``i``, or -1."""
    for g in range(groups.shape[0]):
        s0 = groups[g, 0]
        s1 = groups[g, 1]
        w = groups[g, 2]
        off = groups[g, 3]
        is_dense = groups[g, 4]
        ln = tab_len[g]
        for s in range(s0, s1):
            code = 0
            for j in range(w):
                code |= ((mask >> pos[s, j]) & 1) << j
            if is_dense == 1:
                if dense[off + code]:
                    return s
            else:
                a = off
                b = off + ln
                while a < b:
                    mid = (a + b) >> 1
                    if sparse[mid] < code:
                        a = mid + 1
                    else:
                        b = mid
                if a < off + ln and sparse[a] == code:
                    return s
    for i in range(copies.shape[0]):
        r = _popcount(mask & copies[i])
        if r == lo or r == hi:
            return -2 - i
    return -1


@njit(cache=True)
def _scan_range(lo_mask, hi_mask, n_pairs, start_best, pos, groups, tab_len, dense, sparse, copies, blo, bhi):
    best = start_best
    best_mask = -1
    checked = 0
    for mask in range(lo_mask, hi_mask):
        pc = _popcount(mask)
        c = pc if pc < n_pairs - pc else n_pairs - pc
        if c <= best:
            continue
        checked += 1
        if _violation(mask, pos, groups, tab_len, dense, sparse, copies, blo, bhi) == -1:
            best = c
            best_mask = mask
    return best, best_mask, checked


@njit(parallel=True, cache=True)
def _scan_chunks(n_pairs, chunk_bits, start_best, pos, groups, tab_len, dense, sparse, copies, blo, bhi):
    n_chunks = 1 << chunk_bits
    size = (1 << n_pairs) >> chunk_bits
    bests = np.empty(n_chunks, dtype=np.int64)
    masks = np.empty(n_chunks, dtype=np.int64)
    counts = np.empty(n_chunks, dtype=np.int64)
    for ch in prange(n_chunks):
        b, m, k = _scan_range(ch * size, (ch + 1) * size, n_pairs, start_best,
                              pos, groups, tab_len, dense, sparse, copies, blo, bhi)
        bests[ch] = b
        masks[ch] = m
        counts[ch] = k
    return bests, masks, counts


def violation(cf: CompiledFamily, mask: int) -> int:
    return int(_violation(np.int64(mask), cf.pos, cf.groups, cf.tab_len, cf.dense, cf.sparse,
                          cf.copies, cf.bal_lo, cf.bal_hi))


def scan_max_min_class(cf: CompiledFamily, workers: int = 1, lower_bound: int = 0) -> tuple[int, int, int]:
    """Exhaustive scan of all red masks on K_n.

    Returns ``(value, witness_mask, masks_checked)`` where value is the largest
    min colour class among avoiding colourings and the witness is the smallest
    mask attaining it; ``(-1, -1, _)`` when no colouring avoids.  The chunk partition is fixed, so the result does not
    depend on ``workers``.
    """
    n_pairs = pair_count(cf.n)
    chunk_bits = min(N_CHUNK_BITS, n_pairs)
    numba.set_num_threads(max(1, min(workers, numba.config.NUMBA_NUM_THREADS)))
    start = lower_bound - 1 if lower_bound > 0 else -1
    bests, masks, counts = _scan_chunks(n_pairs, chunk_bits, start, cf.pos, cf.groups, cf.tab_len,
                                        cf.dense, cf.sparse, cf.copies, cf.bal_lo, cf.bal_hi)
    if int(masks.max()) == -1:
        if lower_bound > 0:
            return scan_max_min_class(cf, workers, 0)
        return -1, -1, int(counts.sum())
    value = int(bests.max())
    cand = [int(m) for b, m in zip(bests, masks) if b == value and m >= 0]
    return value, min(cand), int(counts.sum())
