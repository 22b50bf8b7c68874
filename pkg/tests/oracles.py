"""Exhaustive reference implementations, independent of the package's solvers."""

from functools import lru_cache
from itertools import combinations

import numpy as np

from drgkit.graph import Graph


def brute_max_cut(g):
    """All 2^(v-1) bipartitions with vertex 0 fixed, vectorized."""
    if g.v == 1 or not g.e:
        return 0
    x = np.arange(1 << (g.v - 1), dtype=np.int64) << 1
    total = np.zeros(x.shape, dtype=np.int32)
    for u, w in g.edges():
        total += (((x >> u) ^ (x >> w)) & 1).astype(np.int32)
    return int(total.max())


def brute_alpha(g):
    """Largest independent set over all subsets, vectorized by popcount."""
    n = g.v
    x = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(x.shape, dtype=bool)
    for u, w in g.edges():
        ok &= ((x >> u) & (x >> w) & 1) == 0
    sizes = np.zeros(x.shape, dtype=np.int8)
    for i in range(n):
        sizes += ((x >> i) & 1).astype(np.int8)
    return int(sizes[ok].max())


def brute_nu(g, removed=0):
    edges = [(u, w) for u, w in g.edges() if not (removed >> u | removed >> w) & 1]

    @lru_cache(maxsize=None)
    def rec(i, used):
        if i == len(edges):
            return 0
        u, w = edges[i]
        best = rec(i + 1, used)
        if not (used >> u | used >> w) & 1:
            best = max(best, 1 + rec(i + 1, used | 1 << u | 1 << w))
        return best

    return rec(0, 0)


def perfect_matchings(g):
    """Every perfect matching as a frozenset of edges."""
    out = []

    def rec(free, chosen):
        if not free:
            out.append(frozenset(chosen))
            return
        u = (free & -free).bit_length() - 1
        for w in g.adjacency[u]:
            if free >> w & 1 and w != u:
                chosen.append((min(u, w), max(u, w)))
                rec(free & ~(1 << u | 1 << w), chosen)
                chosen.pop()

    rec(g.all_mask, [])
    return out


def brute_extendable(g, t):
    pms = perfect_matchings(g)
    edges = g.edges()
    for combo in combinations(edges, t):
        if len({x for e in combo for x in e}) < 2 * t:
            continue
        if not any(set(combo) <= pm for pm in pms):
            return False
    return True


def all_small_graphs():
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        for sel in range(1 << len(pairs)):
            yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if sel >> i & 1])
