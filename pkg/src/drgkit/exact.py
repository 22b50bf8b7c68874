"""Exact max-cut and independence number by branch and bound, plus a max-cut heuristic."""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass

from .budget import BudgetExceeded, Meter, SolverBudget
from .graph import Graph, components, edge_boundary, members, two_coloring

MAXCUT_BUDGET = SolverBudget(time_limit=60.0, node_limit=10_000_000)
ALPHA_BUDGET = SolverBudget(time_limit=600.0, node_limit=10_000_000)


@dataclass(frozen=True)
class CutPartition:
    side: int
    value: int
    proved: bool = False

    def to_json(self) -> dict:
        return {"side": members(self.side), "value": self.value, "proved": self.proved}


@dataclass(frozen=True)
class IndependentSet:
    witness: int
    alpha: int
    proved: bool = False

    def to_json(self) -> dict:
        return {"witness": members(self.witness), "alpha": self.alpha, "proved": self.proved}


# -- max-cut -------------------------------------------------------------------

def _suffix_maxcut(g: Graph, d: int, suffix_best: list[int], suffix_side: list[int], meter: Meter):
    """Max cut of G[{d..v-1}] with vertex d pinned to side 0.

    Bound at a node assigning d..j-1: current cut + sum over unassigned u of
    max(neighbors placed on side 0, on side 1) + max cut of G[{j..v-1}],
    the last term already solved for the smaller suffix.
    """
    n = g.v
    adj = g.adjacency
    n0 = [0] * n
    n1 = [0] * n
    # incumbent: extend the best cut of the next suffix by placing d on its better side
    prev_side = suffix_side[d + 1] if d + 1 < n else 0
    inside = [w for w in adj[d] if w > d]
    on1 = sum(1 for w in inside if prev_side >> (w - d - 1) & 1)
    on0 = len(inside) - on1
    base_best = suffix_best[d + 1] if d + 1 < n else 0
    # vertex d is pinned to side 0; relabel so sides are relative to d
    shifted = prev_side << 1
    if on0 > on1:
        # put d opposite the side-0 block of the previous solution: flip everything else
        best_val = base_best + on0
        best_side = ((1 << (n - d)) - 1) & ~shifted & ~1
    else:
        best_val = base_best + on1
        best_side = shifted
    state = {"best": best_val, "side": best_side}

    def place(x: int, s: int, cut: int, slack: int) -> tuple[int, int]:
        """Assign x to side s; return updated (cut, slack) where slack is the
        sum of max(n0, n1) over unassigned vertices."""
        own = n1[x] if s == 0 else n0[x]
        slack -= max(n0[x], n1[x])
        cut += own
        for w in adj[x]:
            if w > x:
                old = max(n0[w], n1[w])
                if s == 0:
                    n0[w] += 1
                else:
                    n1[w] += 1
                slack += max(n0[w], n1[w]) - old
        return cut, slack

    def unplace(x: int, s: int) -> None:
        for w in adj[x]:
            if w > x:
                if s == 0:
                    n0[w] -= 1
                else:
                    n1[w] -= 1

    def rec(j: int, cut: int, slack: int, side: int) -> None:
        meter.tick()
        if j == n:
            if cut > state["best"]:
                state["best"] = cut
                state["side"] = side
            return
        rest = suffix_best[j + 1] if j + 1 < n else 0
        for s in (0, 1):
            c2, s2 = place(j, s, cut, slack)
            if c2 + s2 + rest > state["best"]:
                rec(j + 1, c2, s2, side | (s << (j - d)))
            unplace(j, s)

    cut, slack = place(d, 0, 0, 0)
    rec(d + 1, cut, slack, 0)
    unplace(d, 0)
    return state["best"], state["side"]


def max_cut_exact(g: Graph, budget: SolverBudget = MAXCUT_BUDGET) -> CutPartition:
    """Proved-optimal max cut (vertex 0 on side 0) by Russian-doll branch and bound.

    Suffixes {d..v-1} are solved from the smallest up; each solved suffix
    bounds the unassigned part of every larger one.  Sides are tried 0 then 1
    in ascending vertex order and the incumbent changes only on strict
    improvement, so the certificate is reproducible.
    """
    n = g.v
    meter = Meter(budget, "max-cut")
    suffix_best = [0] * n
    suffix_side = [0] * n
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 100))
    try:
        for d in range(n - 1, -1, -1):
            try:
                best, side = _suffix_maxcut(g, d, suffix_best, suffix_side, meter)
            except BudgetExceeded as exc:
                fallback = max_cut_local_search(g, SolverBudget(seed=budget.seed), restarts=8)
                raise BudgetExceeded(str(exc), fallback) from None
            suffix_best[d] = best
            suffix_side[d] = side
    finally:
        sys.setrecursionlimit(limit)
    side = suffix_side[0]
    value = edge_boundary(g, side)
    assert value == suffix_best[0]
    return CutPartition(side, value, proved=True)


def max_cut_local_search(g: Graph, budget: SolverBudget = SolverBudget(), restarts: int = 32) -> CutPartition:
    """Best single-vertex-flip local optimum over seeded restarts.

    The first start is a BFS 2-coloring, which is already optimal for
    bipartite graphs; the rest are uniform random partitions.
    """
    rng = random.Random(budget.seed)
    n = g.v
    adj = g.adjacency
    coloring = two_coloring(g)
    if coloring is None:
        coloring = _bfs_coloring(g)
    starts = [coloring] + [[rng.randrange(2) for _ in range(n)] for _ in range(restarts - 1)]
    best: CutPartition | None = None
    for side in starts:
        side = list(side)
        improved = True
        while improved:
            improved = False
            for u in range(n):
                same = sum(1 for w in adj[u] if side[w] == side[u])
                if 2 * same > len(adj[u]):
                    side[u] ^= 1
                    improved = True
        mask = sum(1 << u for u in range(n) if side[u] != side[0])
        value = edge_boundary(g, mask)
        if best is None or value > best.value:
            best = CutPartition(mask, value, proved=False)
    assert best is not None
    return best


def _bfs_coloring(g: Graph) -> list[int]:
    color = [-1] * g.v
    for s in range(g.v):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        for u in queue:
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    queue.append(w)
    return color


# -- independence number -----------------------------------------------------

def _greedy_clique_cover(masks: tuple[int, ...], p: int) -> int:
    """Number of cliques in a greedy cover of G[p], an upper bound on alpha(G[p])."""
    cliques: list[int] = []  # common-neighborhood masks of each clique
    m = p
    while m:
        low = m & -m
        u = low.bit_length() - 1
        m ^= low
        for i, common in enumerate(cliques):
            if common >> u & 1:
                cliques[i] = common & masks[u]
                break
        else:
            cliques.append(masks[u] & p)
    return len(cliques)


def independence_number_exact(g: Graph, budget: SolverBudget = ALPHA_BUDGET) -> IndependentSet:
    """Maximum independent set by branch and bound.

    Per node: split into components (solved separately and cached), take
    degree-0 and degree-1 vertices outright, handle degree-2 vertices by the
    v-or-both-neighbors rule, otherwise branch on a maximum-degree vertex
    (include first).  Pruning uses a greedy clique cover.
    """
    masks = g.masks
    meter = Meter(budget, "independence number")
    cache: dict[int, tuple[int, int]] = {}

    def solve(p: int, floor_needed: int) -> tuple[int, int]:
        """(alpha, witness) of G[p]; may return a smaller value when alpha(G[p]) < floor_needed."""
        if p in cache:
            return cache[p]
        comps = components(g, p)
        if len(comps) > 1:
            size, wit = 0, 0
            for comp in comps:
                s, w = solve_connected(comp, 0)
                size += s
                wit |= w
            return size, wit
        return solve_connected(p, floor_needed)

    def solve_connected(p: int, floor_needed: int) -> tuple[int, int]:
        if p in cache:
            return cache[p]
        meter.tick()
        taken = 0
        count = 0
        # simplicial reductions: degree 0 and 1
        changed = True
        while changed and p:
            changed = False
            m = p
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                if not p >> u & 1:
                    continue
                nb = masks[u] & p
                if nb & (nb - 1) == 0:
                    taken |= low
                    count += 1
                    p &= ~(nb | low)
                    m &= p
                    changed = True
        if not p:
            return count, taken
        if taken:
            s, w = solve(p, floor_needed - count)
            return s + count, w | taken
        key = p
        # pick the branching vertex: a degree-2 vertex if any, else max degree
        best_u, best_deg, two = -1, -1, -1
        m = p
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            deg = (masks[u] & p).bit_count()
            if deg == 2 and two < 0:
                two = u
            if deg > best_deg:
                best_u, best_deg = u, deg
        ub = _greedy_clique_cover(masks, p)
        best = (0, 0)
        if two >= 0:
            u = two
            a, b = members(masks[u] & p)
            if masks[a] >> b & 1:
                s, w = solve(p & ~(masks[u] | 1 << u), 0)
                result = (s + 1, w | 1 << u)
                cache[key] = result
                return result
            options = [(1 << u, masks[u] | 1 << u), (1 << a | 1 << b, masks[a] | masks[b] | 1 << a | 1 << b)]
        else:
            u = best_u
            options = [(1 << u, masks[u] | 1 << u), (0, 1 << u)]
        for chosen, removed in options:
            gain = chosen.bit_count()
            rest = p & ~removed
            need = max(best[0] + 1, floor_needed)
            if gain + _greedy_clique_cover(masks, rest) < need:
                continue
            s, w = solve(rest, need - gain)
            if s + gain > best[0]:
                best = (s + gain, w | chosen)
            if best[0] >= ub:
                break
        if best[0] >= floor_needed:
            cache[key] = best
        return best

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20 * g.v + 100))
    try:
        alpha, wit = solve(g.all_mask, 0)
    except BudgetExceeded as exc:
        raise BudgetExceeded(str(exc), greedy_independent_set(g)) from None
    finally:
        sys.setrecursionlimit(limit)
    return IndependentSet(wit, alpha, proved=True)


def greedy_independent_set(g: Graph) -> IndependentSet:
    """Maximal independent set taking a minimum-degree vertex of the residual graph each step."""
    masks = g.masks
    p = g.all_mask
    wit = 0
    while p:
        u = min(members(p), key=lambda x: ((masks[x] & p).bit_count(), x))
        wit |= 1 << u
        p &= ~(masks[u] | 1 << u)
    return IndependentSet(wit, wit.bit_count(), proved=False)
