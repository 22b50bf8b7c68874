"""Maximum matchings, t-extendability with certificates, and Tutte-Yu barriers.

Matchings are computed by Edmonds' blossom algorithm on the original vertex
labels, restricted to an ``alive`` vertex subset, so that the subgraphs
``G - V(M)`` met during extendability checks never have to be materialised.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .budget import BudgetExceeded
from .graph import Graph, bits, components, is_connected, members, two_coloring


class MatchingError(ValueError):
    pass


class NoPerfectMatching(MatchingError):
    pass


class OddOrder(MatchingError):
    pass


class TTooLarge(MatchingError):
    pass


class MatchingExtends(MatchingError):
    pass


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, edges) -> Matching:
        return cls(tuple(sorted((min(u, w), max(u, w)) for u, w in edges)))

    @classmethod
    def from_mate(cls, mate: list[int]) -> Matching:
        return cls(tuple((u, w) for u, w in enumerate(mate) if w > u))

    @property
    def covered(self) -> int:
        return bits(x for e in self.edges for x in e)

    def __len__(self) -> int:
        return len(self.edges)

    def is_valid(self, g: Graph) -> bool:
        seen: set[int] = set()
        for u, w in self.edges:
            if u in seen or w in seen or not g.has_edge(u, w):
                return False
            seen.update((u, w))
        return True

    def to_json(self) -> list[list[int]]:
        return [list(e) for e in self.edges]


@dataclass(frozen=True)
class CounterExample:
    """A t-matching that no perfect matching contains; falsy, so it reads as 'not extendable'."""

    matching: Matching

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Barrier:
    s: int
    t: int
    independent_edges: Matching
    odd_components: int

    @property
    def members(self) -> list[int]:
        return members(self.s)

    def to_json(self) -> dict:
        return {"S": self.members, "t": self.t, "odd_components": self.odd_components}


@dataclass(frozen=True)
class ExtendabilityResult:
    value: int
    failing_matching: Matching | None
    barrier: Barrier | None
    proved: bool

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "proved": self.proved,
            "failing_matching": self.failing_matching.to_json() if self.failing_matching else None,
            "barrier": self.barrier.to_json() if self.barrier else None,
        }


# -- Edmonds' blossom algorithm ------------------------------------------------

def _augment_from(adj, alive, mate, root) -> bool:
    """Search an augmenting path from the exposed vertex ``root`` and apply it."""
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(x: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[x] != b:
            blossom[base[x]] = blossom[base[mate[x]]] = True
            parent[x] = child
            child = mate[x]
            x = parent[mate[x]]

    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not alive[y] or base[x] == base[y] or mate[x] == y:
                continue
            if y == root or (mate[y] != -1 and parent[mate[y]] != -1):
                cur = lca(x, y)
                blossom = [False] * n
                mark_path(x, cur, y, blossom)
                mark_path(y, cur, x, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[y] == -1:
                parent[y] = x
                if mate[y] == -1:
                    # flip the alternating path ending at y
                    while y != -1:
                        py = parent[y]
                        nxt = mate[py]
                        mate[y] = py
                        mate[py] = y
                        y = nxt
                    return True
                used[mate[y]] = True
                queue.append(mate[y])
    return False


def _complete_matching(adj, alive, mate) -> int:
    """Grow ``mate`` (in place) to a maximum matching of the alive subgraph."""
    for u in range(len(adj)):
        if alive[u] and mate[u] == -1:
            for w in adj[u]:
                if alive[w] and mate[w] == -1:
                    mate[u], mate[w] = w, u
                    break
    for u in range(len(adj)):
        if alive[u] and mate[u] == -1:
            _augment_from(adj, alive, mate, u)
    return sum(1 for u in range(len(adj)) if alive[u] and mate[u] > u)


def _mate_list(g: Graph, alive=None, initial: Matching | None = None) -> list[int]:
    mate = [-1] * g.v
    if alive is None:
        alive = [True] * g.v
    if initial is not None:
        for u, w in initial.edges:
            if alive[u] and alive[w]:
                mate[u], mate[w] = w, u
    _complete_matching(g.adjacency, alive, mate)
    return mate


def maximum_matching(g: Graph, initial: Matching | None = None) -> Matching:
    return Matching.from_mate(_mate_list(g, initial=initial))


def has_perfect_matching(g: Graph) -> bool:
    return g.v % 2 == 0 and 2 * len(maximum_matching(g)) == g.v


def gallai_edmonds(g: Graph, removed: int = 0) -> tuple[int, int, int]:
    """(D, A, C) bitsets of the Gallai-Edmonds decomposition of ``G - removed``.

    One alternating-forest search rooted at every exposed vertex of a maximum
    matching: outer vertices (including those absorbed into blossoms) form D,
    inner vertices A, unreached vertices C.
    """
    n = g.v
    adj = g.adjacency
    alive = [not removed >> u & 1 for u in range(n)]
    mate = _mate_list(g, alive)
    outer = [False] * n
    inner = [False] * n
    parent = [-1] * n
    base = list(range(n))
    root = [-1] * n
    queue: deque[int] = deque()
    for u in range(n):
        if alive[u] and mate[u] == -1:
            outer[u] = True
            root[u] = u
            queue.append(u)

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark_path(x: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[x] != b:
            blossom[base[x]] = blossom[base[mate[x]]] = True
            parent[x] = child
            child = mate[x]
            x = parent[mate[x]]

    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not alive[y] or base[x] == base[y] or mate[x] == y:
                continue
            if outer[y]:
                if root[y] != root[x]:
                    raise AssertionError("augmenting path left after maximum matching")
                cur = lca(x, y)
                blossom = [False] * n
                mark_path(x, cur, y, blossom)
                mark_path(y, cur, x, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not outer[i]:
                            outer[i] = True
                            queue.append(i)
            elif not inner[y]:
                inner[y] = True
                parent[y] = x
                root[y] = root[x]
                z = mate[y]
                outer[z] = True
                root[z] = root[x]
                queue.append(z)
    d = bits(u for u in range(n) if outer[u])
    a = bits(u for u in range(n) if inner[u] and not outer[u])
    c = bits(u for u in range(n) if alive[u]) & ~d & ~a
    return d, a, c


# -- extendability -------------------------------------------------------------

def t_matchings(g: Graph, t: int, first_edges: range | None = None) -> Iterator[tuple[int, ...]]:
    """Edge-index tuples of all t-matchings, ascending, in lexicographic order."""
    edges = g.edges()
    m = len(edges)
    firsts = range(m) if first_edges is None else first_edges
    chosen: list[int] = []

    def rec(start: int, used: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == t:
            yield tuple(chosen)
            return
        for i in range(start, m):
            u, w = edges[i]
            if used >> u & 1 or used >> w & 1:
                continue
            chosen.append(i)
            yield from rec(i + 1, used | 1 << u | 1 << w)
            chosen.pop()

    for i in firsts:
        u, w = edges[i]
        chosen.append(i)
        yield from rec(i + 1, 1 << u | 1 << w)
        chosen.pop()


def _check_preconditions(g: Graph, t: int) -> Matching:
    if g.v % 2:
        raise OddOrder("extendability is defined for even order")
    if 2 * t >= g.v:
        raise TTooLarge(f"t = {t} must be below v/2 = {g.v // 2}")
    if t < 1:
        raise ValueError("t must be >= 1")
    if not is_connected(g):
        raise MatchingError("extendability needs a connected graph")
    perfect = maximum_matching(g)
    if 2 * len(perfect) != g.v:
        raise NoPerfectMatching("graph has no perfect matching")
    return perfect


def _scan(g: Graph, t: int, perfect: Matching, first_edges: range, node_limit: int | None):
    """First failing t-matching (as edge indices) with first edge in ``first_edges``."""
    edges = g.edges()
    adj = g.adjacency
    n = g.v
    pmate = [-1] * n
    for u, w in perfect.edges:
        pmate[u], pmate[w] = w, u
    target = n // 2 - t
    seen = 0
    for combo in t_matchings(g, t, first_edges):
        seen += 1
        if node_limit is not None and seen > node_limit:
            return "budget", seen
        alive = [True] * n
        for i in combo:
            u, w = edges[i]
            alive[u] = alive[w] = False
        mate = [p if alive[u] and alive[p] else -1 for u, p in enumerate(pmate)]
        if _complete_matching(adj, alive, mate) != target:
            return combo, seen
    return None, seen


def _scan_job(args):
    return _scan(*args)


def is_t_extendable(
    g: Graph, t: int, node_limit: int | None = None, workers: int = 1
) -> bool | CounterExample:
    """True, or the canonically first t-matching lying in no perfect matching."""
    perfect = _check_preconditions(g, t)
    m = g.e
    if workers <= 1 or m < 2 * workers:
        combo, seen = _scan(g, t, perfect, range(m), node_limit)
    else:
        # chunks by first edge keep the canonical order; the reduction replays the
        # serial scan's global count so budget outcomes do not depend on workers
        bounds = [m * i // (4 * workers) for i in range(4 * workers + 1)]
        jobs = [(g, t, perfect, range(a, b), node_limit) for a, b in zip(bounds, bounds[1:])]
        combo, total = None, 0
        pool = ProcessPoolExecutor(max_workers=workers)
        try:
            # waves of `workers` chunks, each given only the budget still unspent
            for w0 in range(0, len(jobs), workers):
                left = None if node_limit is None else node_limit - total
                wave = [job[:4] + (left,) for job in jobs[w0 : w0 + workers]]
                for found, seen in pool.map(_scan_job, wave):
                    total += seen
                    if found == "budget" or (node_limit is not None and total > node_limit):
                        combo = "budget"
                        break
                    if found is not None:
                        combo = found
                        break
                if combo is not None:
                    break
        finally:
            pool.shutdown(wait=True, cancel_futures=True)
    if combo == "budget":
        raise BudgetExceeded(f"more than {node_limit} {t}-matchings to check")
    if combo is None:
        return True
    edges = g.edges()
    return CounterExample(Matching.of(edges[i] for i in combo))


def extendability(
    g: Graph, t_max_hint: int | None = None, node_limit: int | None = None, workers: int = 1
) -> ExtendabilityResult:
    """Largest t (from 1 upward, capped at min(hint, v/2 - 1)) with g t-extendable.

    The default hint is the maximum degree: a t-extendable graph is
    (t+1)-connected, so no larger t can succeed.
    """
    _check_preconditions(g, 1)
    hint = max(g.degree(u) for u in range(g.v)) if t_max_hint is None else t_max_hint
    cap = min(hint, g.v // 2 - 1)
    value = 0
    for t in range(1, cap + 1):
        try:
            res = is_t_extendable(g, t, node_limit=node_limit, workers=workers)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), ExtendabilityResult(value, None, None, False)) from None
        if isinstance(res, CounterExample):
            return ExtendabilityResult(value, res.matching, find_barrier(g, res.matching), True)
        value = t
    return ExtendabilityResult(value, None, None, cap == g.v // 2 - 1 or t_max_hint is None)


def odd_component_count(g: Graph, s: int) -> int:
    return sum(1 for comp in components(g, g.all_mask & ~s) if comp.bit_count() % 2)


def verify_barrier(g: Graph, s: int, t: int) -> bool:
    """S spans t independent edges and o(G - S) >= |S| - 2t + 2."""
    inside = g.induced(members(s))
    if len(maximum_matching(inside)) < t:
        return False
    return odd_component_count(g, s) >= s.bit_count() - 2 * t + 2


def find_barrier(g: Graph, m: Matching) -> Barrier:
    """Barrier certifying that ``m`` extends to no perfect matching.

    With H = G - V(m), the Gallai-Edmonds set A of H has o(H - A) = |A| +
    deficiency(H) >= |A| + 2, so S = A + V(m) is a barrier for t = |m|.
    """
    covered = m.covered
    rest = g.induced(members(g.all_mask & ~covered))
    if has_perfect_matching(rest):
        raise MatchingExtends("the matching extends to a perfect matching")
    _, a, _ = gallai_edmonds(g, covered)
    s = a | covered
    return Barrier(s, len(m), m, odd_component_count(g, s))


def nott_bipartite_witness(g: Graph, t: int) -> tuple[int, ...] | None:
    """Lexicographically first independent set of size m - t + 1 meeting both color classes.

    Exhaustive; meant for small bipartite graphs with classes of size m.
    """
    color = two_coloring(g)
    if color is None:
        raise MatchingError("graph is not bipartite")
    half = g.v // 2
    size = half - t + 1
    masks = g.masks
    for cand in combinations(range(g.v), size):
        if len({color[u] for u in cand}) < 2:
            continue
        mask = bits(cand)
        if all(not masks[u] & mask for u in cand):
            return cand
    return None
