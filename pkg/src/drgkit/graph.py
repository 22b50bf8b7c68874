"""Immutable simple undirected graphs on vertices 0..v-1.

Adjacency is kept twice: as sorted tuples for iteration and as Python-int
bitsets for intersection counting.  Vertex sets passed around the package
are plain ints used as bitsets (bit ``u`` set iff ``u`` is a member).
"""

from __future__ import annotations

import enum
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field


class GraphError(ValueError):
    pass


class DisconnectedGraph(GraphError):
    pass


class EdgeNotPresent(GraphError):
    pass


class EvenLength(GraphError):
    pass


class Inf(enum.Enum):
    """Distance between vertices in different components."""

    INF = "inf"

    def __repr__(self) -> str:
        return "INF"


INF = Inf.INF


class _Bipartite(enum.Enum):
    BIPARTITE = "bipartite"

    def __repr__(self) -> str:
        return "BIPARTITE"


BIPARTITE = _Bipartite.BIPARTITE


def bits(members: Iterable[int]) -> int:
    out = 0
    for u in members:
        out |= 1 << u
    return out


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    v: int
    adjacency: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.v < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adjacency) != self.v:
            raise GraphError("adjacency length must equal v")
        masks = []
        for u, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbors of {u} must be sorted and distinct")
            if u in nbrs:
                raise GraphError(f"loop at vertex {u}")
            for w in nbrs:
                if not 0 <= w < self.v:
                    raise GraphError(f"neighbor {w} of {u} out of range")
            masks.append(bits(nbrs))
        for u, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                if not masks[w] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {w}")
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(v)]
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            if not (0 <= a < v and 0 <= b < v):
                raise GraphError(f"edge ({a}, {b}) out of range")
            nbrs[a].add(b)
            nbrs[b].add(a)
        return cls(v, tuple(tuple(sorted(s)) for s in nbrs), name)

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks  # type: ignore[attr-defined]

    @property
    def e(self) -> int:
        return sum(len(n) for n in self.adjacency) // 2

    @property
    def all_mask(self) -> int:
        return (1 << self.v) - 1

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, w: int) -> bool:
        return bool(self.masks[u] >> w & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, w)`` with ``u < w`` in lexicographic order."""
        return [(u, w) for u in range(self.v) for w in self.adjacency[u] if u < w]

    def regular_degree(self) -> int | None:
        degs = {len(n) for n in self.adjacency}
        return degs.pop() if len(degs) == 1 else None

    def induced(self, vertices: Sequence[int], name: str = "") -> Graph:
        """Induced subgraph; vertex ``vertices[i]`` becomes ``i``."""
        index = {u: i for i, u in enumerate(vertices)}
        adj = []
        for u in vertices:
            adj.append(tuple(sorted(index[w] for w in self.adjacency[u] if w in index)))
        return Graph(len(vertices), tuple(adj), name)

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"Graph({label}v={self.v}, e={self.e})"


def bfs_distances(g: Graph, source: int) -> list[int | Inf]:
    dist: list[int | Inf] = [INF] * g.v
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adjacency[u]:
            if dist[w] is INF:
                dist[w] = du + 1  # type: ignore[operator]
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> list[list[int | Inf]]:
    return [bfs_distances(g, u) for u in range(g.v)]


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced on ``within`` (bitset)."""
    remaining = g.all_mask if within is None else within
    out = []
    masks = g.masks
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= masks[low.bit_length() - 1]
                f ^= low
            grow &= remaining & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def diameter(g: Graph) -> int:
    best = 0
    for row in distance_matrix(g):
        if INF in row:
            raise DisconnectedGraph("diameter of a disconnected graph")
        best = max(best, max(row))  # type: ignore[type-var]
    return best


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring (0/1 per vertex) or None when an odd cycle exists."""
    color = [-1] * g.v
    for s in range(g.v):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def odd_girth(g: Graph) -> int | _Bipartite:
    """Length of a shortest odd cycle, or BIPARTITE.

    From each root a BFS layering finds the shortest odd closed walk through
    it: an edge inside layer ``d`` closes a walk of length ``2d + 1``.  The
    minimum over roots is the odd girth, since a shortest odd closed walk is
    a cycle.
    """
    if not is_connected(g):
        raise DisconnectedGraph("odd girth needs a connected graph")
    if two_coloring(g) is not None:
        return BIPARTITE
    best = None
    for root in range(g.v):
        dist = bfs_distances(g, root)
        for u, w in g.edges():
            if dist[u] == dist[w]:
                length = 2 * dist[u] + 1  # type: ignore[operator]
                if best is None or length < best:
                    best = length
    assert best is not None
    return best


def count_cycles_through_edge(g: Graph, edge: tuple[int, int], length: int) -> int:
    """Number of distinct cycles of the given length that use ``edge``.

    Every such cycle, read starting ``u -> w``, is one simple path from ``w``
    back to ``u`` of ``length - 1`` steps, so each is counted exactly once.
    """
    u, w = edge
    if length < 3:
        raise GraphError("cycles have length at least 3")
    if not g.has_edge(u, w):
        raise EdgeNotPresent(f"({u}, {w}) is not an edge")
    dist_u = bfs_distances(g, u)
    adj = g.adjacency
    target_steps = length - 1
    count = 0
    # iterative DFS; prune when u is out of reach in the remaining steps
    stack = [(w, 1 << w | 1 << u, 0, iter(adj[w]))]
    while stack:
        x, used, steps, it = stack[-1]
        advanced = False
        for y in it:
            if y == u:
                if steps + 1 == target_steps:
                    count += 1
                continue
            if used >> y & 1:
                continue
            left = target_steps - steps - 1
            dy = dist_u[y]
            if dy is INF or dy > left:  # type: ignore[operator]
                continue
            stack.append((y, used | 1 << y, steps + 1, iter(adj[y])))
            advanced = True
            break
        if not advanced:
            stack.pop()
    return count


def edge_boundary(g: Graph, a: int) -> int:
    """e(A, A^c) for the bitset ``a``."""
    outside = g.all_mask & ~a
    total = 0
    masks = g.masks
    m = a
    while m:
        low = m & -m
        total += (masks[low.bit_length() - 1] & outside).bit_count()
        m ^= low
    return total


def edges_between(g: Graph, a: int, b: int) -> int:
    total = 0
    masks = g.masks
    m = a
    while m:
        low = m & -m
        total += (masks[low.bit_length() - 1] & b).bit_count()
        m ^= low
    return total


def neighborhood(g: Graph, a: int) -> int:
    """Vertices outside ``a`` adjacent to at least one member of ``a``."""
    out = 0
    masks = g.masks
    m = a
    while m:
        low = m & -m
        out |= masks[low.bit_length() - 1]
        m ^= low
    return out & ~a


def is_independent(g: Graph, a: int) -> bool:
    masks = g.masks
    m = a
    while m:
        low = m & -m
        if masks[low.bit_length() - 1] & a:
            return False
        m ^= low
    return True


def blowup_cycle(g_len: int, m: int) -> Graph:
    """Lexicographic product of C_g with the empty graph on m vertices.

    Coclique ``i`` occupies vertices ``i*m .. i*m + m - 1``.
    """
    if g_len < 3 or g_len % 2 == 0:
        raise EvenLength(f"blow-up needs an odd cycle length >= 3, got {g_len}")
    if m < 1:
        raise GraphError("coclique size must be >= 1")
    edges = []
    for i in range(g_len):
        j = (i + 1) % g_len
        for x in range(m):
            for y in range(m):
                edges.append((i * m + x, j * m + y))
    return Graph.from_edges(g_len * m, edges, name=f"blowup_cycle({g_len},{m})")


def subgraph_at_distance_ge(g: Graph, x: int, i: int) -> tuple[Graph, list[int]]:
    """Subgraph induced on vertices at distance >= i from x, plus the index map."""
    if not is_connected(g):
        raise DisconnectedGraph("needs a connected graph")
    dist = bfs_distances(g, x)
    keep = [y for y in range(g.v) if dist[y] >= i]  # type: ignore[operator]
    return g.induced(keep), keep


# -- connectivity by unit-capacity max flow ---------------------------------

def _max_flow_unit(n: int, arcs: list[tuple[int, int]], s: int, t: int, cap: int) -> int:
    """Max flow on a unit-capacity digraph, stopping once ``cap`` is reached."""
    head: list[list[int]] = [[] for _ in range(n)]
    to: list[int] = []
    res: list[int] = []
    for a, b in arcs:
        head[a].append(len(to))
        to.append(b)
        res.append(1)
        head[b].append(len(to))
        to.append(a)
        res.append(0)
    flow = 0
    while flow < cap:
        prev = [-1] * n
        prev[s] = -2
        queue = deque([s])
        while queue and prev[t] == -1:
            x = queue.popleft()
            for arc in head[x]:
                if res[arc] and prev[to[arc]] == -1:
                    prev[to[arc]] = arc
                    queue.append(to[arc])
        if prev[t] == -1:
            break
        y = t
        while y != s:
            arc = prev[y]
            res[arc] -= 1
            res[arc ^ 1] += 1
            y = to[arc ^ 1]
        flow += 1
    return flow


def local_edge_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> int:
    arcs = []
    for u, w in g.edges():
        arcs.append((u, w))
        arcs.append((w, u))
    return _max_flow_unit(g.v, arcs, s, t, g.v if cap is None else cap)


def local_vertex_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> int:
    """Internally vertex-disjoint s-t paths, for non-adjacent s and t.

    Vertex splitting: ``x`` becomes ``x_in = 2x`` and ``x_out = 2x + 1``.
    """
    arcs = []
    for x in range(g.v):
        if x not in (s, t):
            arcs.append((2 * x, 2 * x + 1))
    for u, w in g.edges():
        arcs.append((2 * u + 1, 2 * w))
        arcs.append((2 * w + 1, 2 * u))
    return _max_flow_unit(2 * g.v, arcs, 2 * s + 1, 2 * t, g.v if cap is None else cap)


def connectivity(g: Graph) -> tuple[int, int]:
    """(vertex connectivity, edge connectivity)."""
    if g.v < 2:
        raise GraphError("connectivity needs at least two vertices")
    if not is_connected(g):
        raise DisconnectedGraph("connectivity of a disconnected graph is 0")
    min_deg = min(g.degree(u) for u in range(g.v))

    lam = min_deg
    for t in range(1, g.v):
        lam = min(lam, local_edge_connectivity(g, 0, t, cap=lam))

    # some vertex among the first kappa+1 lies outside a minimum separator
    kappa = g.v - 1
    i = 0
    while i <= kappa and i < g.v:
        for j in range(i + 1, g.v):
            if not g.has_edge(i, j):
                kappa = min(kappa, local_vertex_connectivity(g, i, j, cap=kappa))
        i += 1
    return kappa, lam
