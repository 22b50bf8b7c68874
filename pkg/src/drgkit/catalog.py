"""Deterministic constructors for the named graphs, each checked on construction.

Every constructor below documents its vertex labeling.  ``build`` compares
the graph against the entry's expected order, size, bipartiteness and (when
present) intersection array, raising ``SelfValidationFailed`` on any
disagreement.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .graph import Graph, GraphError, blowup_cycle, two_coloring
from .params import IntersectionArray, intersection_array_of


class CatalogError(ValueError):
    pass


class UnknownName(CatalogError):
    pass


class BadParams(CatalogError):
    pass


class SelfValidationFailed(CatalogError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple[int, ...]
    expected_array: IntersectionArray | None
    expected_order: int
    expected_size: int
    bipartite: bool

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({','.join(map(str, self.params))})"


# -- constructions -----------------------------------------------------------

def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    """Part ``j`` occupies a contiguous block of labels, in the order given."""
    owner = [j for j, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return Graph.from_edges(n, [(a, b) for a, b in combinations(range(n), 2) if owner[a] != owner[b]])


def hamming(D: int, q: int) -> Graph:
    """Words over 0..q-1 in lexicographic order; word w has label sum w_i q^(D-1-i)."""
    words = list(product(range(q), repeat=D))
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        for pos in range(D):
            for sym in range(w[pos] + 1, q):
                u = w[:pos] + (sym,) + w[pos + 1 :]
                edges.append((index[w], index[u]))
    return Graph.from_edges(len(words), edges)


def johnson(n: int, m: int) -> Graph:
    """m-subsets of 0..n-1 in ``itertools.combinations`` order."""
    subsets = [frozenset(s) for s in combinations(range(n), m)]
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2) if len(subsets[i] & subsets[j]) == m - 1]
    return Graph.from_edges(len(subsets), edges)


def odd_graph(k: int) -> Graph:
    """O_k: (k-1)-subsets of a (2k-1)-set in combinations order, adjacent iff disjoint."""
    m = k - 1
    subsets = [frozenset(s) for s in combinations(range(2 * m + 1), m)]
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]]
    return Graph.from_edges(len(subsets), edges)


def generalized_petersen(n: int, s: int) -> Graph:
    """Outer cycle 0..n-1, spokes i -- n+i, inner n+i -- n+(i+s mod n)."""
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + s) % n))
    return Graph.from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def dodecahedron() -> Graph:
    return generalized_petersen(10, 2)


FANO_LINES = [frozenset({i, (i + 1) % 7, (i + 3) % 7}) for i in range(7)]


def coxeter() -> Graph:
    """The 28 triples of a 7-set that are not lines of the Fano plane {i, i+1, i+3},
    in combinations order, adjacent iff disjoint."""
    triples = [frozenset(t) for t in combinations(range(7), 3) if frozenset(t) not in FANO_LINES]
    edges = [(i, j) for i, j in combinations(range(len(triples)), 2) if not triples[i] & triples[j]]
    return Graph.from_edges(len(triples), edges)


def biggs_smith() -> Graph:
    """Z_17-symmetric form with six orbits of 17 vertices.

    Orbits 0..3 (labels 17c + i) are the circulant cycles i ~ i + j for jumps
    j = 1, 2, 4, 8.  Orbit A (68 + i) and orbit B (85 + i) are matched
    A_i ~ B_i; A_i also meets the jump-1 and jump-4 cycles at position i,
    B_i the jump-2 and jump-8 cycles.
    """
    jumps = (1, 2, 4, 8)
    edges = []
    for c, j in enumerate(jumps):
        for i in range(17):
            edges.append((17 * c + i, 17 * c + (i + j) % 17))
    for i in range(17):
        a, b = 68 + i, 85 + i
        edges += [(a, b), (a, i), (a, 34 + i), (b, 17 + i), (b, 51 + i)]
    return Graph.from_edges(102, edges)


def _clebsch_edges() -> list[tuple[int, int]]:
    """Folded 5-cube on GF(2)^4: x ~ x + e_i and x ~ x + 1111."""
    out = []
    for x in range(16):
        for d in (1, 2, 4, 8, 15):
            if x < x ^ d:
                out.append((x, x ^ d))
    return out


def _solve_gf2(rows: list[int], nvars: int) -> list[int]:
    """Solve the system whose row bit ``nvars`` is the right-hand side."""
    pivots: dict[int, int] = {}
    for r in rows:
        for col, prow in pivots.items():
            if r >> col & 1:
                r ^= prow
        lead = next((c for c in range(nvars) if r >> c & 1), None)
        if lead is None:
            if r >> nvars & 1:
                raise SelfValidationFailed("inconsistent GF(2) system")
            continue
        for col in pivots:
            if pivots[col] >> lead & 1:
                pivots[col] ^= r
        pivots[lead] = r
    sol = [0] * nvars
    for col, prow in pivots.items():
        sol[col] = prow >> nvars & 1
    return sol


def wells() -> Graph:
    """Antipodal double cover of the folded 5-cube.

    Each Clebsch edge gets a sign s in GF(2) such that every 4-cycle has odd
    total sign (found by elimination; free variables set to 0).  Vertex
    (x, layer) has label 2x + layer and (x, l) ~ (y, l + s(xy)).
    """
    base = _clebsch_edges()
    eid = {e: i for i, e in enumerate(base)}
    nbrs = [set() for _ in range(16)]
    for a, b in base:
        nbrs[a].add(b)
        nbrs[b].add(a)

    def edge(a: int, b: int) -> int:
        return 1 << eid[(min(a, b), max(a, b))]

    rows = set()
    for x, y in combinations(range(16), 2):
        if y in nbrs[x]:
            continue
        p, q = sorted(nbrs[x] & nbrs[y])
        rows.add(edge(x, p) | edge(p, y) | edge(y, q) | edge(q, x) | 1 << len(base))
    signs = _solve_gf2(sorted(rows), len(base))
    edges = []
    for (a, b), s in zip(base, signs):
        for layer in (0, 1):
            edges.append((2 * a + layer, 2 * b + (layer ^ s)))
    return Graph.from_edges(32, edges)


def hoffman_singleton() -> Graph:
    """Pentagons P_h (label 5h + j) and pentagrams Q_i (label 25 + 5i + j);
    vertex j of P_h meets vertex h*i + j (mod 5) of Q_i."""
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
    for h, i, j in product(range(5), repeat=3):
        edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return Graph.from_edges(50, edges)


def shrikhande() -> Graph:
    """Cayley graph on Z_4 x Z_4 (label 4a + b) with connection set ±(1,0), ±(0,1), ±(1,1)."""
    edges = []
    for a, b in product(range(4), repeat=2):
        for da, db in ((1, 0), (0, 1), (1, 1)):
            edges.append((4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4))
    return Graph.from_edges(16, edges)


def icosahedron() -> Graph:
    """Apex 0, upper ring 1..5, lower ring 6..10, apex 11; upper 1+j meets lower 6+j and 6+(j+1)."""
    edges = []
    for j in range(5):
        up, lo = 1 + j, 6 + j
        edges += [(0, up), (up, 1 + (j + 1) % 5), (11, lo), (lo, 6 + (j + 1) % 5)]
        edges += [(up, lo), (up, 6 + (j + 1) % 5)]
    return Graph.from_edges(12, edges)


# -- expected parameters -----------------------------------------------------

def _arr(b, c) -> IntersectionArray:
    return IntersectionArray(tuple(b), tuple(c))


def _cycle_expected(n):
    D = n // 2
    arr = _arr([2] + [1] * (D - 1), [1] * (D - 1) + [2 if n % 2 == 0 else 1])
    return arr, n, n, n % 2 == 0


def _complete_expected(n):
    return _arr([n - 1], [1]), n, comb(n, 2), n == 2


def _multipartite_expected(*parts):
    n = sum(parts)
    size = (n * n - sum(p * p for p in parts)) // 2
    arr = None
    if len(set(parts)) == 1:
        s, r = parts[0], len(parts)
        arr = _arr([r - 1], [1]) if s == 1 else _arr([(r - 1) * s, s - 1], [1, (r - 1) * s])
    return arr, n, size, len(parts) == 2


def _hamming_expected(D, q):
    arr = _arr([(D - i) * (q - 1) for i in range(D)], list(range(1, D + 1)))
    return arr, q**D, q**D * D * (q - 1) // 2, q == 2


def _johnson_expected(n, m):
    m = min(m, n - m)
    arr = _arr([(m - i) * (n - m - i) for i in range(m)], [i * i for i in range(1, m + 1)])
    v = comb(n, m)
    return arr, v, v * m * (n - m) // 2, n == 2


def _odd_expected(k):
    m = k - 1
    b = [k - (i + 1) // 2 for i in range(m)]
    c = [(i + 1) // 2 for i in range(1, m + 1)]
    v = comb(2 * m + 1, m)
    return _arr(b, c), v, v * k // 2, False


def _blowup_expected(g, m):
    if m == 1:
        arr = _cycle_expected(g)[0]
    elif g == 3:
        arr = _arr([2 * m, m - 1], [1, 2 * m])
    else:
        arr = None
    return arr, g * m, g * m * m, False


def _fixed(b, c, v, e):
    return lambda: (_arr(b, c), v, e, False)


@dataclass(frozen=True)
class _Kind:
    builder: Callable[..., Graph]
    expected: Callable[..., tuple]
    arity: int | None  # None: variadic
    check: Callable[..., bool]


_KINDS: dict[str, _Kind] = {
    "cycle": _Kind(cycle, _cycle_expected, 1, lambda n: n >= 3),
    "complete": _Kind(complete, _complete_expected, 1, lambda n: n >= 2),
    "complete_multipartite": _Kind(
        complete_multipartite, _multipartite_expected, None, lambda *p: len(p) >= 2 and min(p) >= 1
    ),
    "hypercube": _Kind(lambda D: hamming(D, 2), lambda D: _hamming_expected(D, 2), 1, lambda D: D >= 1),
    "hamming": _Kind(hamming, _hamming_expected, 2, lambda D, q: D >= 1 and q >= 2),
    "johnson": _Kind(johnson, _johnson_expected, 2, lambda n, m: 1 <= m < n),
    "odd_graph": _Kind(odd_graph, _odd_expected, 1, lambda k: k >= 2),
    "petersen": _Kind(petersen, _fixed([3, 2], [1, 1], 10, 15), 0, lambda: True),
    "dodecahedron": _Kind(dodecahedron, _fixed([3, 2, 1, 1, 1], [1, 1, 1, 2, 3], 20, 30), 0, lambda: True),
    "coxeter": _Kind(coxeter, _fixed([3, 2, 2, 1], [1, 1, 1, 2], 28, 42), 0, lambda: True),
    "biggs_smith": _Kind(
        biggs_smith, _fixed([3, 2, 2, 2, 1, 1, 1], [1, 1, 1, 1, 1, 1, 3], 102, 153), 0, lambda: True
    ),
    "wells": _Kind(wells, _fixed([5, 4, 1, 1], [1, 1, 4, 5], 32, 80), 0, lambda: True),
    "hoffman_singleton": _Kind(hoffman_singleton, _fixed([7, 6], [1, 1], 50, 175), 0, lambda: True),
    "shrikhande": _Kind(shrikhande, _fixed([6, 3], [1, 2], 16, 48), 0, lambda: True),
    "icosahedron": _Kind(icosahedron, _fixed([5, 2, 1], [1, 2, 5], 12, 30), 0, lambda: True),
    "blowup_cycle": _Kind(blowup_cycle, _blowup_expected, 2, lambda g, m: g >= 3 and g % 2 == 1 and m >= 1),
}

NAMES = tuple(_KINDS)


def entry(name: str, *params: int) -> CatalogEntry:
    kind = _KINDS.get(name)
    if kind is None:
        raise UnknownName(f"unknown catalog name {name!r}; known: {', '.join(NAMES)}")
    if kind.arity is not None and len(params) != kind.arity:
        raise BadParams(f"{name} takes {kind.arity} parameter(s), got {len(params)}")
    if not kind.check(*params):
        raise BadParams(f"invalid parameters {params} for {name}")
    arr, order, size, bip = kind.expected(*params)
    return CatalogEntry(name, tuple(params), arr, order, size, bip)


def build(name: str, *params: int) -> tuple[Graph, CatalogEntry]:
    ent = entry(name, *params)
    g = _KINDS[name].builder(*params)
    g = Graph(g.v, g.adjacency, ent.label)
    if g.v != ent.expected_order or g.e != ent.expected_size:
        raise SelfValidationFailed(
            f"{ent.label}: got v={g.v}, e={g.e}; expected {ent.expected_order}, {ent.expected_size}"
        )
    if (two_coloring(g) is not None) != ent.bipartite:
        raise SelfValidationFailed(f"{ent.label}: bipartiteness disagrees with the entry")
    try:
        arr = intersection_array_of(g)
    except (GraphError, ValueError):
        arr = None
    if arr != ent.expected_array:
        raise SelfValidationFailed(f"{ent.label}: intersection array {arr}, expected {ent.expected_array}")
    return g, ent


def parse_spec(text: str) -> tuple[str, tuple[int, ...]]:
    """``name`` or ``name(p1,p2,...)`` or a whitespace list ``name p1 p2``."""
    text = text.strip()
    if "(" in text:
        if not text.endswith(")"):
            raise BadParams(f"cannot parse {text!r}")
        name, _, rest = text[:-1].partition("(")
        parts = [p for p in rest.split(",") if p.strip()]
    else:
        name, *parts = text.split()
    try:
        return name.strip(), tuple(int(p) for p in parts)
    except ValueError:
        raise BadParams(f"non-integer parameter in {text!r}") from None


_DEFAULT = [
    ("cycle", (5,)),
    ("cycle", (6,)),
    ("complete", (4,)),
    ("complete", (6,)),
    ("complete_multipartite", (2, 2, 2)),
    ("hypercube", (3,)),
    ("hypercube", (4,)),
    ("hamming", (2, 3)),
    ("hamming", (3, 3)),
    ("hamming", (3, 4)),
    ("johnson", (5, 2)),
    ("johnson", (6, 3)),
    ("johnson", (8, 3)),
    ("odd_graph", (3,)),
    ("odd_graph", (4,)),
    ("petersen", ()),
    ("dodecahedron", ()),
    ("coxeter", ()),
    ("biggs_smith", ()),
    ("wells", ()),
    ("hoffman_singleton", ()),
    ("shrikhande", ()),
    ("icosahedron", ()),
    ("blowup_cycle", (5, 2)),
]


def list_catalog() -> list[CatalogEntry]:
    return [entry(name, *params) for name, params in _DEFAULT]
