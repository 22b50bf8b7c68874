"""Intersection arrays, their spectra, and array-level predicates."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .graph import DisconnectedGraph, Graph, GraphError, bfs_distances, is_connected

EIG_TOL = 1e-12
MULT_TOL = 1e-6


class InvalidArray(ValueError):
    pass


class NonIntegralMultiplicity(ValueError):
    pass


class NotRegular(GraphError):
    pass


class NotDistanceRegular(GraphError):
    def __init__(self, x: int, y: int, message: str) -> None:
        super().__init__(f"pair ({x}, {y}): {message}")
        self.pair = (x, y)


@dataclass(frozen=True)
class IntersectionArray:
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        b, c = tuple(self.b), tuple(self.c)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if len(b) != len(c) or not b:
            raise InvalidArray("b and c must be non-empty and of equal length")
        if c[0] != 1:
            raise InvalidArray("c1 must be 1")
        if any(x < 1 for x in b) or any(x < 1 for x in c):
            raise InvalidArray("all b_i (i<D) and c_i must be >= 1")
        if any(x < 0 for x in self.a):
            raise InvalidArray(f"negative a_i in {self.a}")
        if any(ci > b[0] for ci in c):
            raise InvalidArray("c_i cannot exceed k")
        sizes = [1]
        for i in range(self.D):
            num = sizes[-1] * b[i]
            if num % c[i] != 0:
                raise InvalidArray(f"k_{i + 1} = {num}/{c[i]} is not an integer")
            sizes.append(num // c[i])
        object.__setattr__(self, "_sizes", tuple(sizes))

    @classmethod
    def parse(cls, text: str) -> IntersectionArray:
        m = re.fullmatch(r"\s*\{([^;}]*);([^;}]*)\}\s*", text)
        if not m:
            raise InvalidArray(f"cannot parse intersection array {text!r}")

        def ints(part: str) -> tuple[int, ...]:
            items = [s.strip() for s in part.split(",")]
            if items and items[-1] == "":
                items.pop()
            try:
                return tuple(int(s) for s in items)
            except ValueError:
                raise InvalidArray(f"non-integer entry in {text!r}") from None

        return cls(ints(m.group(1)), ints(m.group(2)))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"

    @property
    def D(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        return self.b[i] if i < self.D else 0

    def c_at(self, i: int) -> int:
        return self.c[i - 1] if i >= 1 else 0

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(self.k - self.b_at(i) - self.c_at(i) for i in range(self.D + 1))

    @property
    def lam(self) -> int:
        return self.a[1]

    @property
    def mu(self) -> int | None:
        return self.c[1] if self.D >= 2 else None

    @property
    def sizes(self) -> tuple[int, ...]:
        """k_0 .. k_D, the sizes of the distance layers."""
        return self._sizes  # type: ignore[attr-defined]

    @property
    def v(self) -> int:
        return sum(self.sizes)

    @property
    def e(self) -> int:
        return self.v * self.k // 2

    def intersection_matrix(self) -> list[list[int]]:
        n = self.D + 1
        mat = [[0] * n for _ in range(n)]
        for i in range(n):
            if i > 0:
                mat[i][i - 1] = self.c_at(i)
            mat[i][i] = self.a[i]
            if i < self.D:
                mat[i][i + 1] = self.b_at(i)
        return mat


@dataclass(frozen=True)
class Spectrum:
    pairs: tuple[tuple[float, int], ...]

    @property
    def v(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def eigenvalues(self) -> list[float]:
        return [t for t, _ in self.pairs]

    @property
    def min_eigenvalue(self) -> float:
        return self.pairs[-1][0]

    @property
    def n_plus(self) -> int:
        return sum(m for t, m in self.pairs if t > 1e-9)

    @property
    def n_minus(self) -> int:
        return sum(m for t, m in self.pairs if t < -1e-9)

    def multiplicity(self, theta: float, tol: float = 1e-9) -> int:
        return sum(m for t, m in self.pairs if abs(t - theta) <= tol)

    def moment(self, power: int) -> float:
        return sum(m * t**power for t, m in self.pairs)


def _sturm_count(diag: list[int], off_sq: list[int], x: float) -> int:
    """Number of eigenvalues of the symmetric tridiagonal matrix below x."""
    count = 0
    q = 1.0
    for i, d in enumerate(diag):
        q = (d - x) - (off_sq[i - 1] / q if i > 0 else 0.0)
        if q == 0.0:
            q = -1e-300
        if q < 0:
            count += 1
    return count


def tridiagonal_eigenvalues(arr: IntersectionArray) -> list[float]:
    """Eigenvalues of the intersection matrix, descending.

    The matrix is diagonally similar to the symmetric tridiagonal matrix with
    diagonal a_i and squared off-diagonals b_i c_{i+1}; each eigenvalue is
    isolated by bisection on Sturm counts.
    """
    diag = list(arr.a)
    off_sq = [arr.b[i] * arr.c[i] for i in range(arr.D)]
    n = len(diag)
    lo0, hi0 = -arr.k - 1.0, arr.k + 1.0
    found = []
    for j in range(n):
        # the j-th smallest eigenvalue is the least x with count(x) > j
        lo, hi = lo0, hi0
        while hi - lo > EIG_TOL:
            mid = 0.5 * (lo + hi)
            if _sturm_count(diag, off_sq, mid) > j:
                hi = mid
            else:
                lo = mid
        mid = 0.5 * (lo + hi)
        r = round(mid)
        if abs(mid - r) < 1e-9 and _char_poly_at(diag, off_sq, r) == 0:
            mid = float(r)  # exact integer eigenvalue, drop the bisection noise
        found.append(mid)
    return sorted(found, reverse=True)


def _char_poly_at(diag: list[int], off_sq: list[int], x: int) -> int:
    """det(T - xI) in exact integer arithmetic via the three-term recurrence."""
    prev, cur = 1, diag[0] - x
    for i in range(1, len(diag)):
        prev, cur = cur, (diag[i] - x) * cur - off_sq[i - 1] * prev
    return cur


def standard_sequence(arr: IntersectionArray, theta: float) -> list[float]:
    u = [1.0, theta / arr.k]
    a = arr.a
    for i in range(1, arr.D):
        u.append(((theta - a[i]) * u[i] - arr.c_at(i) * u[i - 1]) / arr.b_at(i))
    return u[: arr.D + 1]


def recurrence_residuals(arr: IntersectionArray, theta: float) -> list[float]:
    """|c_i u_{i-1} + a_i u_i + b_i u_{i+1} - theta u_i| for i = 0..D."""
    u = standard_sequence(arr, theta)
    a = arr.a
    out = []
    for i in range(arr.D + 1):
        lhs = a[i] * u[i]
        if i > 0:
            lhs += arr.c_at(i) * u[i - 1]
        if i < arr.D:
            lhs += arr.b_at(i) * u[i + 1]
        out.append(abs(lhs - theta * u[i]))
    return out


def drg_spectrum(arr: IntersectionArray) -> Spectrum:
    v = arr.v
    pairs = []
    for theta in tridiagonal_eigenvalues(arr):
        u = standard_sequence(arr, theta)
        norm = sum(ki * ui * ui for ki, ui in zip(arr.sizes, u))
        m = v / norm
        mi = round(m)
        if abs(m - mi) > MULT_TOL or mi < 1:
            raise NonIntegralMultiplicity(f"multiplicity {m:.9g} of {theta:.9g} in {arr}")
        pairs.append((theta, mi))
    spec = Spectrum(tuple(pairs))
    tol = MULT_TOL * max(1, v * arr.k)
    if spec.v != v or abs(spec.moment(1)) > tol or abs(spec.moment(2) - v * arr.k) > tol:
        raise NonIntegralMultiplicity(f"trace identities fail for {arr}")
    return spec


def graph_spectrum(g: Graph, tol: float = 1e-6) -> Spectrum:
    """Dense symmetric eigen-solve of the adjacency matrix, eigenvalues grouped."""
    mat = np.zeros((g.v, g.v))
    for u, w in g.edges():
        mat[u, w] = mat[w, u] = 1.0
    values = sorted(np.linalg.eigvalsh(mat), reverse=True)
    pairs: list[list] = []
    for x in values:
        if pairs and abs(pairs[-1][0] - x) <= tol:
            total, count = pairs[-1][2] + x, pairs[-1][1] + 1
            pairs[-1] = [total / count, count, total]
        else:
            pairs.append([float(x), 1, float(x)])
    return Spectrum(tuple((float(t), m) for t, m, _ in pairs))


def is_bipartite_array(arr: IntersectionArray) -> bool:
    return any(abs(t + arr.k) <= 1e-9 for t in tridiagonal_eigenvalues(arr))


def intersection_array_of(g: Graph) -> IntersectionArray:
    if not is_connected(g):
        raise DisconnectedGraph("distance-regularity needs a connected graph")
    k = g.regular_degree()
    if k is None:
        raise NotRegular("graph is not regular")
    if g.v == 1:
        raise InvalidArray("the one-vertex graph has no intersection array")
    masks = g.masks
    b_seen: dict[int, int] = {}
    c_seen: dict[int, int] = {}
    for x in range(g.v):
        dist = bfs_distances(g, x)
        ecc = max(dist)  # type: ignore[type-var]
        layers = [0] * (ecc + 2)
        for y, d in enumerate(dist):
            layers[d] |= 1 << y  # type: ignore[index]
        for y in range(g.v):
            i = dist[y]
            if i == 0:
                continue
            ci = (masks[y] & layers[i - 1]).bit_count()  # type: ignore[operator]
            bi = (masks[y] & layers[i + 1]).bit_count()  # type: ignore[operator]
            if c_seen.setdefault(i, ci) != ci:  # type: ignore[arg-type]
                raise NotDistanceRegular(x, y, f"c_{i} = {ci}, expected {c_seen[i]}")  # type: ignore[index]
            if b_seen.setdefault(i, bi) != bi:  # type: ignore[arg-type]
                raise NotDistanceRegular(x, y, f"b_{i} = {bi}, expected {b_seen[i]}")  # type: ignore[index]
    D = max(c_seen)
    if b_seen[D] != 0:
        raise NotDistanceRegular(0, 0, "vertices of differing eccentricity")
    b = (k,) + tuple(b_seen[i] for i in range(1, D))
    c = tuple(c_seen[i] for i in range(1, D + 1))
    return IntersectionArray(b, c)


def is_taylor(arr: IntersectionArray) -> bool:
    """True iff the array reads {k, mu, 1; 1, mu, k}."""
    if arr.D != 3:
        return False
    k, mu, one = arr.b
    return one == 1 and arr.c == (1, mu, k)


def shadow_bound(arr: IntersectionArray, t_total: int) -> float:
    """Strict lower bound v(1 - |T|/(mu k_2)) on a component with a deep point."""
    if arr.D < 2:
        raise InvalidArray("the bound needs diameter >= 2")
    if t_total < 0:
        raise ValueError("t_total must be non-negative")
    return arr.v * (1 - t_total / (arr.mu * arr.sizes[2]))  # type: ignore[operator]


def shadow_bound_profile(arr: IntersectionArray, t: list[int]) -> float:
    """v - sum_i t_i/(c_i k_i) (k_i + ... + k_D), with t = [t_1, ..., t_D]."""
    if len(t) != arr.D:
        raise InvalidArray(f"need {arr.D} layer counts, got {len(t)}")
    sizes = arr.sizes
    tails = [sum(sizes[i:]) for i in range(arr.D + 1)]
    total = 0.0
    for i in range(1, arr.D + 1):
        total += t[i - 1] / (arr.c_at(i) * sizes[i]) * tails[i]
    return arr.v - total
