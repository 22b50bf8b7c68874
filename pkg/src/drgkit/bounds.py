"""Closed-form max-cut, independence and extendability bounds, and their aggregation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import BIPARTITE, Graph, GraphError, count_cycles_through_edge, is_connected, odd_girth
from .params import (
    IntersectionArray,
    Spectrum,
    drg_spectrum,
    graph_spectrum,
    intersection_array_of,
    is_bipartite_array,
)

FLOOR_EPS = 1e-9


class BipartiteInapplicable(ValueError):
    pass


@dataclass(frozen=True)
class NotApplicable:
    reason: str


@dataclass(frozen=True)
class Bound:
    real: float
    floor: int

    @classmethod
    def of(cls, x: float) -> Bound:
        return cls(x, floor(x))

    def to_json(self) -> dict:
        return {"real": self.real, "floor": self.floor}


def floor(x: float) -> int:
    """Floor that ignores downward rounding noise below 1e-9."""
    return math.floor(x + FLOOR_EPS)


def _odd(g) -> int:
    if g is BIPARTITE or g is None:
        raise BipartiteInapplicable("odd-girth bounds need a non-bipartite graph")
    if g < 3 or g % 2 == 0:
        raise ValueError(f"odd girth must be odd and >= 3, got {g}")
    return g


def maxcut_oddgirth_bound(e: int, g) -> float:
    """mc(G) <= e (1 - 1/g)."""
    return e * (1 - 1 / _odd(g))


def maxcut_spectral_bound(e: int, k: int, lambda_min: float) -> float:
    """mc(G) <= (e/2)(1 - lambda_min/k)."""
    if k < 1 or lambda_min >= 0:
        raise ValueError("needs k >= 1 and a negative least eigenvalue")
    return e / 2 * (1 - lambda_min / k)


def alpha_oddgirth_bound(v: int, g) -> float:
    """alpha(G) <= (v/2)(1 - 1/g)."""
    return v / 2 * (1 - 1 / _odd(g))


def alpha_inertia_bound(spec: Spectrum) -> int:
    """alpha(G) <= min(v - n_minus, v - n_plus)."""
    v = spec.v
    return min(v - spec.n_minus, v - spec.n_plus)


def alpha_hoffman_bound(v: int, k: int, lambda_min: float) -> float:
    """alpha(G) <= v / (1 + k/(-lambda_min))."""
    if lambda_min >= 0:
        raise ValueError("needs a negative least eigenvalue")
    return v / (1 + k / (-lambda_min))


def oddgirth_beats_spectral(k: int, lambda_min: float, g: int) -> bool:
    """Whether e(1-1/g) <= (e/2)(1-lambda_min/k), i.e. lambda_min <= -k(1-2/g)."""
    return lambda_min <= -k * (1 - 2 / g) + 1e-12


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor_frac(x: Fraction) -> int:
    return x.numerator // x.denominator


def extendability_cases(arr: IntersectionArray, bipartite: bool | None = None) -> list[tuple[str, int]]:
    """Every applicable extendability lower bound as (case, t)."""
    if bipartite is None:
        bipartite = is_bipartite_array(arr)
    k, lam, mu, D = arr.k, arr.lam, arr.mu, arr.D
    out = []
    if bipartite:
        out.append(("bipartite: floor((k+1)/2)", (k + 1) // 2))
    if lam >= 1:
        out.append(("lambda>=1: floor(ceil((k+2)/2)/2)", _ceil_frac(Fraction(k + 2, 2)) // 2))
        if mu == 1:
            t = _floor_frac((Fraction(k + 1) - Fraction(k, lam + 1)) / 2)
            out.append(("lambda>=1, mu=1: floor((k+1-k/(lambda+1))/2)", t))
        if D >= 3 and mu is not None and 3 <= mu and 2 * mu <= k:
            t = _ceil_frac(Fraction((k - 3) * (k - 1), 3 * k - 6))
            out.append(("lambda>=1, 3<=mu<=k/2, D>=3: ceil((k-3)(k-1)/(3k-6))", t))
    if not bipartite and D >= 3 and mu is not None and 2 * mu > k:
        out.append(("non-bipartite, mu>k/2, D>=3: floor(k/3)", k // 3))
    if D >= 3 and k >= 3:
        out.append(("D>=3, k>=3: 2", 2))
    return out


def extendability_lower_bound(arr: IntersectionArray, bipartite: bool | None = None) -> int | NotApplicable:
    """Best proven extendability lower bound for an even-order DRG with this array.

    Diameter-2 (strongly regular) arrays are deliberately not covered.
    """
    if arr.D == 2:
        return NotApplicable("diameter 2 (strongly regular): not covered")
    cases = extendability_cases(arr, bipartite)
    if not cases:
        return NotApplicable("no extendability case applies")
    return max(t for _, t in cases)


@dataclass
class BoundReport:
    graph_id: str
    v: int
    e: int
    k: int
    odd_girth: int | None
    spectrum: Spectrum
    array: IntersectionArray | None
    bounds: dict[str, Bound | NotApplicable]
    ext_lower: int | NotApplicable
    notes: list[str] = field(default_factory=list)

    @property
    def lambda_min(self) -> float:
        return self.spectrum.min_eigenvalue

    def to_json(self) -> dict:
        return {
            "graph": self.graph_id,
            "v": self.v,
            "e": self.e,
            "k": self.k,
            "odd_girth": self.odd_girth,
            "lambda_min": self.lambda_min,
            "bounds": {
                name: b.to_json() if isinstance(b, Bound) else None for name, b in self.bounds.items()
            },
            "ext_lower": self.ext_lower if isinstance(self.ext_lower, int) else None,
            "notes": list(self.notes),
        }


def edge_cycle_counts(g: Graph, length: int) -> set[int]:
    return {count_cycles_through_edge(g, edge, length) for edge in g.edges()}


def bound_report(g: Graph, graph_id: str | None = None, check_hypothesis: bool | None = None) -> BoundReport:
    """All bounds applicable to a connected regular graph.

    The odd-girth bounds need every edge to lie on equally many shortest odd
    cycles.  That holds for distance-regular graphs; for any other graph the
    counts are checked directly (``check_hypothesis`` forces the check).
    """
    if not is_connected(g):
        raise GraphError("bound report needs a connected graph")
    k = g.regular_degree()
    if k is None:
        raise GraphError("bound report needs a regular graph")
    graph_id = graph_id or g.name or "graph"
    notes: list[str] = []
    try:
        arr = intersection_array_of(g)
    except (GraphError, ValueError):
        arr = None
    if arr is not None:
        spec = drg_spectrum(arr)
        notes.append(f"distance-regular with intersection array {arr}")
    else:
        spec = graph_spectrum(g)
        notes.append("not distance-regular: spectrum from dense eigen-solve")
    lam_min = spec.min_eigenvalue
    girth = odd_girth(g)
    bounds: dict[str, Bound | NotApplicable] = {}

    if girth is BIPARTITE:
        na = NotApplicable("bipartite: no odd cycle")
        bounds["mc_oddgirth"] = na
        bounds["alpha_oddgirth"] = na
        notes.append("odd-girth bounds: BipartiteInapplicable")
    else:
        hypothesis = True
        if check_hypothesis or (check_hypothesis is None and arr is None):
            counts = edge_cycle_counts(g, girth)
            hypothesis = len(counts) == 1
            notes.append(f"edges lie on {sorted(counts)} cycles of length {girth}")
        if hypothesis:
            bounds["mc_oddgirth"] = Bound.of(maxcut_oddgirth_bound(g.e, girth))
            bounds["alpha_oddgirth"] = Bound.of(alpha_oddgirth_bound(g.v, girth))
        else:
            na = NotApplicable("edges lie on unequal numbers of shortest odd cycles")
            bounds["mc_oddgirth"] = na
            bounds["alpha_oddgirth"] = na
            notes.append(f"odd-girth bounds: {na.reason}")

    if lam_min < -1e-9 and k >= 1:
        bounds["mc_spectral"] = Bound.of(maxcut_spectral_bound(g.e, k, lam_min))
        bounds["alpha_hoffman"] = Bound.of(alpha_hoffman_bound(g.v, k, lam_min))
    else:
        bounds["mc_spectral"] = NotApplicable("no negative eigenvalue")
        bounds["alpha_hoffman"] = NotApplicable("no negative eigenvalue")
    inertia = alpha_inertia_bound(spec)
    bounds["alpha_inertia"] = Bound(float(inertia), inertia)
    bounds = {name: bounds[name] for name in BOUND_ORDER}

    if arr is None:
        ext: int | NotApplicable = NotApplicable("not distance-regular")
    else:
        ext = extendability_lower_bound(arr, girth is BIPARTITE)
        if g.v % 2:
            notes.append("odd order: extendability bound is not meaningful")
    if isinstance(ext, NotApplicable):
        notes.append(f"ext_lower: {ext.reason}")

    return BoundReport(
        graph_id=graph_id,
        v=g.v,
        e=g.e,
        k=k,
        odd_girth=None if girth is BIPARTITE else girth,
        spectrum=spec,
        array=arr,
        bounds=bounds,
        ext_lower=ext,
        notes=notes,
    )


BOUND_ORDER = ("mc_oddgirth", "mc_spectral", "alpha_oddgirth", "alpha_inertia", "alpha_hoffman")
