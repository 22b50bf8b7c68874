"""Executable checks of the structural lemmas over the catalog.

Each check yields a CheckResult; a suite is a list of them.  Sampling uses
``random.Random(seed)`` per (check, graph) so results do not depend on the
order in which graphs are visited or on the number of workers.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .bounds import extendability_lower_bound
from .budget import BudgetExceeded
from .catalog import build, cycle, list_catalog
from .graph import (
    BIPARTITE,
    Graph,
    bfs_distances,
    bits,
    connectivity,
    count_cycles_through_edge,
    edge_boundary,
    is_connected,
    members,
    neighborhood,
    odd_girth,
    subgraph_at_distance_ge,
    two_coloring,
)
from .matching import (
    CounterExample,
    ExtendabilityResult,
    extendability,
    find_barrier,
    is_t_extendable,
    nott_bipartite_witness,
    verify_barrier,
)
from .params import IntersectionArray, drg_spectrum, is_bipartite_array, is_taylor, recurrence_residuals

EXHAUSTIVE_INDEPENDENT_MAX_V = 16
INDEPENDENT_SAMPLES = 20_000
SMALL_SET_SAMPLES = 100_000
SHADOW_SAMPLES = 2_000
EXTEND_NODE_LIMIT = 300_000
BARRIER_EXHAUSTIVE_MAX_V = 12


@dataclass(frozen=True)
class CheckResult:
    check: str
    graph: str
    passed: bool | None  # None: skipped
    detail: str = ""
    trials: int = 0

    @property
    def status(self) -> str:
        return {True: "pass", False: "FAIL", None: "skip"}[self.passed]

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "graph": self.graph,
            "status": self.status,
            "trials": self.trials,
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed is not False for r in self.results)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "FAIL": 0, "skip": 0}
        for r in self.results:
            out[r.status] += 1
        return out

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "ok": self.ok,
            "counts": self.counts(),
            "results": [r.to_json() for r in self.results],
        }


def _rng(seed: int, *key: str) -> random.Random:
    return random.Random(seed * 1_000_003 + zlib.crc32("/".join(key).encode()))


@lru_cache(maxsize=None)
def _catalog_graphs() -> tuple[tuple[Graph, IntersectionArray | None], ...]:
    out = []
    for ent in list_catalog():
        g, _ = build(ent.name, *ent.params)
        out.append((g, ent.expected_array))
    return tuple(out)


def catalog_drgs() -> list[tuple[Graph, IntersectionArray]]:
    return [(g, arr) for g, arr in _catalog_graphs() if arr is not None]


@lru_cache(maxsize=None)
def cached_extendability(g: Graph, node_limit: int, workers: int = 1) -> ExtendabilityResult:
    """Extendability, or on budget the partial result (proved=False, no certificate)."""
    try:
        return extendability(g, node_limit=node_limit, workers=workers)
    except BudgetExceeded as exc:
        return exc.best if exc.best is not None else ExtendabilityResult(0, None, None, False)


# -- individual lemma checks --------------------------------------------------

def check_edge_cycle_regularity(g: Graph) -> CheckResult:
    girth = odd_girth(g)
    if girth is BIPARTITE:
        return CheckResult("edge_cycle_regularity", g.name, None, "bipartite")
    counts = {count_cycles_through_edge(g, e, girth) for e in g.edges()}
    return CheckResult(
        "edge_cycle_regularity", g.name, len(counts) == 1, f"g={girth}, counts={sorted(counts)}", g.e
    )


def check_connectivity(g: Graph, arr: IntersectionArray) -> CheckResult:
    kappa, lam = connectivity(g)
    return CheckResult(
        "connectivity_k_k", g.name, (kappa, lam) == (arr.k, arr.k), f"(kappa, lambda)=({kappa},{lam}), k={arr.k}"
    )


def check_far_subgraph_connected(g: Graph, arr: IntersectionArray) -> CheckResult:
    if arr.D < 3:
        return CheckResult("far_subgraph_connected", g.name, None, f"D={arr.D} < 3")
    bad = [x for x in range(g.v) if not is_connected(subgraph_at_distance_ge(g, x, 2)[0])]
    return CheckResult("far_subgraph_connected", g.name, not bad, f"disconnected at {bad[:5]}" if bad else "", g.v)


def _independent_sets(g: Graph, seed: int, exhaustive_max_v: int, samples: int):
    """All non-empty independent sets (small v), else seeded random maximal-ish ones."""
    masks = g.masks
    if g.v <= exhaustive_max_v:
        def rec(p: int, cur: int):
            while p:
                low = p & -p
                u = low.bit_length() - 1
                p ^= low
                nxt = cur | low
                yield nxt
                yield from rec(p & ~masks[u], nxt)

        return True, rec(g.all_mask, 0)

    rng = _rng(seed, "independent", g.name)

    def sample():
        for _ in range(samples):
            order = list(range(g.v))
            rng.shuffle(order)
            target = rng.randint(1, g.v)
            cur = 0
            for u in order:
                if cur.bit_count() >= target:
                    break
                if not masks[u] & cur:
                    cur |= 1 << u
            yield cur

    return False, sample()


def check_independent_sets(
    g: Graph, arr: IntersectionArray, seed: int = 0, samples: int = INDEPENDENT_SAMPLES
) -> list[CheckResult]:
    """|N(A)| >= 2|A| when lambda >= 1; |N(A)| >= k + |A| - 1 when also k >= 3 and mu <= k/2."""
    if arr.lam < 1:
        skip = f"lambda={arr.lam}"
        return [CheckResult("independent_set", g.name, None, skip), CheckResult("independent_set2", g.name, None, skip)]
    second = arr.k >= 3 and arr.mu is not None and 2 * arr.mu <= arr.k
    exhaustive, sets = _independent_sets(g, seed, EXHAUSTIVE_INDEPENDENT_MAX_V, samples)
    n = 0
    bad1 = bad2 = None
    for a in sets:
        n += 1
        size = a.bit_count()
        nb = neighborhood(g, a).bit_count()
        if bad1 is None and nb < 2 * size:
            bad1 = a
        if second and bad2 is None and nb < arr.k + size - 1:
            bad2 = a
    mode = "exhaustive" if exhaustive else "sampled"
    out = [
        CheckResult(
            "independent_set", g.name, bad1 is None, mode if bad1 is None else f"{mode}; A={members(bad1)}", n
        )
    ]
    if second:
        out.append(
            CheckResult(
                "independent_set2", g.name, bad2 is None, mode if bad2 is None else f"{mode}; A={members(bad2)}", n
            )
        )
    else:
        out.append(CheckResult("independent_set2", g.name, None, f"needs k>=3 and mu<=k/2 (mu={arr.mu})"))
    return out


def check_small_set_boundary(
    g: Graph, arr: IntersectionArray, seed: int = 0, samples: int = SMALL_SET_SAMPLES
) -> CheckResult:
    """e(A, A^c) >= 3k - 6 for 3 <= |A| <= k - 1; exhaustive up to |A| = 4, sampled beyond.

    Only diameter >= 2: complete graphs violate it (K6 with |A| = 4 has 8 < 9).
    """
    k = arr.k
    name = "small_set_boundary"
    if k < 4:
        return CheckResult(name, g.name, None, f"k={k} < 4")
    if arr.D < 2:
        return CheckResult(name, g.name, None, "complete graph: outside the lemma's scope")
    need = 3 * k - 6
    masks = g.masks
    n = 0
    bad = None
    # e(A, A^c) = k|A| - 2 e(A)
    for size in range(3, min(4, k - 1) + 1):
        for combo in combinations(range(g.v), size):
            n += 1
            mask = bits(combo)
            inner = sum((masks[u] & mask).bit_count() for u in combo) // 2
            if k * size - 2 * inner < need:
                bad = combo
                break
        if bad:
            break
    exhaustive_count = n
    sampled = 0
    if bad is None and k - 1 >= 5:
        rng = _rng(seed, name, g.name)
        for i in range(samples):
            size = rng.randint(5, k - 1)
            if i % 2:
                combo = rng.sample(range(g.v), size)
            else:
                combo = _grow_connected(g, rng, size)
            sampled += 1
            if edge_boundary(g, bits(combo)) < need:
                bad = tuple(sorted(combo))
                break
    detail = f"exhaustive |A|<=4: {exhaustive_count}, sampled: {sampled}"
    if bad:
        detail += f"; A={list(bad)}"
    return CheckResult(name, g.name, bad is None, detail, exhaustive_count + sampled)


def _grow_connected(g: Graph, rng: random.Random, size: int) -> list[int]:
    """Random connected vertex set of the given size (fewer if the graph is smaller)."""
    start = rng.randrange(g.v)
    chosen = [start]
    inside = 1 << start
    frontier = g.masks[start]
    while len(chosen) < size and frontier:
        cand = members(frontier)
        u = cand[rng.randrange(len(cand))]
        chosen.append(u)
        inside |= 1 << u
        frontier = (frontier | g.masks[u]) & ~inside
    return chosen


def check_shadow_bound(
    g: Graph, arr: IntersectionArray, seed: int = 0, samples: int = SHADOW_SAMPLES
) -> CheckResult:
    """Sampled edge cuts T = e(A, A^c) with A connected: both size lower bounds hold for A."""
    name = "shadow_bound"
    if arr.D < 2:
        return CheckResult(name, g.name, None, "diameter 1")
    rng = _rng(seed, name, g.name)
    sizes = arr.sizes
    tails = [sum(sizes[i:]) for i in range(arr.D + 1)]
    masks = g.masks
    deep_cases = 0
    for trial in range(samples):
        size = rng.randint(1, g.v - 1)
        comp = _grow_connected(g, rng, size)
        a_mask = bits(comp)
        root = comp[rng.randrange(len(comp))]
        dist = bfs_distances(g, root)
        t_layers = [0] * (arr.D + 1)
        t_total = 0
        for u in comp:
            for w in members(masks[u] & ~a_mask):
                t_total += 1
                if dist[u] != dist[w]:  # edges inside a layer join no consecutive pair
                    t_layers[max(dist[u], dist[w])] += 1  # type: ignore[call-overload]
        profile = arr.v - sum(
            t_layers[i] / (arr.c_at(i) * sizes[i]) * tails[i] for i in range(1, arr.D + 1)
        )
        if len(comp) < profile - 1e-9:
            return CheckResult(name, g.name, False, f"profile bound {profile:.4f} > |A|={len(comp)}", trial + 1)
        if not masks[root] & ~a_mask:
            deep_cases += 1
            strict = arr.v * (1 - t_total / (arr.mu * sizes[2]))  # type: ignore[operator]
            if not len(comp) > strict - 1e-9:
                return CheckResult(name, g.name, False, f"deep-point bound {strict:.4f} >= |A|={len(comp)}", trial + 1)
    return CheckResult(name, g.name, True, f"deep-point cases: {deep_cases}", samples)


def check_barrier_duality(g: Graph, node_limit: int = EXTEND_NODE_LIMIT, workers: int = 1) -> list[CheckResult]:
    """Not t-extendable iff a barrier exists: round-trip every failure through find_barrier,
    and on small graphs confirm no barrier exists for any t the graph does extend."""
    out = []
    res = cached_extendability(g, node_limit, workers)
    if not res.proved and res.failing_matching is None:
        return [CheckResult("barrier_roundtrip", g.name, None, f"budget: extendable to t>={res.value}")]
    if res.failing_matching is not None:
        t = len(res.failing_matching)
        barrier = find_barrier(g, res.failing_matching)
        ok = verify_barrier(g, barrier.s, t) and barrier.t == t
        out.append(
            CheckResult("barrier_roundtrip", g.name, ok, f"t={t}, |S|={barrier.s.bit_count()}, o={barrier.odd_components}", 1)
        )
    else:
        out.append(CheckResult("barrier_roundtrip", g.name, None, f"no failing matching (value {res.value})"))
    if g.v <= BARRIER_EXHAUSTIVE_MAX_V and res.value >= 1:
        spurious = [
            (s, t) for s in range(1, 1 << g.v) for t in range(1, res.value + 1) if verify_barrier(g, s, t)
        ]
        out.append(
            CheckResult(
                "barrier_absent_when_extendable",
                g.name,
                not spurious,
                f"t<= {res.value}, all {2 ** g.v - 1} sets" + (f"; S={members(spurious[0][0])}" if spurious else ""),
                (2**g.v - 1) * res.value,
            )
        )
    bip = two_coloring(g) is not None
    if bip and res.failing_matching is not None:
        t = len(res.failing_matching)
        wit = nott_bipartite_witness(g, t)
        out.append(
            CheckResult("bipartite_failure_witness", g.name, wit is not None, f"t={t}, I={list(wit) if wit else None}", 1)
        )
    return out


# -- suites ---------------------------------------------------------------------

def lemmas_suite(seed: int = 0, workers: int = 1, graphs=None) -> SuiteReport:
    report = SuiteReport("lemmas", seed)
    pairs = catalog_drgs() if graphs is None else graphs
    for g, arr in pairs:
        report.results.append(check_edge_cycle_regularity(g))
        report.results.append(check_connectivity(g, arr))
        report.results.append(check_far_subgraph_connected(g, arr))
        report.results.extend(check_independent_sets(g, arr, seed))
        report.results.append(check_small_set_boundary(g, arr, seed))
        report.results.append(check_shadow_bound(g, arr, seed))
        if g.v % 2 == 0:
            report.results.extend(check_barrier_duality(g, workers=workers))
    # positive instance of the bipartite witness lemma
    c6 = Graph(6, cycle(6).adjacency, "cycle(6)")
    wit = nott_bipartite_witness(c6, 2)
    report.results.append(
        CheckResult("bipartite_failure_witness", "cycle(6) t=2", wit == (0, 3), f"I={list(wit) if wit else None}", 1)
    )
    return report


def catalog_suite(seed: int = 0) -> SuiteReport:
    report = SuiteReport("catalog", seed)
    for ent in list_catalog():
        try:
            g, _ = build(ent.name, *ent.params)
        except Exception as exc:  # a constructor bug is a failed check, not a crash
            report.results.append(CheckResult("self_validation", ent.label, False, f"{type(exc).__name__}: {exc}"))
            continue
        report.results.append(CheckResult("self_validation", ent.label, True, f"v={g.v}, e={g.e}"))
        arr = ent.expected_array
        if arr is None:
            continue
        report.results.append(
            CheckResult("order_matches_array", ent.label, arr.v == ent.expected_order, f"sum k_i = {arr.v}")
        )
        spec = drg_spectrum(arr)
        traces = (
            spec.v == arr.v and abs(spec.moment(1)) < 1e-6 * arr.v and abs(spec.moment(2) - arr.v * arr.k) < 1e-6 * arr.v * arr.k
        )
        report.results.append(CheckResult("trace_identities", ent.label, traces, _fmt_spectrum(spec)))
        worst = max(max(recurrence_residuals(arr, th)) for th in spec.eigenvalues)
        report.results.append(CheckResult("standard_sequence", ent.label, worst < 1e-9, f"max residual {worst:.2e}"))
        bip = is_bipartite_array(arr)
        report.results.append(
            CheckResult("bipartite_flag", ent.label, bip == ent.bipartite, f"-k in spectrum: {bip}")
        )
        if arr.D >= 3 and not bip and arr.mu is not None and arr.k < 2 * arr.mu:
            report.results.append(CheckResult("taylor_when_k_lt_2mu", ent.label, is_taylor(arr), str(arr)))
    for g_len, m in ((3, 2), (5, 1), (5, 2), (7, 1), (7, 2)):
        g, ent = build("blowup_cycle", g_len, m)
        girth = odd_girth(g)
        counts = {count_cycles_through_edge(g, e, g_len) for e in g.edges()}
        ok = girth == g_len and len(counts) == 1
        report.results.append(CheckResult("blowup_edge_cycle_regular", ent.label, ok, f"g={girth}, counts={sorted(counts)}"))
    return report


def _fmt_spectrum(spec) -> str:
    return " ".join(f"{t:.6g}^{m}" for t, m in spec.pairs)


def extendability_suite(seed: int = 0, workers: int = 1, node_limit: int = EXTEND_NODE_LIMIT) -> SuiteReport:
    """Named ground truths, then extendability >= lower bound on every even-order catalog DRG."""
    report = SuiteReport("extendability", seed)
    expected = [
        ("coxeter", (), 2, True),
        ("dodecahedron", (), 2, True),
        ("biggs_smith", (), 2, True),
        ("petersen", (), 2, False),
        ("complete_multipartite", (2, 2, 2), 2, False),
        ("hypercube", (3,), 2, True),
        ("hypercube", (4,), 2, True),
    ]
    for name, params, t, want in expected:
        g, ent = build(name, *params)
        res = is_t_extendable(g, t, workers=workers)
        got = not isinstance(res, CounterExample)
        detail = f"{t}-extendable: {got}"
        if isinstance(res, CounterExample):
            detail += f"; M={res.matching.to_json()}"
        report.results.append(CheckResult(f"{t}_extendable={want}", ent.label, got == want, detail, 1))
    for g, arr in catalog_drgs():
        if g.v % 2:
            continue
        lower = extendability_lower_bound(arr, is_bipartite_array(arr))
        floor_t = 2 if arr.D >= 3 and arr.k >= 3 else 0
        need = max(floor_t, lower if isinstance(lower, int) else 0)
        lower_txt = lower if isinstance(lower, int) else "n/a"
        res = cached_extendability(g, node_limit, workers)
        value, proved = res.value, res.proved
        if value >= need:
            report.results.append(
                CheckResult("extendability_vs_lower_bound", g.name, True, f"ext{'' if proved else '>='}{value}, lower={lower_txt}")
            )
        elif proved:
            report.results.append(
                CheckResult("extendability_vs_lower_bound", g.name, False, f"ext={value} < lower={need}")
            )
        else:
            # the budget ran out at t = value + 1 <= need
            report.results.append(
                CheckResult("extendability_vs_lower_bound", g.name, None, f"budget: ext>={value}, lower={lower_txt}")
            )
    return report


SUITES = {"lemmas": lemmas_suite, "catalog": catalog_suite, "extendability": extendability_suite}
