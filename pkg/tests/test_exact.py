import pytest
from hypothesis import given, settings, strategies as st

from drgkit.budget import BudgetExceeded, SolverBudget
from drgkit.catalog import complete_multipartite
from drgkit.exact import independence_number_exact, max_cut_exact, max_cut_local_search
from drgkit.graph import Graph, blowup_cycle, edge_boundary, is_independent, members

from conftest import graph, random_graphs
from oracles import brute_alpha, brute_max_cut

REGRESSION = random_graphs(220, 18, seed=2024)


def test_regression_set_is_large():
    assert len(REGRESSION) >= 200 and max(g.v for g in REGRESSION) == 18


@pytest.mark.parametrize("chunk", range(4))
def test_max_cut_matches_exhaustive(chunk):
    for g in REGRESSION[chunk::4]:
        cut = max_cut_exact(g)
        assert cut.proved and cut.value == brute_max_cut(g)
        assert cut.value == edge_boundary(g, cut.side) and not cut.side & 1


@pytest.mark.parametrize("chunk", range(4))
def test_alpha_matches_exhaustive(chunk):
    for g in REGRESSION[chunk::4]:
        res = independence_number_exact(g)
        assert res.alpha == brute_alpha(g)
        assert res.witness.bit_count() == res.alpha and is_independent(g, res.witness)


def test_local_search_never_beats_exact():
    for g in REGRESSION[::3]:
        ls = max_cut_local_search(g, SolverBudget(seed=7))
        assert ls.value == edge_boundary(g, ls.side)
        assert ls.value <= max_cut_exact(g).value


def test_max_cut_examples():
    assert max_cut_exact(complete_multipartite(2, 2, 2)).value == 8
    assert max_cut_exact(blowup_cycle(5, 2)).value == 16
    assert max_cut_exact(graph("petersen")).value == 12
    assert max_cut_exact(graph("coxeter")).value == 36


def test_local_search_examples():
    assert max_cut_local_search(graph("petersen"), SolverBudget(seed=0), restarts=32).value == 12
    for name, params in [("hypercube", (4,)), ("cycle", (6,)), ("dodecahedron", ())]:
        g = graph(name, *params)
        cut = max_cut_local_search(g)
        if name != "dodecahedron":
            assert cut.value == g.e
        assert cut.value == edge_boundary(g, cut.side)


def test_local_search_deterministic():
    g = graph("hoffman_singleton")
    a = max_cut_local_search(g, SolverBudget(seed=3))
    b = max_cut_local_search(g, SolverBudget(seed=3))
    assert a == b


def test_alpha_examples():
    assert independence_number_exact(graph("petersen")).alpha == 4
    assert independence_number_exact(graph("hoffman_singleton")).alpha == 15
    assert independence_number_exact(graph("coxeter")).alpha == 12


def test_budget_exceeded_carries_incumbent():
    g = graph("hoffman_singleton")
    with pytest.raises(BudgetExceeded) as info:
        max_cut_exact(g, SolverBudget(node_limit=1000))
    best = info.value.best
    assert best is not None and not best.proved
    assert best.value == edge_boundary(g, best.side) and best.value <= 125
    bs = graph("biggs_smith")
    with pytest.raises(BudgetExceeded) as info:
        independence_number_exact(bs, SolverBudget(node_limit=10))
    best = info.value.best
    assert not best.proved and is_independent(bs, best.witness) and 30 <= best.alpha <= 43


def test_budget_validation():
    with pytest.raises(ValueError):
        SolverBudget(time_limit=0)
    with pytest.raises(ValueError):
        SolverBudget(node_limit=-1)


def test_certificates_reproducible():
    g = graph("dodecahedron")
    assert max_cut_exact(g) == max_cut_exact(g)
    assert independence_number_exact(g) == independence_number_exact(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_property_matches_exhaustive(case):
    n, pairs = case
    g = Graph.from_edges(n, [(a, b) for a, b in pairs if a != b])
    assert max_cut_exact(g).value == brute_max_cut(g)
    assert independence_number_exact(g).alpha == brute_alpha(g)


def test_edgeless_and_single_vertex():
    g = Graph.from_edges(1, [])
    assert max_cut_exact(g).value == 0
    assert independence_number_exact(g).alpha == 1
    e5 = Graph.from_edges(5, [])
    assert independence_number_exact(e5).alpha == 5
    assert members(independence_number_exact(e5).witness) == [0, 1, 2, 3, 4]
