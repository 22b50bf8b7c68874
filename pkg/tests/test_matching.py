import networkx as nx
import pytest

from drgkit.budget import BudgetExceeded
from drgkit.catalog import complete, cycle
from drgkit.graph import Graph, bits, members
from drgkit.matching import (
    CounterExample,
    Matching,
    MatchingExtends,
    NoPerfectMatching,
    OddOrder,
    TTooLarge,
    extendability,
    find_barrier,
    gallai_edmonds,
    has_perfect_matching,
    is_t_extendable,
    maximum_matching,
    nott_bipartite_witness,
    odd_component_count,
    t_matchings,
    verify_barrier,
)

from conftest import graph, random_graphs, to_nx
from oracles import all_small_graphs, brute_extendable, brute_nu


def test_blossom_all_graphs_up_to_five_vertices():
    count = 0
    for g in all_small_graphs():
        m = maximum_matching(g)
        assert m.is_valid(g) and len(m) == brute_nu(g)
        count += 1
    assert count == 1 + 2 + 8 + 64 + 1024


def test_blossom_random_graphs():
    for g in random_graphs(500, 12, seed=11):
        m = maximum_matching(g)
        assert m.is_valid(g)
        assert len(m) == brute_nu(g) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


def test_blossom_examples():
    assert len(maximum_matching(cycle(5))) == 2
    assert len(maximum_matching(graph("petersen"))) == 5
    assert len(maximum_matching(graph("coxeter"))) == 14
    assert len(maximum_matching(graph("biggs_smith"))) == 51


def test_petersen_minus_closed_neighborhood():
    g = graph("petersen")
    closed = g.masks[0] | 1
    rest = g.induced(members(g.all_mask & ~closed))
    assert rest.v == 6 and has_perfect_matching(rest)


def test_initial_matching_is_extended():
    g = graph("petersen")
    start = Matching.of([g.edges()[0]])
    m = maximum_matching(g, initial=start)
    assert len(m) == 5 and g.edges()[0] in m.edges


def test_gallai_edmonds_against_definition():
    for g in random_graphs(150, 11, seed=5):
        d, a, c = gallai_edmonds(g)
        nu = brute_nu(g)
        exp_d = bits(u for u in range(g.v) if brute_nu(g, 1 << u) == nu)
        nb = 0
        for u in members(exp_d):
            nb |= g.masks[u]
        exp_a = nb & ~exp_d
        assert (d, a) == (exp_d, exp_a)
        assert c == g.all_mask & ~d & ~a


def test_t_matchings_count_and_order():
    g = graph("petersen")
    ones = list(t_matchings(g, 1))
    assert len(ones) == 15
    twos = list(t_matchings(g, 2))
    # pairs of disjoint edges: C(15,2) minus 10 * C(3,2) pairs sharing a vertex
    assert len(twos) == 105 - 30
    assert twos == sorted(twos)


@pytest.mark.parametrize("seed", range(3))
def test_is_t_extendable_matches_brute_force(seed):
    checked = 0
    for g in random_graphs(120, 10, seed=seed, min_v=4):
        if g.v % 2 or not nx.is_connected(to_nx(g)) or not has_perfect_matching(g):
            continue
        for t in range(1, g.v // 2):
            res = is_t_extendable(g, t)
            assert bool(res) == brute_extendable(g, t)
            if not res:
                assert isinstance(res, CounterExample) and res.matching.is_valid(g)
                assert len(res.matching) == t
        checked += 1
    assert checked >= 15


def test_extendability_examples():
    p = graph("petersen")
    assert is_t_extendable(p, 1) is True
    assert isinstance(is_t_extendable(p, 2), CounterExample)
    assert is_t_extendable(graph("coxeter"), 2) is True
    assert extendability(p).value == 1
    assert extendability(graph("complete_multipartite", 2, 2, 2)).value == 1
    assert extendability(graph("dodecahedron")).value == 2
    assert extendability(complete(6)).value == 2
    assert extendability(graph("hypercube", 3)).value == 2


def test_extendability_result_certificate():
    g = graph("petersen")
    res = extendability(g)
    assert res.proved and len(res.failing_matching) == 2
    b = res.barrier
    assert verify_barrier(g, b.s, 2)
    assert b.odd_components == odd_component_count(g, b.s) >= b.s.bit_count() - 2
    js = res.to_json()
    assert js["value"] == 1 and js["barrier"]["t"] == 2


def test_barrier_examples_on_c6():
    g = cycle(6)
    # removing two opposite-parity vertices leaves two odd paths
    assert verify_barrier(g, bits([0, 1, 3, 4]), 2) is True
    assert verify_barrier(g, bits([0, 1]), 1) is False
    assert odd_component_count(g, bits([0, 3])) == 0
    m = Matching.of([(0, 1), (3, 4)])
    b = find_barrier(g, m)
    assert verify_barrier(g, b.s, 2)


def test_find_barrier_round_trips():
    found = 0
    for g in random_graphs(200, 10, seed=21, min_v=4):
        if g.v % 2 or not nx.is_connected(to_nx(g)) or not has_perfect_matching(g):
            continue
        for t in range(1, g.v // 2):
            res = is_t_extendable(g, t)
            if res:
                continue
            b = find_barrier(g, res.matching)
            assert res.matching.covered & ~b.s == 0
            assert verify_barrier(g, b.s, t)
            found += 1
            break
    assert found >= 10


def test_find_barrier_rejects_extendable_matching():
    g = graph("petersen")
    with pytest.raises(MatchingExtends):
        find_barrier(g, Matching.of([g.edges()[0]]))


def test_nott_bipartite_witness():
    assert nott_bipartite_witness(cycle(6), 2) == (0, 3)
    assert nott_bipartite_witness(cycle(6), 1) is None
    with pytest.raises(Exception):
        nott_bipartite_witness(graph("petersen"), 1)


def test_worker_count_invariance():
    for name, params, t in [("petersen", (), 2), ("coxeter", (), 3), ("dodecahedron", (), 2), ("hypercube", (4,), 3)]:
        g = graph(name, *params)
        assert is_t_extendable(g, t, workers=1) == is_t_extendable(g, t, workers=2)
    g = graph("coxeter")
    for limit in (50, 500, 5000):
        outcomes = []
        for workers in (1, 2):
            try:
                outcomes.append(is_t_extendable(g, 3, node_limit=limit, workers=workers))
            except BudgetExceeded:
                outcomes.append("budget")
        assert outcomes[0] == outcomes[1]


def test_budget_carries_partial_value():
    with pytest.raises(BudgetExceeded) as info:
        extendability(graph("hypercube", 4), node_limit=100)
    assert info.value.best.value == 1 and not info.value.best.proved


def test_preconditions():
    with pytest.raises(OddOrder):
        is_t_extendable(cycle(5), 1)
    with pytest.raises(TTooLarge):
        is_t_extendable(cycle(6), 3)
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(NoPerfectMatching):
        is_t_extendable(star, 1)
    with pytest.raises(ValueError):
        is_t_extendable(cycle(6), 0)
