import itertools

import pytest

from edgecover.errors import InfeasibleError, InputError
from edgecover.fcec import (FcecInstance, KnapsackFcec, KnapsackTable, fcec_approx,
                            k_lowest_degree, min_degree_knapsack)
from edgecover.graph import Graph, complete_graph, deg_sum, make_solution, touched
from edgecover.oracles import brute_fcec, brute_min_deg_knapsack

from conftest import corpus


def lexmin_optimum(g, target, weights=None):
    """Independent check: smallest deg_sum, then lexicographically smallest list."""
    w = g.weights if weights is None else weights
    best = None
    for r in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), r):
            if sum(w[v] for v in combo) < target:
                continue
            key = (deg_sum(g, combo), list(combo))
            if best is None or key < best:
                best = key
    return best


def test_k_lowest_star(star4):
    sol = k_lowest_degree(star4, 2)
    assert sol.members == (1, 2) and sol.touched == 2
    assert brute_fcec(star4, 2).optimum_value == 2


def test_k_lowest_edge_cases(star4, k3):
    assert k_lowest_degree(star4, 0).members == () and k_lowest_degree(star4, 0).touched == 0
    assert k_lowest_degree(complete_graph(4), 2).touched == 5
    with pytest.raises(InputError):
        k_lowest_degree(star4, 6)
    with pytest.raises(InputError):
        k_lowest_degree(k3.with_weights([1, 2, 1]), 1)


def test_knapsack_examples(star4, k3, two_edges):
    sol = min_degree_knapsack(FcecInstance(star4, 2))
    assert deg_sum(star4, sol.members) == 2 and sol.members == (1, 2)
    assert deg_sum(k3, min_degree_knapsack(FcecInstance(k3, 1)).members) == 2
    empty = min_degree_knapsack(FcecInstance(two_edges, 0))
    assert empty.members == () and empty.weight == 0


def test_fcec_examples(star4, k3, two_edges):
    assert fcec_approx(FcecInstance(star4, 2)).touched == 2
    full = fcec_approx(FcecInstance(k3, 3))
    assert full.members == (0, 1, 2) and full.touched == 3
    sol = fcec_approx(FcecInstance(two_edges, 2))
    opt = brute_fcec(two_edges, 2).optimum_value
    assert opt == 1
    assert deg_sum(two_edges, sol.members) == 2 and sol.touched <= 2 * opt


def test_infeasible_target(k3):
    with pytest.raises(InfeasibleError):
        min_degree_knapsack(FcecInstance(k3, 4))
    with pytest.raises(InputError):
        FcecInstance(k3, -1)


def test_surrogate_exact_and_lexmin():
    for g in corpus(60, 7, seed=11, weights=(0, 6)):
        for target in range(g.total_weight + 1):
            sol = min_degree_knapsack(FcecInstance(g, target))
            d, members = lexmin_optimum(g, target)
            assert deg_sum(g, sol.members) == d
            assert list(sol.members) == members
            assert sol.weight >= target


def test_surrogate_vs_oracle_and_ratio():
    for g in corpus(80, 10, seed=12):
        for target in range(0, g.total_weight + 1, 3):
            sol = fcec_approx(FcecInstance(g, target))
            assert deg_sum(g, sol.members) == brute_min_deg_knapsack(g, target).optimum_value
            assert sol.touched <= 2 * brute_fcec(g, target).optimum_value
            assert sol == make_solution(g, sol.members)


def test_uniform_shortcut_audit():
    for g in corpus(80, 10, seed=13, weights=(1, 1)):
        for k in range(g.n + 1):
            assert k_lowest_degree(g, k).touched <= 2 * brute_fcec(g, k).optimum_value


def test_table_invariants():
    g = corpus(1, 9, seed=5, nmin=9)[0]
    T = KnapsackTable(g).table
    assert (T[0] == 0).all()
    assert ((T[1:] - T[:-1]) >= 0).all() and ((T[:, 1:] - T[:, :-1]) >= 0).all()


def test_cached_solver_matches_direct():
    solver = KnapsackFcec()
    for g in corpus(10, 9, seed=6):
        w = [x * 3 for x in g.weights]
        for target in range(0, sum(w) + 1, 5):
            assert solver(g, w, target) == fcec_approx(FcecInstance(g, target, tuple(w)))


def test_zero_degree_vertices_are_free():
    g = Graph.from_edges(3, [(1, 2)], [5, 1, 1])
    assert min_degree_knapsack(FcecInstance(g, 5)).members == (0,)
    assert touched(g, [0]) == 0
