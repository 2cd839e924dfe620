import itertools
from fractions import Fraction

import pytest

from edgecover.errors import CapExceededError, InfeasibleError
from edgecover.graph import Graph, complete_graph, deg_sum, gen_gnp, touched, weight_of
from edgecover.oracles import (brute_density_aug, brute_fcec, brute_min_deg_knapsack,
                               brute_mwec, subset_matrix)
from edgecover.density import ratio

from conftest import corpus


def test_examples(star4, k3, path3):
    r = brute_fcec(star4, 2)
    assert r.optimum_value == 2 and r.witness == (1, 2)
    assert brute_fcec(k3, 3).optimum_value == 3
    assert brute_fcec(k3, 0).witness == ()
    assert brute_mwec(path3, 2).optimum_value == 3  # m' = m: the whole path fits
    assert brute_mwec(path3, 1).optimum_value == 1
    assert brute_mwec(k3, 3).optimum_value == 3
    assert brute_mwec(k3, 0).optimum_value == 0
    assert brute_density_aug(k3, [0]).optimum_value == Fraction(3, 4)
    assert brute_density_aug(Graph.from_edges(2, [(0, 1)]), [0]).optimum_value == 1
    assert brute_density_aug(path3, []).optimum_value == Fraction(1, 2)
    assert brute_min_deg_knapsack(star4, 2).optimum_value == 2
    assert brute_min_deg_knapsack(star4, 0).optimum_value == 0
    assert brute_min_deg_knapsack(complete_graph(4), 2).optimum_value == 6


def test_enumeration_order():
    rows = [tuple(i for i in range(3) if r[i]) for r in subset_matrix(3)]
    assert rows == [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]


def test_cap_and_infeasible(k3):
    big = Graph.from_edges(15, [])
    with pytest.raises(CapExceededError):
        brute_fcec(big, 1)
    with pytest.raises(CapExceededError):
        brute_mwec(k3, 1, cap=2)
    with pytest.raises(InfeasibleError):
        brute_fcec(k3, 4)


def test_witnesses_reevaluate():
    for g in corpus(40, 9, seed=41):
        for target in (0, g.total_weight // 2, g.total_weight):
            r = brute_fcec(g, target)
            assert touched(g, r.witness) == r.optimum_value
            assert weight_of(g, r.witness) >= target
            k = brute_min_deg_knapsack(g, target)
            assert deg_sum(g, k.witness) == k.optimum_value
        for budget in (0, g.m // 2, g.m):
            r = brute_mwec(g, budget)
            assert weight_of(g, r.witness) == r.optimum_value
            assert touched(g, r.witness) <= budget
        u = [0] if g.n > 1 else []
        try:
            d = brute_density_aug(g, u)
        except Exception:
            continue
        assert ratio(g, u, d.witness) == d.optimum_value


def test_against_itertools():
    g = gen_gnp(7, Fraction(1, 2), 9, weights=[3, 1, 4, 1, 5, 9, 2])
    subsets = [c for r in range(8) for c in itertools.combinations(range(7), r)]
    for budget in range(g.m + 1):
        expect = max(weight_of(g, s) for s in subsets if touched(g, s) <= budget)
        assert brute_mwec(g, budget).optimum_value == expect
    for target in range(g.total_weight + 1):
        expect = min(touched(g, s) for s in subsets if weight_of(g, s) >= target)
        assert brute_fcec(g, target).optimum_value == expect


def test_allowed_restriction_counts_all_edges(star4):
    r = brute_mwec(star4, 1, allowed=[0])
    assert r.optimum_value == 0 and r.witness == ()
