import itertools
import json
import random
from fractions import Fraction

import pytest

from edgecover import reductions
from edgecover.errors import InputError
from edgecover.fcec import fcec_solver
from edgecover.graph import Graph, gen_gnp, star_graph, touched, weight_of
from edgecover.oracles import brute_mwec
from edgecover.reductions import (GapReport, gap_experiment, mwec_via_fcec, rescale_weights,
                                  subset_sums)

from conftest import corpus


def wide_weights(rnd, n):
    return [int(10 ** rnd.uniform(0, 6)) for _ in range(n)]


def test_uniform_rescale():
    g = gen_gnp(6, Fraction(1, 2), 1, weights=[7] * 6)
    r = rescale_weights(g)
    assert r.kept == tuple(range(6)) and set(r.new_weights) == {36}


def test_light_vertex_dropped():
    g = Graph.from_edges(2, [], [8, 1])  # n = 2: threshold 8 / 4 = 2
    r = rescale_weights(g)
    assert r.kept == (0,) and r.pivot == 0 and r.full_weights == (4, 0)


def test_no_drop_inside_window():
    n = 5
    g = Graph.from_edges(n, [(0, 1)], [10, 250, 30, 100, 17])
    r = rescale_weights(g)
    assert r.kept == tuple(range(n))
    assert min(r.new_weights) == n**2 and max(r.new_weights) <= n**4


def test_rescale_errors():
    with pytest.raises(InputError):
        rescale_weights(Graph.from_edges(3, [], [0, 0, 0]))


def test_rescale_bounds_many():
    rnd = random.Random(51)
    for _ in range(200):
        n = rnd.randint(1, 14)
        g = gen_gnp(n, Fraction(1, 3), rnd.randrange(10**6), weights=wide_weights(rnd, n))
        r = rescale_weights(g)
        assert all(w <= n**4 for w in r.new_weights)
        assert sum(r.new_weights) <= n**5
        assert all(g.weights[v] * n * n >= max(g.weights) for v in r.kept)


def restricted_optimum(g, budget, r):
    opt2 = brute_mwec(g, budget, weights=r.full_weights, allowed=r.kept)
    return weight_of(g, opt2.witness)


def test_rescale_quality_with_budget_filter():
    rnd = random.Random(52)
    checked = 0
    for _ in range(150):
        n = rnd.randint(2, 8)
        g = gen_gnp(n, Fraction(rnd.randint(1, 9), 10), rnd.randrange(10**6),
                    weights=wide_weights(rnd, n))
        budget = rnd.randint(0, g.m)
        opt = brute_mwec(g, budget).optimum_value
        try:
            r = rescale_weights(g, edge_budget=budget)
        except InputError:
            assert opt == 0
            continue
        bound = Fraction(opt) * (1 - Fraction(1, n)) * (1 - Fraction(1, n * n))
        assert restricted_optimum(g, budget, r) >= bound
        checked += 1
    assert checked > 100


def test_unfiltered_rescale_can_lose_everything():
    # heavy centre cannot fit the budget yet sets the threshold; leaves get dropped
    g = star_graph(4, weights=[100, 1, 1, 1, 1])
    budget = 1
    assert brute_mwec(g, budget).optimum_value == 1
    assert restricted_optimum(g, budget, rescale_weights(g)) == 0
    assert restricted_optimum(g, budget, rescale_weights(g, edge_budget=budget)) == 1


def test_subset_sums():
    vals = [3, 5, 5, 9]
    expect = sorted({sum(c) for r in range(1, 5) for c in itertools.combinations(vals, r)})
    assert subset_sums(vals) == expect
    assert subset_sums([0, 0]) == []


def test_thinning_keeps_geometric_grid():
    n = 4
    sums = list(range(1, 5001))
    thin = reductions._thin(sums, n, 100)
    assert len(thin) < 200 and thin[0] == 1
    for s in sums:
        t = max(x for x in thin if x <= s)
        assert s * n * n <= t * (n * n + 1)
    assert reductions._thin([1, 2, 3], n, 100) == [1, 2, 3]


def test_reduction_examples(path3, star4):
    full = mwec_via_fcec(path3, 2, seed=1)
    assert full.solution.members == (0, 1, 2)
    r = mwec_via_fcec(path3, 1, seed=1)
    assert r.solution.touched <= 1 and r.solution.weight >= 1
    r = mwec_via_fcec(star4, 1, seed=1)
    assert r.solution.touched <= 1 and r.solution.weight >= 1


def test_reduction_feasible_and_deterministic():
    for g in corpus(30, 10, seed=53):
        for budget in range(0, g.m + 1, max(1, g.m // 4)):
            a = mwec_via_fcec(g, budget, seed=7)
            assert a.solution.touched <= budget
            assert a == mwec_via_fcec(g, budget, seed=7)


def test_generic_solver_handle():
    g = corpus(1, 9, seed=54, nmin=9)[0]
    a = mwec_via_fcec(g, g.m // 2, fcec=fcec_solver, seed=3)
    b = mwec_via_fcec(g, g.m // 2, seed=3)
    assert a.solution == b.solution


def test_exhausted_flag_with_no_retries():
    g = corpus(1, 9, seed=55, nmin=9)[0]
    r = mwec_via_fcec(g, 3, retries=0, seed=1)
    assert r.guesses > 0 and r.rounds == 0
    assert r.exhausted and r.solution.touched <= 3


def test_reduction_rejects_bad_parameters(k3):
    with pytest.raises(InputError):
        mwec_via_fcec(k3, 1, alpha=Fraction(1, 2))
    with pytest.raises(InputError):
        mwec_via_fcec(k3, 1, tau=0)


def test_gap_small_regression():
    r = gap_experiment(16, 1)
    assert (r.k, r.m, r.integral_value) == (4, 25, 7)
    assert r.lp_value == Fraction(25, 4) and r.ratio == Fraction(28, 25)


def test_gap_256_regression():
    r = gap_experiment(256, 1)
    assert (r.m, r.integral_value) == (2086, 153)
    assert r.ratio == Fraction(1224, 1043) and r.ratio >= 1


def test_gap_rejects_small_n():
    with pytest.raises(InputError):
        gap_experiment(15, 1)


def test_gap_no_edges(monkeypatch):
    monkeypatch.setattr(reductions, "gen_gnp", lambda n, p, seed: Graph.from_edges(n, []))
    r = gap_experiment(16, 1)
    assert r.ratio is None and r.error and r.m == 0


def test_gap_report_serialization():
    r = gap_experiment(16, 2)
    kv = dict(line.split("=", 1) for line in r.to_kv().splitlines())
    assert kv["ratio"] == str(r.ratio) and int(kv["m"]) == r.m
    data = json.loads(r.to_json())
    assert Fraction(data["ratio"]) == r.ratio and Fraction(data["lp_value"]) == r.lp_value
