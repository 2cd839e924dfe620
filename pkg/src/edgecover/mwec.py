"""Maximum Weight m'-Edge Cover: heaviest vertex set touching at most m' edges.

For every guess H = {h} of the heaviest member of an optimum, a DP over the
remaining candidates picks Q with ``deg_{V-H}(Q) <= D/2`` where D is bounded
by twice the budget left after H. The halved degree bound keeps every output
feasible; splitting an optimum's Q* at the point where its degree sum crosses
half shows one of the two halves is still a candidate, hence the factor 2.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InputError
from .graph import Graph, Solution, make_solution, touched


@dataclass(frozen=True)
class MwecInstance:
    graph: Graph
    edge_budget: int

    def __post_init__(self):
        if self.edge_budget < 0:
            raise InputError(f"edge budget must be >= 0, got {self.edge_budget}")


@dataclass
class GuessResult:
    heaviest: int
    members: tuple
    weight: int
    table: np.ndarray | None = None


def candidate_pool(g: Graph, h: int) -> list:
    """Vertices allowed next to ``h`` when ``h`` is the heaviest member.

    Equal weights are broken by id: a tied vertex may join only if its id is
    smaller, so every set has exactly one designated heaviest vertex.
    """
    wh = g.weights[h]
    return [v for v in range(g.n)
            if v != h and (g.weights[v] < wh or (g.weights[v] == wh and v < h))]


def solve_guess(g: Graph, budget: int, h: int, keep_table: bool = False) -> GuessResult | None:
    """Best H ∪ Q for the guess H = {h}; ``None`` if {h} alone breaks the budget."""
    deg_h_total = int(g.degrees[h])
    if deg_h_total > budget:
        return None
    pool = candidate_pool(g, h)
    nbrs = set(g.adjacency[h])
    deg_h = np.array([1 if v in nbrs else 0 for v in pool], dtype=np.int64)
    deg_rest = np.array([int(g.degrees[v]) for v in pool], dtype=np.int64) - deg_h
    w = np.array([g.weights[v] for v in pool], dtype=np.int64)
    pmax = deg_h_total
    dmax = 2 * g.m
    cap = 2 * (budget - deg_h_total)  # D/2 <= m' - e(H, V-H)
    A = kernels.mwec_table(deg_h, deg_rest, w, pmax, dmax, cap)
    last = A[len(pool)]
    best = int(last.max())
    if best <= kernels.NEG:  # cannot happen: P = 0, D = 0 is always feasible here
        return None
    P, D = (int(x) for x in np.unravel_index(int(np.argmax(last)), last.shape))
    chosen = []
    for i in range(len(pool), 0, -1):
        if A[i, P, D] == A[i - 1, P, D]:
            continue
        chosen.append(pool[i - 1])
        P = max(0, P - int(deg_h[i - 1]))
        D -= 2 * int(deg_rest[i - 1])
    members = tuple(sorted(chosen + [h]))
    return GuessResult(h, members, g.weights[h] + best, A if keep_table else None)


def mwec_dp(inst: MwecInstance, threads: int = 1) -> Solution:
    """2-approximate MWEC; the empty set is always a candidate.

    When every edge fits the budget the whole vertex set is returned: the
    halved degree bound would otherwise leave part of it behind.
    """
    g, budget = inst.graph, inst.edge_budget
    if g.m <= budget:
        return make_solution(g, range(g.n))
    heads = range(g.n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda h: solve_guess(g, budget, h), heads))
    else:
        results = [solve_guess(g, budget, h) for h in heads]
    best_members, best_weight = (), 0
    for res in results:  # id order; strict improvement keeps the first maximum
        if res is not None and res.weight > best_weight:
            best_members, best_weight = res.members, res.weight
    sol = make_solution(g, best_members)
    if sol.touched > budget:
        raise AssertionError(f"MWEC DP produced an infeasible set touching {sol.touched} > {budget}")
    return sol


def mwec_feasibility_audit(g: Graph, u, edge_budget: int) -> bool:
    return touched(g, u) <= edge_budget
