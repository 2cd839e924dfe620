"""Fixed Cost Minimum Edge Cover: pick weight >= W while touching few edges."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .errors import InfeasibleError, InputError
from .graph import Graph, Solution, make_solution


@dataclass(frozen=True)
class FcecInstance:
    graph: Graph
    target_weight: int
    weights: tuple | None = None  # overrides graph.weights when set

    def __post_init__(self):
        if self.target_weight < 0:
            raise InputError(f"target weight must be >= 0, got {self.target_weight}")
        if self.weights is not None and len(self.weights) != self.graph.n:
            raise InputError("weights length does not match the graph")

    @property
    def vertex_weights(self) -> tuple:
        return self.graph.weights if self.weights is None else tuple(self.weights)


def k_lowest_degree(g: Graph, k: int) -> Solution:
    """The ``k`` smallest-degree vertices (ties by id); 2-approximate for uniform weights."""
    if not g.is_uniform():
        raise InputError("k_lowest_degree needs uniform vertex weights")
    if not 0 <= k <= g.n:
        raise InputError(f"k must lie in [0, {g.n}], got {k}")
    order = np.lexsort((np.arange(g.n), g.degrees))
    return make_solution(g, order[:k].tolist())


class KnapsackTable:
    """Min-degree knapsack table over one (graph, weights) pair.

    Rows are built over vertices in *descending* id order, so row ``i`` covers
    the ``i`` highest ids. That makes the forward walk in :meth:`select` a
    re-trace that yields the lexicographically smallest optimal member list.
    Memory is ``(n + 1) * (2m + 1)`` int64 entries.
    """

    def __init__(self, g: Graph, weights: Sequence[int] | None = None):
        w = g.weights if weights is None else tuple(int(x) for x in weights)
        if len(w) != g.n:
            raise InputError("weights length does not match the graph")
        if sum(w) >= kernels.INT64_SAFE:
            raise OverflowError("total weight does not fit the int64 knapsack table")
        self.graph = g
        self.weights = w
        self.dmax = 2 * g.m
        rev = np.arange(g.n - 1, -1, -1)
        self._deg = np.ascontiguousarray(g.degrees[rev])
        self._w = np.array([w[v] for v in rev], dtype=np.int64)
        self.table = kernels.knapsack_table(self._deg, self._w, self.dmax)

    def best_weight(self, budget: int) -> int:
        """Max weight of any vertex set with degree sum <= ``budget``."""
        return int(self.table[self.graph.n, min(budget, self.dmax)])

    def min_budget(self, target: int) -> int:
        """Smallest degree sum D with some set of weight >= ``target`` inside it."""
        last = self.table[self.graph.n]
        if target > last[-1]:
            raise InfeasibleError(f"target weight {target} exceeds total weight {int(last[-1])}")
        return int(np.searchsorted(last, target, side="left"))

    def select(self, target: int) -> tuple:
        budget = self.min_budget(target)
        n, T = self.graph.n, self.table
        need, left, chosen = target, budget, []
        for v in range(n):
            if need <= 0:
                break
            d, wv = int(self.graph.degrees[v]), self.weights[v]
            rest = n - v - 1  # rows covering ids v+1..n-1
            if d <= left and wv + T[rest, left - d] >= need:
                chosen.append(v)
                need -= wv
                left -= d
        return tuple(chosen)


def min_degree_knapsack(inst: FcecInstance) -> Solution:
    """Exact minimum of ``deg_sum(S)`` subject to ``w(S) >= W``.

    Ties between sets with the same degree sum go to the lexicographically
    smallest member list.
    """
    table = KnapsackTable(inst.graph, inst.vertex_weights)
    return make_solution(inst.graph, table.select(inst.target_weight), inst.vertex_weights)


def fcec_approx(inst: FcecInstance) -> Solution:
    """2-approximation: touched(S) <= deg_sum(S) <= deg_sum(OPT) <= 2 * touched(OPT)."""
    return min_degree_knapsack(inst)


class KnapsackFcec:
    """FCEC solver handle that reuses one knapsack table across targets.

    Calling it as ``solver(graph, weights, target)`` gives the same answer as
    :func:`fcec_approx`; the table is rebuilt only when the graph or weights
    change. Used by the MWEC-via-FCEC reduction, which queries many targets.
    """

    def __init__(self):
        self._key = None
        self._table = None

    def __call__(self, g: Graph, weights: Sequence[int], target: int) -> Solution:
        key = (g, tuple(weights))
        if key != self._key:
            self._table = KnapsackTable(g, weights)
            self._key = key
        return make_solution(g, self._table.select(target), weights)


def fcec_solver(g: Graph, weights: Sequence[int], target: int) -> Solution:
    return fcec_approx(FcecInstance(g, target, tuple(weights)))
