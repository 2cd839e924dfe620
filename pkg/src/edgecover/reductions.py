"""Weight rescaling, MWEC solved through an FCEC oracle, and the LP gap experiment."""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import InputError
from .fcec import KnapsackFcec, k_lowest_degree
from .graph import Graph, Solution, gen_gnp, make_solution, touched, vertex_set


@dataclass(frozen=True)
class RescaledInstance:
    """Heavy vertices kept and reweighted into ``[n^2, n^4]``.

    ``graph`` is the subgraph induced on ``kept`` (original ids, ascending),
    relabeled ``0..p-1``; ``new_weights`` and ``original_weights`` follow that
    labeling. ``full_weights`` lays the new weights over all ``n`` original
    vertices with zero for dropped ones.
    """

    graph: Graph
    kept: tuple
    new_weights: tuple
    original_weights: tuple
    pivot: int
    full_weights: tuple


def rescale_weights(g: Graph, weights: Sequence[int] | None = None,
                    edge_budget: int | None = None) -> RescaledInstance:
    """Drop vertices lighter than ``w(v_1) / n^2`` and rescale the rest.

    ``w'(v) = floor(w(v) / w(v_p) * n^2)`` where ``v_p`` is the lightest kept
    vertex. With ``edge_budget`` given, vertices whose degree alone exceeds it
    are dropped first: they belong to no feasible set, and leaving them in lets
    an unusable heavy vertex push the threshold above every feasible one.
    """
    w = g.weights if weights is None else tuple(int(x) for x in weights)
    n = g.n
    eligible = [v for v in range(n) if edge_budget is None or g.degrees[v] <= edge_budget]
    order = sorted(eligible, key=lambda v: (-w[v], v))
    if not order or w[order[0]] == 0:
        raise InputError("rescaling needs at least one (eligible) vertex of positive weight")
    top = w[order[0]]
    kept_order = [v for v in order if w[v] * n * n >= top]
    pivot = kept_order[-1]
    wp = w[pivot]
    kept = tuple(sorted(kept_order))
    new = {v: (w[v] * n * n) // wp for v in kept}
    relabel = {v: i for i, v in enumerate(kept)}
    sub_edges = [(relabel[a], relabel[b]) for a, b in g.edges if a in relabel and b in relabel]
    sub = Graph.from_edges(len(kept), sub_edges, [new[v] for v in kept])
    full = tuple(new.get(v, 0) for v in range(n))
    return RescaledInstance(sub, kept, tuple(new[v] for v in kept),
                            tuple(w[v] for v in kept), pivot, full)


def subset_sums(values: Sequence[int]) -> list:
    """Distinct positive subset sums, ascending (bitset DP)."""
    bits = 1
    for x in values:
        bits |= bits << int(x)
    return [s for s in range(1, bits.bit_length()) if (bits >> s) & 1]


def _thin(sums: list, n: int, limit: int) -> list:
    """Keep a guess grid where every sum s has a kept t <= s with s <= t (1 + 1/n^2)."""
    if len(sums) <= limit:
        return sums
    out = []
    for s in sums:
        if not out or s * n * n > out[-1] * (n * n + 1):
            out.append(s)
    return out


@dataclass(frozen=True)
class ReductionResult:
    solution: Solution
    exhausted: bool  # no guess had a sampling round avoiding both bad events
    guesses: int
    rounds: int


def mwec_via_fcec(g: Graph, edge_budget: int, fcec: Callable | None = None,
                  alpha=2, tau=Fraction(1, 2), retries: int = 20, seed: int = 0,
                  weights: Sequence[int] | None = None,
                  max_guesses: int = 4096) -> ReductionResult:
    """MWEC through an alpha-approximate FCEC solver and random thinning.

    For each guessed optimum weight W (distinct subset sums of the rescaled
    weights, largest first) the FCEC solver returns U with ``w'(U) >= W``;
    each vertex of U is then kept with probability ``1/alpha``. A round is good
    when the kept set B touches at most ``edge_budget`` edges and
    ``w'(B) > W / ((1 + tau) * alpha)``; up to ``retries`` rounds are drawn per
    distinct U, from a stream seeded by ``(seed, guess index)``. U itself is
    also a candidate when it already fits the budget. The heaviest feasible
    set seen, by original weight, is returned; the empty set is the fallback.
    """
    alpha, tau = Fraction(alpha), Fraction(tau)
    if alpha < 1:
        raise InputError(f"alpha must be >= 1, got {alpha}")
    if tau <= 0:
        raise InputError(f"tau must be > 0, got {tau}")
    if edge_budget < 0:
        raise InputError(f"edge budget must be >= 0, got {edge_budget}")
    w = g.weights if weights is None else tuple(int(x) for x in weights)
    fcec = KnapsackFcec() if fcec is None else fcec

    if g.m <= edge_budget:
        return ReductionResult(make_solution(g, range(g.n), w), False, 0, 0)
    try:
        resc = rescale_weights(g, w, edge_budget)
    except InputError:
        return ReductionResult(make_solution(g, (), w), False, 0, 0)
    wfull = resc.full_weights
    guesses = sorted(_thin(subset_sums(wfull), g.n, max_guesses), reverse=True)

    best = make_solution(g, (), w)
    seen = set()
    any_good = False
    rounds = 0

    def offer(members):
        nonlocal best
        sol = make_solution(g, members, w)
        if sol.touched <= edge_budget and sol.weight > best.weight:
            best = sol

    keep_num, keep_den = alpha.denominator, alpha.numerator  # P(keep) = 1/alpha
    for gi, target in enumerate(guesses):
        u = fcec(g, wfull, target)
        members = tuple(u.members)
        if members in seen:
            continue
        seen.add(members)
        if touched(g, members) <= edge_budget:
            offer(members)
        rng = np.random.default_rng([seed, gi])
        threshold = Fraction(target) / ((1 + tau) * alpha)
        arr = np.array(members, dtype=np.int64)
        for _ in range(retries):
            rounds += 1
            b = arr[rng.integers(0, keep_den, size=arr.size) < keep_num].tolist()
            t_b = touched(g, b)
            if t_b > edge_budget:
                continue
            offer(b)
            if sum(wfull[v] for v in b) > threshold:
                any_good = True
                break
    return ReductionResult(best, not any_good, len(guesses), rounds)


@dataclass(frozen=True)
class GapReport:
    """LP-vs-integral comparison on G(n, 1/floor(sqrt n)).

    ``lp_value`` is the cost ``m / k`` of the uniform fractional point
    ``x_v = y_e = 1/k``; ``integral_value`` is touched(Z) for the ``k``
    lowest-degree vertices Z, an upper bound on the integral optimum. So
    ``ratio`` witnesses how large the gap is from above.
    """

    n: int
    k: int
    seed: int
    m: int
    lp_value: Fraction
    integral_value: int
    ratio: Fraction | None
    error: str | None = None

    def fields(self) -> dict:
        d = asdict(self)
        d["lp_value"] = str(self.lp_value)
        d["ratio"] = None if self.ratio is None else str(self.ratio)
        d["ratio_float"] = None if self.ratio is None else round(float(self.ratio), 6)
        return d

    def to_kv(self) -> str:
        return "".join(f"{k}={'' if v is None else v}\n" for k, v in self.fields().items())

    def to_json(self) -> str:
        return json.dumps(self.fields(), sort_keys=True)


def gap_experiment(n: int, seed: int) -> GapReport:
    if n < 16:
        raise InputError(f"gap experiment needs n >= 16, got {n}")
    k = math.isqrt(n)
    g = gen_gnp(n, Fraction(1, k), seed)
    lp = Fraction(g.m, k)
    z = k_lowest_degree(g, k)
    if g.m == 0:
        return GapReport(n, k, seed, 0, lp, z.touched, None, "no edges: ratio 0/0 undefined")
    return GapReport(n, k, seed, g.m, lp, z.touched, Fraction(z.touched) / lp)
