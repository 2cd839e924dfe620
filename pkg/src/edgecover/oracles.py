"""Exhaustive ground-truth solvers for small graphs.

Subsets are visited by increasing size, then lexicographically by member
list; the first optimum in that order is the witness. Anything above the cap
is refused rather than left to run for hours.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import CapExceededError, InfeasibleError, NoCandidateError
from .graph import Graph, vertex_set

DEFAULT_CAP = 14


@dataclass(frozen=True)
class OracleResult:
    optimum_value: object  # int or Fraction
    witness: tuple
    enumerated: int


@lru_cache(maxsize=32)
def subset_matrix(k: int) -> np.ndarray:
    """All ``2**k`` membership rows over ``k`` items in oracle order."""
    masks = np.arange(2**k, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(k)) & 1).astype(bool)
    keys = sorted(range(2**k), key=lambda m: (int(bits[m].sum()), tuple(np.flatnonzero(bits[m]))))
    out = bits[keys]
    out.setflags(write=False)
    return out


def _check_cap(k: int, cap: int):
    if k > cap:
        raise CapExceededError(f"exhaustive search over {k} vertices exceeds cap {cap}")


def _profiles(g: Graph, weights, items):
    """Per-subset weight, degree sum, touched and internal counts over ``items``."""
    items = list(items)
    S = subset_matrix(len(items))
    if sum(weights) >= 2**62:
        raise OverflowError("total weight does not fit int64")
    w = np.array([weights[v] for v in items], dtype=np.int64)
    deg = g.degrees[items] if items else np.zeros(0, dtype=np.int64)
    full = np.zeros((S.shape[0], g.n), dtype=bool)
    full[:, items] = S
    a, b = full[:, g.tails], full[:, g.heads]
    return S, {
        "weight": S.astype(np.int64) @ w,
        "deg": S.astype(np.int64) @ deg,
        "touched": (a | b).sum(axis=1),
        "internal": (a & b).sum(axis=1),
    }


def _witness(S, items, row) -> tuple:
    return tuple(sorted(items[i] for i in np.flatnonzero(S[row])))


def brute_fcec(g: Graph, target: int, weights=None, cap: int = DEFAULT_CAP) -> OracleResult:
    """Minimum touched(S) over all S with w(S) >= target."""
    w = g.weights if weights is None else tuple(weights)
    _check_cap(g.n, cap)
    if target > sum(w):
        raise InfeasibleError(f"target weight {target} exceeds total weight {sum(w)}")
    items = list(range(g.n))
    S, prof = _profiles(g, w, items)
    ok = np.flatnonzero(prof["weight"] >= target)
    vals = prof["touched"][ok]
    row = ok[int(np.argmin(vals))]
    return OracleResult(int(prof["touched"][row]), _witness(S, items, row), S.shape[0])


def brute_min_deg_knapsack(g: Graph, target: int, weights=None,
                           cap: int = DEFAULT_CAP) -> OracleResult:
    """Minimum deg_sum(S) over all S with w(S) >= target."""
    w = g.weights if weights is None else tuple(weights)
    _check_cap(g.n, cap)
    if target > sum(w):
        raise InfeasibleError(f"target weight {target} exceeds total weight {sum(w)}")
    items = list(range(g.n))
    S, prof = _profiles(g, w, items)
    ok = np.flatnonzero(prof["weight"] >= target)
    row = ok[int(np.argmin(prof["deg"][ok]))]
    return OracleResult(int(prof["deg"][row]), _witness(S, items, row), S.shape[0])


def brute_mwec(g: Graph, edge_budget: int, weights=None, allowed=None,
               cap: int = DEFAULT_CAP) -> OracleResult:
    """Maximum w(U) over all U with touched(U) <= edge_budget.

    ``allowed`` restricts U to a vertex subset; touched is still counted in
    the whole graph.
    """
    w = g.weights if weights is None else tuple(weights)
    items = list(range(g.n)) if allowed is None else list(vertex_set(g, allowed))
    _check_cap(len(items), cap)
    S, prof = _profiles(g, w, items)
    ok = np.flatnonzero(prof["touched"] <= edge_budget)  # row 0 (empty set) always qualifies
    vals = prof["weight"][ok]
    row = ok[int(np.argmax(vals))]
    return OracleResult(int(prof["weight"][row]), _witness(S, items, row), S.shape[0])


def brute_density_aug(g: Graph, u, cap: int = DEFAULT_CAP) -> OracleResult:
    """Exact maximum of ``(e(W) + e(U, W)) / deg(W)`` over nonempty W outside U, deg(W) > 0."""
    members = set(vertex_set(g, u))
    items = [v for v in range(g.n) if v not in members]
    _check_cap(len(items), cap)
    S, prof = _profiles(g, g.weights, items)
    in_u = np.zeros(g.n, dtype=bool)
    in_u[list(members)] = True
    # e(U, W) = edges with one end in U and the other in W
    full = np.zeros((S.shape[0], g.n), dtype=bool)
    full[:, items] = S
    a, b = full[:, g.tails], full[:, g.heads]
    cross = ((a & in_u[g.heads]) | (b & in_u[g.tails])).sum(axis=1)
    num = prof["internal"] + cross
    den = prof["deg"]
    ok = np.flatnonzero(den > 0)
    if ok.size == 0:
        raise NoCandidateError("no subset outside U has positive degree")
    best_row = int(ok[0])
    for row in ok[1:]:
        if num[row] * den[best_row] > num[best_row] * den[row]:
            best_row = int(row)
    value = Fraction(int(num[best_row]), int(den[best_row]))
    return OracleResult(value, _witness(S, items, best_row), S.shape[0])
