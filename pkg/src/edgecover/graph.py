"""Vertex-weighted undirected simple graphs and the edge counts every solver uses."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import InputError, ParseError

VertexSet = tuple  # sorted, duplicate-free tuple of vertex ids


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph on vertices ``0..n-1`` with integer weights.

    ``edges`` holds ``(u, v)`` pairs with ``u < v`` in lexicographic order.
    """

    n: int
    edges: tuple
    weights: tuple
    adjacency: tuple = field(init=False, repr=False)
    degrees: np.ndarray = field(init=False, repr=False)
    tails: np.ndarray = field(init=False, repr=False)
    heads: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.weights) != self.n:
            raise InputError(f"expected {self.n} weights, got {len(self.weights)}")
        for v, w in enumerate(self.weights):
            if int(w) != w or w < 0:
                raise InputError(f"weight of vertex {v} must be a nonnegative integer, got {w!r}")
        adj = [[] for _ in range(self.n)]
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if u > v:
                raise InputError(f"edge ({u}, {v}) must be stored with u < v")
            if (u, v) in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            adj[u].append(v)
            adj[v].append(u)
        arr = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "degrees", np.array([len(a) for a in adj], dtype=np.int64))
        object.__setattr__(self, "tails", arr[:, 0].copy())
        object.__setattr__(self, "heads", arr[:, 1].copy())
        self.degrees.setflags(write=False)
        self.tails.setflags(write=False)
        self.heads.setflags(write=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], weights=None) -> "Graph":
        """Build a graph from unordered pairs; pairs are normalized and sorted."""
        norm = sorted((min(int(a), int(b)), max(int(a), int(b))) for a, b in edges)
        if weights is None:
            weights = (1,) * n
        return cls(n, tuple(norm), tuple(weights))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def with_weights(self, weights: Sequence[int]) -> "Graph":
        return Graph(self.n, self.edges, tuple(weights))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.weights) == (other.n, other.edges, other.weights)

    def __hash__(self):
        return hash((self.n, self.edges, self.weights))

    def is_uniform(self) -> bool:
        return len(set(self.weights)) <= 1


def vertex_set(g: Graph, ids: Iterable[int]) -> VertexSet:
    """Validate ``ids`` against ``g`` and return them as a sorted tuple."""
    members = sorted(set(int(v) for v in ids))
    if members and (members[0] < 0 or members[-1] >= g.n):
        bad = members[0] if members[0] < 0 else members[-1]
        raise InputError(f"vertex id {bad} outside [0, {g.n})")
    return tuple(members)


def _mask(g: Graph, u: Iterable[int]) -> np.ndarray:
    mask = np.zeros(g.n, dtype=bool)
    members = vertex_set(g, u)
    if members:
        mask[list(members)] = True
    return mask


def deg_sum(g: Graph, u: Iterable[int]) -> int:
    return int(g.degrees[_mask(g, u)].sum())


def internal_edges(g: Graph, u: Iterable[int]) -> int:
    mask = _mask(g, u)
    return int(np.count_nonzero(mask[g.tails] & mask[g.heads]))


def cross_edges(g: Graph, x: Iterable[int], y: Iterable[int]) -> int:
    """Number of edges with one endpoint in ``x`` and the other in ``y`` (disjoint)."""
    mx, my = _mask(g, x), _mask(g, y)
    if np.any(mx & my):
        raise InputError("cross_edges needs disjoint vertex sets")
    a, b = g.tails, g.heads
    return int(np.count_nonzero((mx[a] & my[b]) | (my[a] & mx[b])))


def touched(g: Graph, u: Iterable[int]) -> int:
    """Edges with at least one endpoint in ``u`` (direct scan, not via degrees)."""
    mask = _mask(g, u)
    return int(np.count_nonzero(mask[g.tails] | mask[g.heads]))


def weight_of(g: Graph, u: Iterable[int], weights: Sequence[int] | None = None) -> int:
    w = g.weights if weights is None else weights
    return sum(int(w[v]) for v in vertex_set(g, u))


@dataclass(frozen=True)
class Solution:
    members: VertexSet
    weight: int
    touched: int

    def __len__(self):
        return len(self.members)


def make_solution(g: Graph, members: Iterable[int], weights=None) -> Solution:
    """Wrap ``members`` with their recomputed weight and touched-edge count."""
    vs = vertex_set(g, members)
    return Solution(vs, weight_of(g, vs, weights), touched(g, vs))


# -- generators ---------------------------------------------------------------

def gen_gnp(n: int, p, seed: int, weights=None) -> Graph:
    """Erdos-Renyi G(n, p) with an exact rational edge probability.

    Pair ``(i, j)``, ``i < j``, is drawn in lexicographic order as a uniform
    integer in ``[0, p.denominator)`` and kept when below ``p.numerator``.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise InputError(f"edge probability must lie in [0, 1], got {p}")
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    num, den = p.numerator, p.denominator
    if den >= 2**62:
        raise InputError("edge probability denominator too large")
    rng = np.random.default_rng(seed)
    tails, heads = [], []
    for i in range(n - 1):
        draws = rng.integers(0, den, size=n - 1 - i)
        js = np.flatnonzero(draws < num) + i + 1
        tails.append(np.full(js.size, i, dtype=np.int64))
        heads.append(js)
    if tails:
        edges = zip(np.concatenate(tails).tolist(), np.concatenate(heads).tolist())
    else:
        edges = ()
    return Graph(n, tuple(edges), tuple(weights) if weights is not None else (1,) * n)


def path_graph(n: int, weights=None) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], weights)


def star_graph(leaves: int, weights=None) -> Graph:
    """Center 0 joined to leaves ``1..leaves``."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], weights)


def complete_graph(n: int, weights=None) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], weights)


# -- instance files ------------------------------------------------------------
#
# line 1 "n m", line 2 the n weights, then m lines "u v" with u < v.
# Lines starting with '#' are comments; "#! key=value" comments carry problem
# parameters (W, budget, U, ...) and are preserved by save/load.

def _param_value(raw: str):
    raw = raw.strip()
    try:
        return int(raw)
    except ValueError:
        pass
    if "," in raw or raw == "":
        try:
            return tuple(int(x) for x in raw.split(",") if x.strip())
        except ValueError:
            pass
    return raw


def load_instance(text: str) -> tuple[Graph, dict]:
    params: dict = {}
    rows = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        stripped = line.strip()
        if stripped.startswith("#!"):
            key, sep, value = stripped[2:].partition("=")
            if not sep or not key.strip():
                raise ParseError(f"malformed parameter line {stripped!r}", lineno)
            params[key.strip()] = _param_value(value)
            continue
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    if not rows:
        raise ParseError("empty instance: missing 'n m' header", 1)

    def ints(lineno, tokens, what):
        try:
            return [int(t) for t in tokens]
        except ValueError:
            raise ParseError(f"non-integer token in {what}", lineno) from None

    lineno, header = rows[0]
    if len(header) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = ints(lineno, header, "header")
    if n < 1 or m < 0:
        raise ParseError(f"bad header n={n} m={m}", lineno)
    if len(rows) < 2:
        raise ParseError("missing weights line", lineno + 1)
    lineno, wtoks = rows[1]
    weights = ints(lineno, wtoks, "weights")
    if len(weights) != n:
        raise ParseError(f"expected {n} weights, got {len(weights)}", lineno)
    if any(w < 0 for w in weights):
        raise ParseError("weights must be nonnegative", lineno)
    body = rows[2:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"expected {m} edge lines, got {len(body)}", where)
    edges = []
    seen = set()
    for lineno, toks in body:
        if len(toks) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        u, v = ints(lineno, toks, "edge")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range [0, {n})", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if u > v:
            raise ParseError("edge must be written with u < v", lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, tuple(sorted(edges)), tuple(weights)), params


def _format_param(value) -> str:
    if isinstance(value, (tuple, list)):
        return ",".join(str(int(x)) for x in value)
    return str(value)


def save_instance(g: Graph, params: Mapping | None = None) -> str:
    lines = []
    for key in sorted(params or {}):
        lines.append(f"#! {key}={_format_param(params[key])}")
    lines.append(f"{g.n} {g.m}")
    lines.append(" ".join(str(w) for w in g.weights))
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
