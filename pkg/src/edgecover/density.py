"""Degrees Density Augmentation by parametric minimum s-t cut.

Given U, find nonempty W outside U maximizing ``(e(W) + e(U, W)) / deg(W)``.
For a fixed ratio rho the network below has min-cut capacity
``|V_E'| + deg_U(V-U) - max_W (e(W) + e(U, W) - rho * deg(W))``, so a cut
whose source side contains a nonempty W certifies ``rho <= rho*``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import InputError, NoCandidateError
from .graph import Graph, cross_edges, deg_sum, internal_edges, vertex_set

Rational = Fraction

SOURCE, SINK = 0, 1


@dataclass(frozen=True)
class FlowNetwork:
    """Integer-capacity network; every capacity is pre-multiplied by ``scale``.

    Node 0 is the source, node 1 the sink, then one node per edge with both
    endpoints outside U (``edge_nodes``), then one node per vertex outside U
    (``vertex_nodes``). Arc ``2k`` is a real arc and ``2k + 1`` its reverse.
    """

    n_nodes: int
    edge_nodes: tuple
    vertex_nodes: tuple
    tails: tuple
    heads: tuple
    caps: tuple
    rho: Fraction
    scale: int
    big: int

    def edge_node(self, i: int) -> int:
        return 2 + i

    def vertex_node(self, i: int) -> int:
        return 2 + len(self.edge_nodes) + i

    def arcs(self):
        """Real arcs as ``(tail, head, capacity)``."""
        return [(self.tails[a], self.heads[a], self.caps[a]) for a in range(0, len(self.tails), 2)]


@dataclass(frozen=True)
class Cut:
    value: int  # scaled by network.scale
    source_side: frozenset
    network: FlowNetwork

    @property
    def unscaled_value(self) -> Fraction:
        return Fraction(self.value, self.network.scale)

    @property
    def source_vertices(self) -> tuple:
        """Graph vertices (outside U) on the source side, i.e. W_s."""
        net = self.network
        return tuple(v for i, v in enumerate(net.vertex_nodes)
                     if net.vertex_node(i) in self.source_side)

    @property
    def source_edge_nodes(self) -> int:
        """|V_E'^s|: edge nodes on the source side."""
        net = self.network
        return sum(1 for i in range(len(net.edge_nodes)) if net.edge_node(i) in self.source_side)


def build_network(g: Graph, u, rho) -> FlowNetwork:
    rho = Fraction(rho)
    if rho < 0:
        raise InputError(f"rho must be >= 0, got {rho}")
    members = vertex_set(g, u)
    in_u = np.zeros(g.n, dtype=bool)
    in_u[list(members)] = True
    outside = tuple(int(v) for v in np.flatnonzero(~in_u))
    if not outside:
        raise InputError("U covers every vertex; nothing left to augment with")
    scale = rho.denominator
    big = g.n ** 5 * scale
    enodes = tuple(e for e in g.edges if not in_u[e[0]] and not in_u[e[1]])
    base = 2 + len(enodes)
    node_of = {v: base + i for i, v in enumerate(outside)}
    tails, heads, caps = [], [], []

    def arc(a, b, c):
        tails.extend((a, b))
        heads.extend((b, a))
        caps.extend((int(c), 0))

    for i in range(len(enodes)):
        arc(SOURCE, 2 + i, scale)
    for v in outside:
        deg_u = sum(1 for x in g.adjacency[v] if in_u[x])
        arc(SOURCE, node_of[v], deg_u * scale)
    for i, (p, q) in enumerate(enodes):
        arc(2 + i, node_of[p], big)
        arc(2 + i, node_of[q], big)
    for v in outside:
        arc(node_of[v], SINK, rho.numerator * int(g.degrees[v]))
    return FlowNetwork(base + len(outside), enodes, outside, tuple(tails), tuple(heads),
                       tuple(caps), rho, scale, big)


def min_cut(net: FlowNetwork, use_jit=None) -> Cut:
    """Minimum s-t cut with the *maximal* source side.

    The source side is every node that cannot reach the sink in the residual
    network, which is the largest minimum cut's source side.
    """
    value, reaches, _ = kernels.max_flow(net.n_nodes, net.tails, net.heads, net.caps,
                                         SOURCE, SINK, use_jit=use_jit)
    side = frozenset(int(x) for x in np.flatnonzero(~np.asarray(reaches)))
    return Cut(value, side, net)


def ratio(g: Graph, u, w) -> Fraction:
    """``(e(W) + e(U, W)) / deg(W)`` for ``W`` disjoint from ``U``."""
    den = deg_sum(g, w)
    if den == 0:
        raise InputError("ratio undefined for a set of total degree 0")
    return Fraction(internal_edges(g, w) + cross_edges(g, u, w), den)


def candidates(g: Graph, u) -> tuple:
    members = set(vertex_set(g, u))
    return tuple(v for v in range(g.n) if v not in members and g.degrees[v] > 0)


def simplest_in(lo, hi) -> Fraction:
    """Fraction with the smallest denominator in ``[lo, hi)``, ``0 <= lo < hi``.

    Stern-Brocot descent, taking whole runs of same-direction steps at once.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not 0 <= lo < hi:
        raise InputError(f"need 0 <= lo < hi, got [{lo}, {hi})")
    c = math.ceil(lo)
    if c < hi:
        return Fraction(c)
    ln, ld, rn, rd = 0, 1, 1, 0
    while True:
        mn, md = ln + rn, ld + rd
        if mn < lo * md:
            k = math.ceil((lo * ld - ln) / (rn - lo * rd)) - 1
            ln, ld = ln + k * rn, ld + k * rd
        elif mn >= hi * md:
            k = math.floor((rn - hi * rd) / (hi * ld - ln))
            rn, rd = rn + k * ln, rd + k * ld
        else:
            return Fraction(mn, md)


def _surviving(g: Graph, u, rho, use_jit=None):
    cut = min_cut(build_network(g, u, rho), use_jit=use_jit)
    keep = [v for v in cut.source_vertices if g.degrees[v] > 0]
    return keep, cut


def find_rho_star(g: Graph, u, use_jit=None) -> Fraction:
    """Exact optimum ratio by bisection on rho plus rational snapping.

    The optimum has denominator at most ``deg(C)`` for C the positive-degree
    vertices outside U (and always ``<= n^2``), so distinct candidate values
    are more than ``1 / deg(C)^2`` apart; once the bracket is narrower, the
    simplest fraction inside it is the optimum. The optimum never exceeds 1.
    """
    cands = candidates(g, u)
    if not cands:
        raise NoCandidateError("no vertex outside U has positive degree")
    bound = min(deg_sum(g, cands), g.n * g.n)
    if _surviving(g, u, 1, use_jit)[0]:
        return Fraction(1)
    lo, hi = Fraction(0), Fraction(1)
    gap = Fraction(1, bound * bound)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        if _surviving(g, u, mid, use_jit)[0]:
            lo = mid
        else:
            hi = mid
    return simplest_in(lo, hi)


def augmentation_cut(g: Graph, u, rho, use_jit=None) -> tuple:
    """``(W, cut)`` at ``rho``: positive-degree source-side vertices and the cut."""
    return _surviving(g, u, rho, use_jit)


def density_aug(g: Graph, u, use_jit=None) -> tuple:
    """Return ``(W, rho*)`` with W nonempty, outside U, of maximum ratio.

    W is the largest maximizer (maximal source side at ``rho*``).
    """
    rho = find_rho_star(g, u, use_jit)
    w, _ = _surviving(g, u, rho, use_jit)
    if not w:
        raise AssertionError(f"empty augmenting set at rho*={rho}")
    got = ratio(g, u, w)
    if got != rho:
        raise AssertionError(f"augmenting set has ratio {got}, expected {rho}")
    return tuple(w), rho
