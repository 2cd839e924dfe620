"""Hot loops: the two DP table fills and integer max-flow.

Each kernel has a compiled (numba) variant and a fallback. The fallback for
the DP tables is vectorized numpy; the max-flow fallback is the same source
run by the interpreter over Python lists, which also makes it the path for
capacities that do not fit in int64.
"""
import numpy as np

from ._accel import USE_JIT, njit

NEG = -(2**62)  # -infinity sentinel in the MWEC table
INT64_SAFE = 2**62


# -- min-degree knapsack -------------------------------------------------------

def knapsack_table_numpy(deg, w, dmax):
    """``T[i, D]`` = max weight of a subset of the first ``i`` items with degree sum <= D."""
    k = len(deg)
    T = np.zeros((k + 1, dmax + 1), dtype=np.int64)
    for i in range(1, k + 1):
        d, wi = int(deg[i - 1]), int(w[i - 1])
        row = T[i - 1].copy()
        if d <= dmax:
            np.maximum(row[d:], T[i - 1, : dmax + 1 - d] + wi, out=row[d:])
        T[i] = row
    return T


@njit(cache=True, nogil=True)
def knapsack_table_jit(deg, w, dmax):
    k = deg.shape[0]
    T = np.zeros((k + 1, dmax + 1), dtype=np.int64)
    for i in range(1, k + 1):
        d = deg[i - 1]
        wi = w[i - 1]
        for D in range(dmax + 1):
            best = T[i - 1, D]
            if D >= d:
                cand = wi + T[i - 1, D - d]
                if cand > best:
                    best = cand
            T[i, D] = best
    return T


# -- MWEC guess table ------------------------------------------------------------

def mwec_table_numpy(deg_h, deg_rest, w, pmax, dmax, cap):
    """``A[i, P, D]`` for one guessed heaviest vertex H.

    Best weight of Q within the first ``i`` pool vertices with
    ``e(H, Q) >= P`` and ``deg_{V-H}(Q) <= D/2``; ``NEG`` when infeasible.
    Entries with ``D > cap`` are infeasible at every ``i`` (budget left after H).
    P is clamped at zero after subtracting ``deg_H(v_i)``.
    """
    k = len(deg_h)
    A = np.full((k + 1, pmax + 1, dmax + 1), NEG, dtype=np.int64)
    top = min(cap, dmax)
    if top >= 0:
        A[0, 0, : top + 1] = 0
    Ps = np.arange(pmax + 1)
    for i in range(1, k + 1):
        prev = A[i - 1]
        cur = prev.copy()
        dh, dr, wi = int(deg_h[i - 1]), int(deg_rest[i - 1]), int(w[i - 1])
        shift = 2 * dr
        if shift <= dmax:
            src = prev[np.maximum(Ps - dh, 0), : dmax + 1 - shift]
            cand = np.where(src > NEG, src + wi, NEG)
            np.maximum(cur[:, shift:], cand, out=cur[:, shift:])
        if top < dmax:
            cur[:, max(top, -1) + 1:] = NEG
        A[i] = cur
    return A


@njit(cache=True, nogil=True)
def mwec_table_jit(deg_h, deg_rest, w, pmax, dmax, cap):
    k = deg_h.shape[0]
    A = np.full((k + 1, pmax + 1, dmax + 1), NEG, dtype=np.int64)
    top = min(cap, dmax)
    for D in range(top + 1):
        A[0, 0, D] = 0
    for i in range(1, k + 1):
        dh = deg_h[i - 1]
        shift = 2 * deg_rest[i - 1]
        wi = w[i - 1]
        for P in range(pmax + 1):
            Pp = P - dh
            if Pp < 0:
                Pp = 0
            for D in range(top + 1):
                best = A[i - 1, P, D]
                if D >= shift:
                    src = A[i - 1, Pp, D - shift]
                    if src > NEG and src + wi > best:
                        best = src + wi
                A[i, P, D] = best
    return A


# -- max-flow (Dinic) --------------------------------------------------------------

def _dinic(n_nodes, offsets, order, head, cap, s, t):
    """Blocking-flow max-flow; mutates ``cap`` into the residual capacities.

    Arcs come in pairs ``(a, a ^ 1)`` (forward, reverse). ``order`` lists arc
    ids grouped by tail, node ``u`` owning ``order[offsets[u]:offsets[u+1]]``.
    """
    flow = 0
    level = np.empty(n_nodes, dtype=np.int64)
    it = np.empty(n_nodes, dtype=np.int64)
    queue = np.empty(n_nodes, dtype=np.int64)
    stack = np.empty(n_nodes, dtype=np.int64)
    path = np.empty(n_nodes, dtype=np.int64)
    while True:
        for u in range(n_nodes):
            level[u] = -1
        level[s] = 0
        qh = 0
        qt = 1
        queue[0] = s
        while qh < qt:
            u = queue[qh]
            qh += 1
            for j in range(offsets[u], offsets[u + 1]):
                a = order[j]
                v = head[a]
                if cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue[qt] = v
                    qt += 1
        if level[t] < 0:
            return flow
        for u in range(n_nodes):
            it[u] = offsets[u]
        depth = 0
        stack[0] = s
        while True:
            u = stack[depth]
            if u == t:
                b = cap[path[0]]
                for j in range(1, depth):
                    if cap[path[j]] < b:
                        b = cap[path[j]]
                cut_at = -1
                for j in range(depth):
                    a = path[j]
                    cap[a] -= b
                    cap[a ^ 1] += b
                    if cut_at < 0 and cap[a] == 0:
                        cut_at = j
                flow += b
                depth = cut_at
                continue
            advanced = False
            while it[u] < offsets[u + 1]:
                a = order[it[u]]
                v = head[a]
                if cap[a] > 0 and level[v] == level[u] + 1:
                    path[depth] = a
                    depth += 1
                    stack[depth] = v
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                if depth == 0:
                    break
                level[u] = -1
                depth -= 1
                it[stack[depth]] += 1


def _reach_sink(n_nodes, offsets, order, head, cap, t):
    """Nodes that can still reach ``t`` in the residual network."""
    seen = np.zeros(n_nodes, dtype=np.bool_)
    queue = np.empty(n_nodes, dtype=np.int64)
    seen[t] = True
    queue[0] = t
    qh = 0
    qt = 1
    while qh < qt:
        v = queue[qh]
        qh += 1
        for j in range(offsets[v], offsets[v + 1]):
            a = order[j]
            u = head[a]
            if not seen[u] and cap[a ^ 1] > 0:
                seen[u] = True
                queue[qt] = u
                qt += 1
    return seen


dinic_py = _dinic
reach_sink_py = _reach_sink
dinic_jit = njit(cache=True, nogil=True)(_dinic)
reach_sink_jit = njit(cache=True, nogil=True)(_reach_sink)


def max_flow(n_nodes, tails, heads, caps, s, t, use_jit=None):
    """Exact max-flow over arc pairs ``(2k, 2k+1)``.

    Returns ``(value, reaches_sink, residual)``; the compiled path is used only
    when every capacity and the total source supply fit in int64.
    """
    if use_jit is None:
        use_jit = USE_JIT
    tails = np.asarray(tails, dtype=np.int64)
    order = np.argsort(tails, kind="stable").astype(np.int64)
    offsets = np.zeros(n_nodes + 1, dtype=np.int64)
    np.cumsum(np.bincount(tails, minlength=n_nodes), out=offsets[1:])
    head = np.asarray(heads, dtype=np.int64)
    caps = [int(c) for c in caps]
    fits = sum(caps) < INT64_SAFE
    if use_jit and fits:
        residual = np.array(caps, dtype=np.int64)
        value = int(dinic_jit(n_nodes, offsets, order, head, residual, s, t))
        reach = reach_sink_jit(n_nodes, offsets, order, head, residual, t)
        return value, reach, residual.tolist()
    off_l, order_l, head_l = offsets.tolist(), order.tolist(), head.tolist()
    residual = list(caps)
    value = int(dinic_py(n_nodes, off_l, order_l, head_l, residual, s, t))
    reach = reach_sink_py(n_nodes, off_l, order_l, head_l, residual, t)
    return value, np.asarray(reach, dtype=bool), residual


if USE_JIT:
    knapsack_table = knapsack_table_jit
    mwec_table = mwec_table_jit
else:
    knapsack_table = knapsack_table_numpy
    mwec_table = mwec_table_numpy
