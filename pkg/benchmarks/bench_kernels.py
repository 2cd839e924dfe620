"""Time the compiled kernels against their numpy / pure-Python fallbacks.

    python3 benchmarks/bench_kernels.py [--n 60] [--repeat 5]

Each row checks that both variants agree before reporting the best time of
``--repeat`` runs. The first compiled call is excluded (warm-up).
"""
import argparse
import time
from fractions import Fraction

import numpy as np

from edgecover import kernels
from edgecover._accel import HAS_NUMBA
from edgecover.density import build_network
from edgecover.graph import gen_gnp


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def knapsack_case(g):
    deg = g.degrees.astype(np.int64)
    w = np.asarray(g.weights, dtype=np.int64)
    dmax = int(deg.sum())
    return (lambda: kernels.knapsack_table_numpy(deg, w, dmax),
            lambda: kernels.knapsack_table_jit(deg, w, dmax))


def mwec_case(g):
    h = int(np.argmax(g.degrees))
    nbrs = set(g.adjacency[h])
    pool = [v for v in range(g.n) if v != h]
    deg_h = np.array([v in nbrs for v in pool], dtype=np.int64)
    deg_rest = g.degrees[pool].astype(np.int64) - deg_h
    w = np.asarray([g.weights[v] for v in pool], dtype=np.int64)
    pmax, dmax = int(g.degrees[h]), 2 * g.m
    cap = 2 * (g.m // 2)
    return (lambda: kernels.mwec_table_numpy(deg_h, deg_rest, w, pmax, dmax, cap),
            lambda: kernels.mwec_table_jit(deg_h, deg_rest, w, pmax, dmax, cap))


def flow_case(g):
    net = build_network(g, [0], Fraction(1, 3))
    args = (net.n_nodes, net.tails, net.heads, net.caps, 0, 1)
    return (lambda: kernels.max_flow(*args, use_jit=False)[0],
            lambda: kernels.max_flow(*args, use_jit=True)[0])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=60)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if not HAS_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(args.seed)
    g = gen_gnp(args.n, Fraction(1, 4), args.seed, weights=rng.integers(1, 9, args.n).tolist())
    print(f"G(n={g.n}, p=1/4, seed={args.seed}): m={g.m}")
    print(f"{'kernel':<10}{'fallback s':>12}{'jit s':>12}{'speedup':>10}")
    for name, case in (("knapsack", knapsack_case), ("mwec", mwec_case), ("dinic", flow_case)):
        slow, fast = case(g)
        fast()  # compile
        t_slow, a = best_of(slow, args.repeat)
        t_fast, b = best_of(fast, args.repeat)
        if not np.array_equal(np.asarray(a), np.asarray(b)):
            raise SystemExit(f"{name}: variants disagree")
        print(f"{name:<10}{t_slow:>12.5f}{t_fast:>12.5f}{t_slow / t_fast:>9.1f}x")


if __name__ == "__main__":
    main()
