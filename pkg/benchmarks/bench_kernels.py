"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import random
import time

from srdom import kernels
from srdom.graphs import Graph, family
from srdom.ladder_dp import solve_circular_ladder_dp, solve_ladder_dp
from srdom.solver import solve_branch_bound, solve_exhaustive


def _random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p or v == u + 1]
    return Graph.from_edges(n, edges)


CASES = [
    ("exhaustive ladder 6 (12 v)", lambda impl: solve_exhaustive(family("ladder", 6), impl=impl)),
    ("exhaustive random 13 v", lambda impl: solve_exhaustive(_random_graph(13, 0.3, 1), impl=impl)),
    ("branch-bound circ-ladder-compl 7", lambda impl: solve_branch_bound(
        family("circular-ladder-complement", 7), impl=impl)),
    ("branch-bound ladder 9 (18 v)", lambda impl: solve_branch_bound(family("ladder", 9), impl=impl)),
    ("ladder dp n=1e5", lambda impl: solve_ladder_dp(100_000, impl=impl)),
    ("circular dp n=1e5", lambda impl: solve_circular_ladder_dp(100_000, impl=impl)),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"{'case':36s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, run in CASES:
        best = {}
        for b in backends:
            samples = []
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                cert = run(b)
                samples.append(time.perf_counter() - t0)
            best[b] = min(samples)
            weight = cert.weight
        row = f"{name:36s}" + "".join(f"{best[b]:11.3f}s" for b in backends)
        if len(backends) > 1:
            row += f"{best['pure'] / best['compiled']:11.1f}x"
        print(row + f"   weight {weight}")
    print(f"active backend: {kernels.BACKEND}")


if __name__ == "__main__":
    main()
