#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Runs identical workloads on both backends, checks the results agree exactly
(same verdict, same node count, same cut), and prints a timing table.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from rainbowtri import available_backends, build_barrel, build_fixture
from rainbowtri import kernels
from rainbowtri.search import SearchProblem, solve


def time_once(fn):
    t0 = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - t0


def bench_solve(name, lt, palette, forbid, budget_nodes=10**8):
    def make(backend):
        def run():
            problem = SearchProblem(lt, palette, frozenset(forbid),
                                    budget_nodes=budget_nodes)
            return solve(problem, use_precheck=False, backend=backend)
        return run

    rows = {}
    for backend in ("py", "cy"):
        out, elapsed = time_once(make(backend))
        rows[backend] = (f"{out.status} ({out.stats.nodes} nodes)", elapsed)
    assert rows["py"][0] == rows["cy"][0], f"{name}: backends disagree"
    return name, rows


def bench_cut_scan(name, lt):
    adjacency = [sorted(lt.graph.neighbors[v]) for v in range(lt.graph.n)]

    rows = {}
    for backend in ("py", "cy"):
        cut, elapsed = time_once(
            lambda b=backend: kernels.find_smallest_cut(adjacency, 5, backend=b))
        rows[backend] = (f"cut size {len(cut)}", elapsed)
    assert rows["py"][0] == rows["cy"][0], f"{name}: backends disagree"
    return name, rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=1,
                        help="repetitions per workload (best time is kept)")
    args = parser.parse_args()

    if "cy" not in available_backends():
        raise SystemExit("compiled kernel not built; nothing to compare "
                         "(reinstall without RAINBOWTRI_NO_EXT=1)")

    workloads = [
        lambda: bench_solve("icosahedron SAT (palette 7, forbid C4)",
                            build_fixture("icosahedron"), 7, {4}),
        lambda: bench_solve("octahedron UNSAT (palette 12, forbid C4)",
                            build_fixture("octahedron"), 12, {4}),
        lambda: bench_solve("ring tower k=6 node throughput (2M-node cap)",
                            build_barrel(6), 8, {4}, budget_nodes=2_000_000),
        lambda: bench_cut_scan("smallest-cut scan, ring tower k=8 (n=42)",
                               build_barrel(8)),
    ]

    results = []
    for load in workloads:
        best = None
        for _ in range(args.repeat):
            name, rows = load()
            if best is None:
                best = (name, rows)
            else:
                for backend in rows:
                    if rows[backend][1] < best[1][backend][1]:
                        best[1][backend] = rows[backend]
        results.append(best)

    width = max(len(name) for name, _ in results)
    print(f"{'workload':<{width}}  {'pure py':>10}  {'compiled':>10}  "
          f"{'speedup':>8}  result")
    for name, rows in results:
        t_py, t_cy = rows["py"][1], rows["cy"][1]
        print(f"{name:<{width}}  {t_py:>9.3f}s  {t_cy:>9.3f}s  "
              f"{t_py / t_cy:>7.1f}x  {rows['cy'][0]}")


if __name__ == "__main__":
    main()
