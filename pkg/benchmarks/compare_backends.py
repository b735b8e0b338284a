#!/usr/bin/env python3
"""Benchmark the GF(2) search kernels: numba backend vs numpy fallback.

Workloads:
  * counting the orthogonal group (full column backtracking), and
  * the exhaustive square-root search for the two twist images.

Run:  python benchmarks/compare_backends.py [--max-count-dim 7]
Select a default backend globally with DEHNROOTS_BACKEND=numpy|numba.
"""

import argparse
import time

from dehnroots import _gf2core
from dehnroots.homology import psi_twist_a1, psi_twist_b


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench(backend: str, max_count_dim: int):
    _gf2core.set_backend(backend)
    rows = []
    # warm-up so numba's compile time is not counted as kernel time
    _gf2core.orthogonal_count(3)
    _gf2core.square_root_columns(psi_twist_a1(3).columns())
    for g in range(5, max_count_dim + 1):
        count, dt = timed(_gf2core.orthogonal_count, g)
        rows.append((f"orthogonal_count(g={g})", count, dt))
    for g in (6, 7, 8):
        out, dt = timed(_gf2core.square_root_columns, psi_twist_a1(g).columns())
        rows.append((f"sqrt search psi-a1(g={g})", "none" if out is None else "found", dt))
    for g in (6, 8):
        out, dt = timed(_gf2core.square_root_columns, psi_twist_b(g).columns())
        rows.append((f"sqrt search psi-b(g={g})", "none" if out is None else "found", dt))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-count-dim", type=int, default=7,
                        help="largest dimension for the group-count workload")
    args = parser.parse_args()

    results = {}
    for backend in ("numpy", "numba"):
        try:
            results[backend] = bench(backend, args.max_count_dim)
        except ImportError:
            print(f"backend {backend!r} unavailable, skipping")

    if len(results) == 2:
        print(f"{'workload':34}  {'result':>10}  {'numpy':>10}  {'numba':>10}  {'speedup':>8}")
        for (name, res, t_np), (_, res2, t_nb) in zip(results["numpy"], results["numba"]):
            assert res == res2, f"backend mismatch on {name}: {res} vs {res2}"
            print(f"{name:34}  {str(res):>10}  {t_np:>9.3f}s  {t_nb:>9.3f}s  {t_np / t_nb:>7.1f}x")
    else:
        for backend, rows in results.items():
            print(f"-- {backend}")
            for name, res, dt in rows:
                print(f"{name:34}  {str(res):>10}  {dt:>9.3f}s")


if __name__ == "__main__":
    main()
