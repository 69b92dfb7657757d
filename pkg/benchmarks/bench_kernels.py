"""Time the numba and pure-numpy kernels side by side.

    python3 benchmarks/bench_kernels.py [--sizes 50 150 400] [--repeat 5]

For each grid size the local-cost and DP kernels are run under both
backends; the table lists the best wall time of ``--repeat`` runs and the
largest absolute difference between the two results (expected: 0).
"""
import argparse
import time

import numpy as np

from shapedtw import kernels
from shapedtw._accel import HAVE_NUMBA
from shapedtw.steps import get_step_pattern


def best_time(fn, repeat):
    out, best = None, np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def max_diff(a, b):
    # unreachable DP cells hold inf; they must coincide, then compare the rest
    if not np.array_equal(np.isinf(a), np.isinf(b)):
        return np.inf
    fin = np.isfinite(a)
    return float(np.abs(a[fin] - b[fin]).max()) if fin.any() else 0.0


def run(sizes, dim, pattern, repeat, seed=0):
    rng = np.random.default_rng(seed)
    compiled = get_step_pattern(pattern).compiled
    rows = []
    for n in sizes:
        A = rng.normal(size=(n, dim))
        B = rng.normal(size=(int(1.3 * n), dim))
        res = {}
        for backend in ("numba", "numpy"):
            kernels.USE_NUMBA = backend == "numba"
            t_dist, dist = best_time(lambda: kernels.pairwise_rows(A, B), repeat)
            t_dp, (D, _) = best_time(lambda: kernels.dp_fill(dist, *compiled), repeat)
            res[backend] = (t_dist, t_dp, dist, D)
        diff = max(max_diff(res["numba"][2], res["numpy"][2]), max_diff(res["numba"][3], res["numpy"][3]))
        rows.append((n, B.shape[0], *res["numba"][:2], *res["numpy"][:2], diff))
    kernels.USE_NUMBA = HAVE_NUMBA
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 150, 400])
    ap.add_argument("--dim", type=int, default=30, help="descriptor dimension (1 = plain DTW)")
    ap.add_argument("--pattern", default="symmetric1")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is unavailable or disabled (SHAPEDTW_DISABLE_NUMBA); nothing to compare")

    # first calls compile (or load cached) kernels; keep that out of the table
    kernels.USE_NUMBA = True
    warm = np.zeros((3, args.dim))
    kernels.dp_fill(kernels.pairwise_rows(warm, warm), *get_step_pattern(args.pattern).compiled)

    print(f"pattern={args.pattern} dim={args.dim} repeat={args.repeat} (best of, milliseconds)")
    print(f"{'n x m':>11} {'dist numba':>11} {'dp numba':>9} {'dist numpy':>11} {'dp numpy':>9} "
          f"{'dp speedup':>10} {'max |diff|':>10}")
    for n, m, dn, pn, dx, px, diff in run(args.sizes, args.dim, args.pattern, args.repeat):
        print(f"{n:>5} x {m:<5} {1e3 * dn:>11.3f} {1e3 * pn:>9.3f} {1e3 * dx:>11.3f} {1e3 * px:>9.3f} "
              f"{px / pn:>9.1f}x {diff:>10.1e}")


if __name__ == "__main__":
    main()
