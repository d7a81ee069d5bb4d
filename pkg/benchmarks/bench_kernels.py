#!/usr/bin/env python3
"""Benchmark the compiled kernel against its pure-Python twin.

Times the coset enumeration and each summation kernel on identical
inputs and reports the speedup plus the worst cross-backend deviation
(expected 0: both twins execute the same float operations in the same
order).

Usage: python benchmarks/bench_kernels.py [--height 3] [--pair-height 30]
"""

import argparse
import time

from eisensym import _kernel_py


def _timeit(fn, *args, repeats=3):
    best, value = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, value


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--height", type=int, default=3,
                    help="degree-2 enumeration height")
    ap.add_argument("--pair-height", type=int, default=30,
                    help="degree-1 pair height for the summation kernels")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    try:
        from eisensym import _kernel as _kernel_c
    except ImportError:
        print("compiled kernel not built; nothing to compare")
        return 1

    from eisensym.analytic import coprime_pairs
    from eisensym.analytic.series import base_solution

    tau, z, tau2, s, k = 1.6j, 0.1 + 0.1j, 1.5j, 0.75 + 0j, 8
    pairs = coprime_pairs(args.pair_height)
    rows = [(c, d, *base_solution(c, d)) for c, d in pairs]
    reps = _kernel_c.sym_pair_cosets(min(args.height, 2))

    jobs = [
        (f"sym_pair_cosets(h={args.height})", "sym_pair_cosets", (args.height,)),
        (f"sum_e1({len(pairs)} pairs)", "sum_e1", (pairs, tau, s, k)),
        (f"sum_e2({len(reps)} reps)", "sum_e2", (reps, tau, z, tau2, s, k)),
        (f"sum_a({len(pairs)}^2 terms)", "sum_a", (pairs, tau, z, tau2, s, k)),
        (f"sum_b({len(rows)} rows, shift 12)", "sum_b",
         (rows, tau, z, tau2, s, k, 12)),
    ]

    print(f"{'kernel':34s} {'compiled':>10s} {'pure':>10s} {'speedup':>8s}  deviation")
    for label, name, fargs in jobs:
        tc, vc = _timeit(getattr(_kernel_c, name), *fargs, repeats=args.repeats)
        tp, vp = _timeit(getattr(_kernel_py, name), *fargs, repeats=args.repeats)
        if name == "sym_pair_cosets":
            dev = "identical" if [tuple(t) for t in vc] == [tuple(t) for t in vp] \
                else "MISMATCH"
        else:
            dev = f"{abs(vc - vp):.2e}"
        print(f"{label:34s} {tc:9.4f}s {tp:9.4f}s {tp / tc:7.1f}x  {dev}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
