#!/usr/bin/env python3
"""Benchmark the compiled Kleshchev kernel against the pure-Python fallback.

Workloads are bulk verdict computations over full multipartition
enumerations, the operation that dominates parameter sweeps.  Results are
checked for equality between the two kernels before timing is reported.

Usage: python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import time

from akregime._kernel import pykernel

try:
    from akregime._kernel import _ckernel
except ImportError:
    _ckernel = None

from akregime.combinatorics import enumerate_multipartitions

WORKLOADS = [
    # (label, m, n, e, classes, shifts)
    ("m=2 n=6 generic", 2, 6, 0, (0, 1), (0, 0)),
    ("m=2 n=6 witness", 2, 6, 0, (0, 0), (0, 5)),
    ("m=3 n=5 witness", 3, 5, 0, (0, 1, 1), (0, 4, 0)),
    ("m=3 n=5 all-same", 3, 5, 9, (0, 0, 0), (0, 3, 7)),
    ("m=3 n=6 all-same", 3, 6, 11, (0, 0, 0), (0, 5, 2)),
    ("m=3 n=8 witness", 3, 8, 0, (0, 0, 0), (0, 7, 3)),
    ("m=1 n=12 e=12", 1, 12, 12, (0,), (0,)),
    ("m=1 n=20 e=20", 1, 20, 20, (0,), (0,)),
]


def run(kernel, m, n, e, classes, shifts, repeat):
    mps = enumerate_multipartitions(m, n)
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = kernel.kleshchev_verdicts(e, classes, shifts, mps)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _ckernel is None:
        print("compiled kernel not built; run `pip install -e .` with Cython")

    print(f"{'workload':24} {'labels':>7} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for label, m, n, e, classes, shifts in WORKLOADS:
        count = len(enumerate_multipartitions(m, n))
        t_pure, verdicts_pure = run(pykernel, m, n, e, classes, shifts, args.repeat)
        if _ckernel is None:
            print(f"{label:24} {count:7d} {t_pure * 1e3:9.2f}ms {'-':>10} {'-':>8}")
            continue
        t_c, verdicts_c = run(_ckernel, m, n, e, classes, shifts, args.repeat)
        assert verdicts_pure == verdicts_c, f"kernel mismatch on {label}"
        print(
            f"{label:24} {count:7d} {t_pure * 1e3:9.2f}ms {t_c * 1e3:9.2f}ms "
            f"{t_pure / t_c:7.1f}x"
        )


if __name__ == "__main__":
    main()
