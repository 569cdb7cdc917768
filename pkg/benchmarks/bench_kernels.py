"""Compare the compiled and pure-Python enumeration kernels.

Runs the combined height/peak histogram pass over all balanced ballot
paths for a few (k, n) sizes, times both kernels, and checks that they
produce identical histograms.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from sscat import _pypaths, available_backends


def _time(fn, k, n, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(k, n)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernel not installed; only the python kernel is available")
        return 1
    from sscat import _fastpaths

    cases = [(2, 10), (3, 5), (3, 6), (4, 4)]
    print(f"{'case':>10} {'python':>12} {'cython':>12} {'speedup':>9}")
    for k, n in cases:
        t_py, r_py = _time(_pypaths.stat_histograms, k, n, args.repeat)
        t_cy, r_cy = _time(_fastpaths.stat_histograms, k, n, args.repeat)
        assert r_py == r_cy, f"kernels disagree at (k={k}, n={n})"
        print(
            f"  k={k} n={n} {t_py * 1e3:>10.2f}ms {t_cy * 1e3:>10.2f}ms "
            f"{t_py / t_cy:>8.1f}x"
        )
    print("histograms identical across kernels for all cases")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
