#!/usr/bin/env python3
"""Compare the compiled search kernel against the pure-Python fallback.

Usage: python benchmarks/kernel_bench.py [--quick]

Runs the same minimum-distance searches through both kernels and reports
wall times and the speedup. The witnesses must agree bit for bit.
"""

import argparse
import time

from bchforge import bch
from bchforge.distance import min_distance

CASES = [
    # (q, m, h, w_max, method), chosen so the fallback stays tolerable
    (3, 2, 3, 1, 6, "mitm-syndrome"),
    (2, 4, 3, 1, 6, "mitm-syndrome"),
    (5, 2, 3, 2, 5, "mitm-syndrome"),
    (2, 4, 3, 1, 5, "support-enum"),
    (3, 2, 3, 1, 5, "support-enum"),
    (2, 4, 3, 1, 0, "message-enum"),
]

HEAVY_CASES = [
    (2, 5, 3, 15, 10, "mitm-syndrome"),
    (8, 2, 3, 31, 5, "mitm-syndrome"),
    (3, 4, 3, 3, 6, "mitm-syndrome"),
]


def run_case(q, m, delta, h, w_max, method, kernel):
    code = bch.build(q, m, delta, h)
    t0 = time.perf_counter()
    report = min_distance(code, max(w_max, delta), method, kernel_name=kernel)
    return report, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="skip the heavy cases")
    args = ap.parse_args()
    cases = CASES if args.quick else CASES + HEAVY_CASES
    print(f"{'code':<22} {'method':<15} {'d':>3} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for q, m, delta, h, w_max, method in cases:
        rep_c, t_c = run_case(q, m, delta, h, w_max, method, "compiled")
        rep_p, t_p = run_case(q, m, delta, h, w_max, method, "python")
        if (rep_p.d, rep_p.exact, rep_p.witness) != (rep_c.d, rep_c.exact, rep_c.witness):
            raise SystemExit(f"kernel disagreement on C({q},{q**m+1},{delta},{h})")
        label = f"C({q},{q**m + 1},{delta},{h})"
        print(
            f"{label:<22} {method:<15} {rep_c.d:>3} {t_p:>9.3f}s {t_c:>9.3f}s "
            f"{t_p / max(t_c, 1e-9):>7.1f}x"
        )


if __name__ == "__main__":
    main()
