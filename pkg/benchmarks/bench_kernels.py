"""Timing comparison of the pure and compiled enumeration kernels.

Run as a script:

    python3 benchmarks/bench_kernels.py [--repeats N]

The three kernels are timed on the workloads the package actually runs:
a pair-scan point count at s=2 scale, the exhaustive field-axiom sweep on
a mid-size table, and the ovoid pencil scan at s=1 and s=2.  Each cell
is the best of --repeats runs.
"""

import argparse
import time

import numpy as np

from curvelab.curves import SuzukiParams, suzuki_curve
from curvelab.fields import build_field
from curvelab.kernels import _ref
from curvelab.ovoid import generate_ovoid

try:
    from curvelab.kernels import _core
except ImportError:
    _core = None


def _count_arrays():
    # the two value arrays whose matches count the s=2 curve's points over
    # its quadratic extension, rebuilt here from the public pieces
    curve = suzuki_curve(2)
    F = curve.extension_field(2)
    exp, _ = F.numpy_tables()
    n = F.order - 1
    logs = np.arange(n, dtype=np.int64)

    def side(exponents):
        by_log = np.zeros(n, dtype=np.int64)
        for e in exponents:
            by_log ^= exp[(logs * e) % n]
        vals = np.zeros(F.order, dtype=np.int64)
        vals[exp[:n]] = by_log
        return vals

    return side(curve.lhs_exponents), side(curve.rhs_exponents)


def _ovoid_rows(s):
    O = generate_ovoid(SuzukiParams.from_s(s))
    rows = np.array(sorted(P.coords for P in O), dtype=np.int64)
    exp, log = O.field.numpy_tables()
    return rows, exp, log, O.field.order


def _time(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    lhs, rhs = _count_arrays()
    F64 = build_field(2, 6)
    exp64, log64 = F64.numpy_tables()
    rows1 = _ovoid_rows(1)
    rows2 = _ovoid_rows(2)

    workloads = [
        ("pair_match_count (2x1024 values)", lambda b: b.pair_match_count(rhs, lhs)),
        ("axiom_violation_count (GF(64))", lambda b: b.axiom_violation_count(exp64, log64, 64)),
        ("secant_excess_count (s=1, 65 pts)", lambda b: b.secant_excess_count(*rows1)),
        ("secant_excess_count (s=2, 1025 pts)", lambda b: b.secant_excess_count(*rows2)),
    ]

    backends = [("pure", _ref)] + ([("compiled", _core)] if _core else [])
    name_w = max(len(n) for n, _ in workloads)

    header = f"{'workload':<{name_w}}  " + "  ".join(f"{n:>10}" for n, _ in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for wname, call in workloads:
        times = []
        values = []
        for _, mod in backends:
            t, v = _time(lambda m=mod: call(m), args.repeats)
            times.append(t)
            values.append(v)
        if len(set(values)) != 1:
            raise SystemExit(f"backend disagreement on {wname}: {values}")
        line = f"{wname:<{name_w}}  " + "  ".join(f"{t * 1e3:>8.1f}ms" for t in times)
        if len(times) == 2:
            line += f"  {times[0] / times[1]:>7.1f}x"
        print(line)
    if _core is None:
        print("\ncompiled extension not importable; only the pure backend was timed")


if __name__ == "__main__":
    main()
