"""Benchmark the Clifford contraction: compiled extension vs numpy fallback.

Run with: python3 benchmarks/bench_clifford.py [--extents N] [--repeats R]
"""

import argparse
import time

import numpy as np

from ddirac import backend
from ddirac.clifford import build_table
from ddirac.lattice import LatticeBox, random_cochain
from ddirac.multiindex import NSLOTS


def bench(fn, a, b, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(a, b, *args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--extents", type=int, default=12,
                        help="lattice points per axis")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    n = args.extents
    box = LatticeBox((n, n, n, n))
    rng = np.random.default_rng(0)
    a = random_cochain(box, rng).data.reshape(NSLOTS, -1)
    b = random_cochain(box, rng).data.reshape(NSLOTS, -1)
    table = build_table()
    kernel_args = (table.slot_a, table.slot_b, table.slot_out, table.signs)

    rows = [("python", backend.clifford_contract_python)]
    if backend._compiled is not None:
        rows.append(("compiled", backend._compiled.clifford_contract))

    print(f"box {n}^4 = {box.npoints} points, {len(table.signs)} terms, "
          f"best of {args.repeats}")
    results = {}
    for name, fn in rows:
        aa = np.ascontiguousarray(a)
        bb = np.ascontiguousarray(b)
        results[name] = bench(fn, aa, bb, kernel_args, args.repeats)
        print(f"  {name:9s} {results[name] * 1e3:9.2f} ms")
    if len(results) == 2:
        print(f"  speedup   {results['python'] / results['compiled']:.2f}x")
        out_p = backend.clifford_contract_python(a, b, *kernel_args)
        out_c = backend._compiled.clifford_contract(
            np.ascontiguousarray(a), np.ascontiguousarray(b), *kernel_args)
        print(f"  max |difference| = {np.abs(out_p - out_c).max():.3e}")


if __name__ == "__main__":
    main()
