#!/usr/bin/env python3
"""Sweep the minimum product-class count over all prime powers up to a
bound and compare with the closed-form values: q-1 in characteristic 2,
(q+3)/2 for odd q > 3, and 2 for q = 3.

Usage: python scripts/min_class_sweep.py [--qmax 32] [--csv out.csv]
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from sl2q.cli import field_for, prime_powers_up_to  # noqa: E402
from sl2q.products import min_product_classes  # noqa: E402


def expected_minimum(q: int) -> int:
    if q % 2 == 0:
        return q - 1
    return 2 if q == 3 else (q + 3) // 2


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qmax", type=int, default=32)
    ap.add_argument("--csv", type=pathlib.Path, default=None)
    args = ap.parse_args()

    rows = ["q,min,expected,witness_a,witness_b,seconds"]
    ok = True
    print(f"{'q':>4} {'min':>5} {'expected':>9}  witness")
    for q in prime_powers_up_to(args.qmax):
        t0 = time.perf_counter()
        value, (la, lb) = min_product_classes(field_for(q))
        dt = time.perf_counter() - t0
        want = expected_minimum(q)
        mark = "" if value == want else "  <-- MISMATCH"
        ok = ok and value == want
        print(f"{q:>4} {value:>5} {want:>9}  {la} x {lb}  ({dt:.2f}s){mark}")
        rows.append(f"{q},{value},{want},{la},{lb},{dt:.3f}")
    if args.csv:
        args.csv.write_text("\n".join(rows) + "\n")
        print(f"wrote {args.csv}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
