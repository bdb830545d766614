"""Benchmark the order-of-2 kernels: numba JIT vs pure-numpy fallback.

Both backends compute multiplicative orders of 2 for every odd a in a range,
uncapped and capped.  Run from the repository root:

    python benchmarks/bench_kernels.py --max-a 1000000 --cap 19

The numba timing excludes JIT compilation (a warm-up call is made first).
"""

import argparse
import time

import numpy as np

from collatzmat.kernels import _numpy

try:
    from collatzmat.kernels import _numba
except ImportError:
    _numba = None


def bench(label, fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:<28} {best:8.3f} s")
    return result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-a", type=int, default=1_000_000,
                        help="scan odd a in [3, max-a] (default 1000000)")
    parser.add_argument("--cap", type=int, default=19,
                        help="order cap for the capped variant (default 19)")
    parser.add_argument("--repeats", type=int, default=3,
                        help="repeats per measurement, best-of (default 3)")
    args = parser.parse_args()

    values = np.arange(3, args.max_a + 1, 2, dtype=np.int64)
    print(f"{len(values)} odd values in [3, {args.max_a}], cap {args.cap}")

    print("numpy fallback:")
    ref_full = bench("order_batch", _numpy.order_batch, values,
                     repeats=args.repeats)
    ref_capped = bench(f"order_batch_capped({args.cap})",
                       _numpy.order_batch_capped, values, args.cap,
                       repeats=args.repeats)

    if _numba is None:
        print("numba backend not importable; skipping")
        return

    _numba.order_batch(values[:16])  # JIT warm-up
    _numba.order_batch_capped(values[:16], args.cap)
    print("numba JIT:")
    jit_full = bench("order_batch", _numba.order_batch, values,
                     repeats=args.repeats)
    jit_capped = bench(f"order_batch_capped({args.cap})",
                       _numba.order_batch_capped, values, args.cap,
                       repeats=args.repeats)

    if not np.array_equal(ref_full, jit_full):
        raise SystemExit("backends disagree on order_batch")
    if not np.array_equal(ref_capped, jit_capped):
        raise SystemExit("backends disagree on order_batch_capped")
    print("backends agree on all results")


if __name__ == "__main__":
    main()
