"""Time the compiled kernels against their interpreted fallback.

    python benchmarks/bench_kernels.py [--diagrams 2000] [--repeat 3]

The interpreted side is a fresh copy of the kernel module loaded with
numba disabled.  Compilation (or the cache load) is excluded by a warm-up.
"""

import argparse
import time

import numpy as np

from vknot import _kernels
from vknot.generate import random_diagram
from vknot.moves import to_code


def best_of(fn, args, repeat):
    fn(*args)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--diagrams", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--components", type=int, default=1, help="batches share one component count")
    args = ap.parse_args()
    if not _kernels.USING_NUMBA:
        raise SystemExit("numba is unavailable or disabled; nothing to compare")

    rng = np.random.default_rng(args.seed)
    codes = [
        to_code(random_diagram(rng, int(rng.integers(2, 9)), args.components))
        for _ in range(args.diagrams)
    ]
    packed = _kernels.pack(codes)
    pure = _kernels.interpreted_copy()
    print(f"{args.diagrams} diagrams, 2-8 crossings, best of {args.repeat}")
    for name in ("canonical_batch", "genus_batch"):
        fast = getattr(_kernels, name)
        t_fast = best_of(fast, packed, args.repeat)
        t_slow = best_of(getattr(pure, name), packed, args.repeat)
        print(f"{name:16s} numba {t_fast * 1e3:9.2f} ms   python {t_slow * 1e3:9.2f} ms   x{t_slow / t_fast:7.1f}")


if __name__ == "__main__":
    main()
