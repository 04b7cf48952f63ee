#!/usr/bin/env python3
"""Time the pure-Python kernels against the compiled extension.

Usage:
    python benchmarks/bench_kernels.py [--repeat N] [--big]

Each row reports the best of N runs.  --big adds larger marking scans
and the v=6 pairing census (compiled only; the pure census at v=6 walks
34 million pairings and is left out by default).
"""

import argparse
import random
import time

from weightsys import _kernels_py

try:
    from weightsys import _kernels
except ImportError:
    _kernels = None


def random_connected_alpha(v, rng):
    """Random pairing, resampled until connected (quick for small v)."""
    while True:
        darts = list(range(3 * v))
        rng.shuffle(darts)
        alpha = [0] * (3 * v)
        for k in range(0, 3 * v, 2):
            a, b = darts[k], darts[k + 1]
            alpha[a] = b
            alpha[b] = a
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for d in (3 * i, 3 * i + 1, 3 * i + 2):
                j = alpha[d] // 3
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) == v:
            return tuple(alpha)


def best_of(repeat, fn, *args):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def run_case(label, repeat, fn_name, *args):
    pure = best_of(repeat, getattr(_kernels_py, fn_name), *args)
    if _kernels is None:
        print(f"{label:<34} pure {pure * 1e3:9.2f} ms   compiled (unavailable)")
        return
    fast = best_of(repeat, getattr(_kernels, fn_name), *args)
    ratio = pure / fast if fast > 0 else float("inf")
    print(f"{label:<34} pure {pure * 1e3:9.2f} ms   "
          f"compiled {fast * 1e3:9.2f} ms   x{ratio:.1f}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--big", action="store_true")
    args = ap.parse_args()

    rng = random.Random(1)
    print(f"compiled extension: {'yes' if _kernels else 'no'}")

    alpha400 = random_connected_alpha(400, rng)

    def face_count_sweep(mod_alpha, calls):
        # one timed unit = many calls, so per-call noise washes out
        def inner(fn):
            for _ in range(calls):
                fn(mod_alpha)
        return inner

    pure_unit = face_count_sweep(alpha400, 200)
    start = time.perf_counter()
    pure_unit(_kernels_py.face_count)
    pure = time.perf_counter() - start
    if _kernels:
        start = time.perf_counter()
        pure_unit(_kernels.face_count)
        fast = time.perf_counter() - start
        print(f"{'face_count v=400 x200':<34} pure {pure * 1e3:9.2f} ms   "
              f"compiled {fast * 1e3:9.2f} ms   x{pure / fast:.1f}")
    else:
        print(f"{'face_count v=400 x200':<34} pure {pure * 1e3:9.2f} ms")

    for v in (10, 12, 14):
        alpha = random_connected_alpha(v, rng)
        run_case(f"marking_scan v={v} (2^{v} markings)", args.repeat,
                 "marking_scan", alpha, v)
    if args.big:
        alpha = random_connected_alpha(16, rng)
        run_case("marking_scan v=16 (65536 markings)", args.repeat,
                 "marking_scan", alpha, 16)

    run_case("pairing_census v=4", args.repeat, "pairing_census", 4, True)
    if args.big and _kernels:
        start = time.perf_counter()
        _kernels.pairing_census(6, True)
        print(f"{'pairing_census v=6 (compiled)':<34} "
              f"{(time.perf_counter() - start) * 1e3:9.2f} ms")


if __name__ == "__main__":
    main()
