#!/usr/bin/env python3
"""Side-by-side timing of the intersection-number backends.

The O(n^3) counting pass has two interchangeable implementations: a numba
jit of the triple loop and a numpy fallback built on one boolean matmul
per color pair (the backend the package uses when ASCHEME_NO_NUMBA=1 or
numba is absent).  This script times both on the same colorings and
checks they return identical tensors and verdicts.

Run:  python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from ascheme import _kernels
from ascheme.catalog import build_cyclotomic, build_product, complete_scheme

if not _kernels._HAVE_NUMBA:
    raise SystemExit("numba is not installed; nothing to compare")

print("warming up jit (cached after first compile)...")
t0 = time.perf_counter()
small = build_cyclotomic(13, 2).color.entries
_kernels._tensor_and_verify_numba(small, 2)
print(f"warmup: {time.perf_counter() - t0:.2f}s\n")


def instances():
    yield "cyclotomic(101,2)", build_cyclotomic(101, 2)
    yield "cyclotomic(241,6)", build_cyclotomic(241, 6)
    yield "cyclotomic(257,2)", build_cyclotomic(257, 2)
    yield "cyclotomic(256,5)", build_cyclotomic(256, 5)
    yield "cyclotomic(257,2) x K2", build_product(
        build_cyclotomic(257, 2), complete_scheme(2), "direct"
    )
    yield "cyclotomic(31,2)^2", build_product(
        build_cyclotomic(31, 2), build_cyclotomic(31, 2), "direct"
    )


def best_of(fn, e, d, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(e, d)
        best = min(best, time.perf_counter() - t0)
    return best, out


print(f"{'instance':<24} {'n':>5} {'d':>3} {'numpy (s)':>10} {'numba (s)':>10} {'speedup':>8} {'agree':>6}")
print("-" * 72)

for label, s in instances():
    e, d = s.color.entries, s.d
    repeats = 3 if s.n <= 300 else 1
    t_np, (p_np, ok_np, _) = best_of(_kernels._tensor_and_verify_numpy, e, d, repeats)
    t_nb, (p_nb, ok_nb, _) = best_of(_kernels._tensor_and_verify_numba, e, d, repeats)
    agree = ok_np and ok_nb and (p_np == p_nb).all()
    print(
        f"{label:<24} {s.n:>5} {d:>3} {t_np:>10.3f} {t_nb:>10.3f} "
        f"{t_np / t_nb:>7.1f}x {'ok' if agree else 'FAIL':>6}"
    )
    assert agree
