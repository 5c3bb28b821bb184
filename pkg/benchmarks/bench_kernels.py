#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each workload through both backends (the fallback is what you get
with HOPF_PURE_NUMPY=1) and prints a table.  Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from hopfalg import _kernels_numba as knb
from hopfalg import _kernels_numpy as knp
from hopfalg.fields import PrimeField
from hopfalg.hopf import FiniteGroupTable, group_algebra
from hopfalg.products import drinfeld_double
from hopfalg.classify import H4nSpec, h4n_matched_pair


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    F7 = PrimeField(7)
    S3 = FiniteGroupTable.symmetric(3)
    _, D = drinfeld_double(group_algebra(S3, F7))
    mp = h4n_matched_pair(H4nSpec(6, 1, PrimeField(13)))
    p13 = 13

    workloads = [
        ("assoc D(kS3) dim36",
         lambda k: k.assoc_failure(D.mult, 7)),
        ("bialgebra D(kS3) dim36",
         lambda k: (k.bialgebra_mult_failure(D.mult, D.comult, 7)
                    if k is knb else
                    k.bialgebra_failure(D.mult, D.comult, D.unit, D.counit,
                                        7))),
        ("antipode D(kS3) dim36",
         lambda k: (k.antipode_failure(
             D.mult, D.comult, D.antipode,
             np.einsum("i,k->ik", D.counit, D.unit) % 7, 7)
             if k is knb else
             k.antipode_failure(D.mult, D.comult, D.antipode, D.unit,
                                D.counit, 7))),
        ("matched-pair mp2 (H4,kC6) F13",
         lambda k: k.mp2_failure(mp.left, mp.right, mp.A.mult, mp.H.comult,
                                 mp.A.comult, p13)),
        ("bicrossed mult (H4,kC6) F13",
         lambda k: k.bicrossed_mult(mp.A.mult, mp.H.mult, mp.A.comult,
                                    mp.H.comult, mp.left, mp.right, p13)),
        ("rref 300x300 F13",
         lambda k: (k.rref(RNG_MAT, p13) if k is knb
                    else _np_rref(RNG_MAT, p13))),
    ]

    global RNG_MAT
    rng = np.random.default_rng(7)
    RNG_MAT = rng.integers(0, p13, size=(300, 300)).astype(np.int64)

    # compile the numba kernels before timing
    for _, fn in workloads:
        fn(knb)

    print(f"{'workload':40s} {'numba':>10s} {'numpy':>10s} {'speedup':>9s}")
    for name, fn in workloads:
        tb = timeit(lambda: fn(knb), args.repeat)
        tn = timeit(lambda: fn(knp), args.repeat)
        print(f"{name:40s} {tb*1e3:9.2f}ms {tn*1e3:9.2f}ms "
              f"{tn/tb:8.1f}x")


def _np_rref(M, p):
    from hopfalg.exact_linalg import _rref_modp_numpy
    return _rref_modp_numpy(M, p)


if __name__ == "__main__":
    main()
