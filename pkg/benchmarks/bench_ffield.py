#!/usr/bin/env python3
"""Timing comparison of the finite-field sweep kernels.

The set-theoretic decomposition checks enumerate every point of F_q^V;
this script times the numba-compiled kernel against the pure-numpy
fallback on the heaviest standard instances.  Setting HILBFOLD_NO_NUMBA=1
makes the library itself use the fallback everywhere.
"""

import time

from hilbfold import ffield
from hilbfold.localmodel import (primary_components, reduced_ideal,
                                 verify_decomposition_ff)


CASES = [
    (3, 3, 3),   # 3^9 points
    (4, 2, 3),   # 3^8 points
    (4, 3, 3),   # 3^12 points
]


def run(use_numba: bool) -> float:
    start = time.perf_counter()
    for n, k, q in CASES:
        assert verify_decomposition_ff(reduced_ideal(n, k),
                                       primary_components(n, k), q,
                                       use_numba=use_numba)
    return time.perf_counter() - start


def main():
    if not ffield._HAVE_NUMBA:
        print("numba is not installed; only the numpy path is available")
        print(f"numpy  : {run(False):8.3f} s")
        return
    run(True)  # warm-up: trigger JIT compilation outside the timing
    numba_t = run(True)
    numpy_t = run(False)
    print("finite-field sweep benchmark "
          f"({sum(q ** (n * k) for n, k, q in CASES):,} points total)")
    print(f"numba  : {numba_t:8.3f} s")
    print(f"numpy  : {numpy_t:8.3f} s")
    ratio = numpy_t / numba_t if numba_t else float("inf")
    print(f"ratio  : {ratio:8.2f}x")


if __name__ == "__main__":
    main()
