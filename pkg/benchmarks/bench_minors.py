"""Time batched 6x6 determinants mod p: numba kernel vs the numpy fallback.

Run: python benchmarks/bench_minors.py [batch]
"""
import sys
import time

import numpy as np

from coxalg import _kernels as K


def bench(fn, mats, p, reps=3):
    fn(mats[:8], p)  # warm-up / compile
    best = float("inf")
    for _ in range(reps):
        t = time.perf_counter()
        out = fn(mats, p)
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 200_000
    p = K.modular_prime(12)
    rng = np.random.default_rng(0)
    mats = rng.integers(0, p, (n, 6, 6), dtype=np.int64)
    t_np, d_np = bench(K._det_mod_numpy, mats, p)
    print(f"numpy  {n} dets: {t_np:.3f} s ({n / t_np:,.0f}/s)")
    if K.USE_NUMBA:
        t_nb, d_nb = bench(lambda m, q: K._det_mod_numba(m, np.int64(q)), mats, p)
        assert (d_np == d_nb).all()
        print(f"numba  {n} dets: {t_nb:.3f} s ({n / t_nb:,.0f}/s)  speedup {t_np / t_nb:.1f}x")
    else:
        print("numba disabled (COXALG_NO_NUMBA=1 or not installed)")


if __name__ == "__main__":
    main()
