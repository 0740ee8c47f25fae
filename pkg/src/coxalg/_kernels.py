"""Modular screening of Jacobian minors.

Hot loop: determinants of many small integer matrices mod a prime. The numba
kernel is used unless COXALG_NO_NUMBA=1 is set (or numba is missing); the
fallback runs the same elimination vectorized over the batch in numpy.
"""
from __future__ import annotations

import os

import numpy as np
from gmpy2 import is_prime

USE_NUMBA = os.environ.get("COXALG_NO_NUMBA", "") not in ("1", "true", "yes")

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def modular_prime(order: int, below: int = 2**31) -> int:
    """Largest prime p < ``below`` with p = 1 mod ``order`` (so Z/p has order-th roots of unity)."""
    p = below - 1
    p -= (p - 1) % order
    while not is_prime(p):
        p -= order
    return int(p)


def _prime_factors(n: int) -> list:
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            if d not in out:
                out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root_of_unity(order: int, p: int) -> int:
    qs = _prime_factors(order)
    for a in range(2, p):
        r = pow(a, (p - 1) // order, p)
        if all(pow(r, order // q, p) != 1 for q in qs):
            return r
    raise ValueError(f"no primitive {order}-th root of unity mod {p}")


def cyc_mod(x, p: int, root: int) -> int:
    acc = 0
    rk = 1
    for q in x.c:
        if q:
            acc += int(q.numerator) * pow(int(q.denominator), -1, p) * rk
        rk = rk * root % p
    return acc % p


def poly_mod(f, point, p: int, root: int) -> int:
    acc = 0
    for e, c in f.terms.items():
        t = cyc_mod(c, p, root)
        for v, k in zip(point, e):
            if k:
                t = t * pow(v, k, p) % p
        acc += t
    return acc % p


# ---------------------------------------------------------------------------
# batched determinants mod p


def _det_mod_numpy(mats: np.ndarray, p: int) -> np.ndarray:
    A = np.array(mats, dtype=np.int64) % p
    B, k, _ = A.shape
    det = np.ones(B, dtype=np.int64)
    alive = np.ones(B, dtype=bool)
    idx = np.arange(B)
    for c in range(k):
        nz = A[:, c:, c] != 0
        has = nz.any(axis=1)
        alive &= has
        piv = c + np.argmax(nz, axis=1)
        swap = (piv != c) & alive
        if swap.any():
            rows_c = A[idx[swap], c].copy()
            A[idx[swap], c] = A[idx[swap], piv[swap]]
            A[idx[swap], piv[swap]] = rows_c
            det[swap] = (p - det[swap]) % p
        pv = A[:, c, c]
        det = det * np.where(alive, pv, 1) % p
        inv = _pow_mod(np.where(alive, pv, 1), p - 2, p)
        for r in range(c + 1, k):
            f = A[:, r, c] * inv % p
            A[:, r, c:] = (A[:, r, c:] - (f[:, None] * A[:, c, c:]) % p) % p
    det[~alive] = 0
    return det


def _pow_mod(a: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(a)
    base = a % p
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out


if USE_NUMBA:

    @njit(cache=True)
    def _det_mod_numba(mats, p):  # pragma: no cover - compiled
        # division-free elimination; one Fermat inverse per matrix at the end
        B, k, _ = mats.shape
        out = np.empty(B, dtype=np.int64)
        A = np.empty((k, k), dtype=np.int64)
        for b in range(B):
            for i in range(k):
                for j in range(k):
                    A[i, j] = mats[b, i, j] % p
            det = 1
            scale = 1
            for c in range(k):
                piv = -1
                for r in range(c, k):
                    if A[r, c] != 0:
                        piv = r
                        break
                if piv < 0:
                    det = 0
                    break
                if piv != c:
                    for j in range(k):
                        t = A[c, j]
                        A[c, j] = A[piv, j]
                        A[piv, j] = t
                    det = (p - det) % p
                pv = A[c, c]
                det = det * pv % p
                for r in range(c + 1, k):
                    f = A[r, c]
                    if f:
                        for j in range(c, k):
                            A[r, j] = (A[r, j] * pv % p - f * A[c, j] % p) % p
                        scale = scale * pv % p
            if det:
                inv = 1
                base = scale
                e = p - 2
                while e:
                    if e & 1:
                        inv = inv * base % p
                    base = base * base % p
                    e >>= 1
                det = det * inv % p
            out[b] = det
        return out


def det_mod_batch(mats, p: int) -> np.ndarray:
    mats = np.ascontiguousarray(mats, dtype=np.int64)
    if mats.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if USE_NUMBA:
        return _det_mod_numba(mats, np.int64(p))
    return _det_mod_numpy(mats, p)


# ---------------------------------------------------------------------------
# screening


def evaluate_matrix(J, point, p: int, root: int) -> np.ndarray:
    return np.array([[poly_mod(e, point, p, root) if e else 0 for e in row] for row in J], dtype=np.int64)


def screen_monomial_minors(J, size: int, trials: int, seed: int = 0, ring=None, batch: int = 4096):
    """Yield 1-based (rows, cols) whose minor passes a randomized monomial test mod p.

    A polynomial f with f(1) != 0 and f(x) f(y) = f(1) f(x*y) at random x, y
    is a monomial with high probability; survivors still go through the
    exact check of the caller.
    """
    ring = ring or next(e for row in J for e in row if e is not None).ring
    p = modular_prime(ring.field.order)
    root = primitive_root_of_unity(ring.field.order, p)
    rng = np.random.default_rng(seed)
    n = ring.n
    x = [int(v) for v in rng.integers(2, p - 1, n)]
    y = [int(v) for v in rng.integers(2, p - 1, n)]
    xy = [a * b % p for a, b in zip(x, y)]
    one = [1] * n
    mats = [evaluate_matrix(J, pt, p, root) for pt in (x, y, one, xy)]
    m, k = mats[0].shape
    done = 0
    while done < trials:
        cnt = min(batch, trials - done)
        rows = np.sort(np.argsort(rng.random((cnt, m)), axis=1)[:, :size], axis=1)
        cols = np.sort(np.argsort(rng.random((cnt, k)), axis=1)[:, :size], axis=1)
        dets = []
        for M in mats:
            sub = M[rows[:, :, None], cols[:, None, :]]
            dets.append(det_mod_batch(sub, p))
        dx, dy, d1, dxy = dets
        ok = (d1 != 0) & ((dx * dy) % p == (d1 * dxy) % p)
        for b in np.nonzero(ok)[0]:
            yield tuple(int(r) + 1 for r in rows[b]), tuple(int(c) + 1 for c in cols[b])
        done += cnt
