import os
import subprocess
import sys

import numpy as np
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from coxalg import _kernels
from coxalg._kernels import (
    _det_mod_numpy,
    det_mod_batch,
    modular_prime,
    primitive_root_of_unity,
)

P = modular_prime(12)


def _det_exact(M):
    from fractions import Fraction

    A = [[Fraction(int(x)) for x in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return int(det)


def test_prime_and_root():
    assert P == 2147483629 and P % 12 == 1
    r = primitive_root_of_unity(12, P)
    assert pow(r, 12, P) == 1 and all(pow(r, k, P) != 1 for k in (4, 6))


mats = st.integers(1, 6).flatmap(lambda k: arrays(np.int64, (5, k, k), elements=st.integers(-P + 1, P - 1)))


@given(mats)
def test_backends_agree_with_exact_determinant(A):
    got_np = _det_mod_numpy(A, P)
    got = det_mod_batch(A, P)
    want = [_det_exact(M) % P for M in A]
    assert list(got_np) == want
    assert list(got) == want


@given(st.integers(1, 6).flatmap(lambda k: arrays(np.int64, (4, k, k), elements=st.integers(-2, 2))))
def test_singular_and_small_matrices(A):
    A[0, 0, :] = 0
    assert det_mod_batch(A, P)[0] == 0
    assert list(det_mod_batch(A, P)) == [_det_exact(M) % P for M in A]


def test_empty_batch():
    assert det_mod_batch(np.zeros((0, 3, 3), dtype=np.int64), P).shape == (0,)


def test_fallback_flag_selects_numpy():
    env = dict(os.environ, COXALG_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from coxalg._kernels import backend; print(backend())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
    assert _kernels.backend() in ("numba", "numpy")


def test_screen_is_backend_independent():
    # the same seed must give the same candidate minors on both paths
    code = (
        "from coxalg.poly import PolyRing\n"
        "from coxalg.gitfan import jacobian\n"
        "from coxalg._kernels import screen_monomial_minors\n"
        "R = PolyRing('x y v w')\n"
        "g = [R('x*y - v^2'), R('x^2 + w'), R('y*w + v'), R('v*w - x')]\n"
        "J = jacobian(g, R.names)\n"
        "print(sorted(screen_monomial_minors(J, 2, 300, 7, R)))\n"
    )
    runs = []
    for flag in ("0", "1"):
        env = dict(os.environ, COXALG_NO_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        runs.append(out.stdout)
    assert runs[0] == runs[1] and runs[0].strip() != "[]"
