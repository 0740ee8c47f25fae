from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxalg.coxring import case_valuations, load_case
from coxalg.linalg import IntMatrix
from coxalg.poly import PolyRing
from coxalg.valuation import (
    CartanData,
    CartanUnsupported,
    NonIntegral,
    check_cartan,
    eigen_log,
    intersection_numbers,
    lifted_valuation,
    monomial_valuation,
    nu_eval,
)
from strategies import Q12, polys

CASES = {n: load_case(n) for n in ("s3", "d8-wreath", "g4")}


def test_s3_valuation_pattern(s3):
    (row,) = case_valuations(s3)
    assert row == [0] * 7 + [1] * 5


def test_d8_t_exponents(d8):
    vals = case_valuations(d8)
    for j, g in enumerate(d8.table):
        ex = intersection_numbers([vals[0][j], vals[1][j]], d8.cartan)
        assert ex == d8.claims["t_exponents"][g.name]


def test_g4_valuations(g4):
    vals = case_valuations(g4)
    by_name = {g.name: (vals[0][j], vals[1][j]) for j, g in enumerate(g4.table)}
    assert all(by_name[f"phi{k}"] == (1, 2) for k in range(9, 14))
    assert all(by_name[f"phi{k}"] == (2, 1) for k in range(14, 19))


def test_cartan_matrices(s3, d8, g4):
    assert s3.cartan.matrix.tolist() == [[-2]]
    assert d8.cartan.matrix.tolist() == [[-2, 0], [0, -2]]
    assert g4.cartan.matrix.tolist() == [[-2, 1], [1, -2]]
    assert check_cartan(g4.cartan.matrix) == [2]


@pytest.mark.parametrize(
    "M",
    [[[-2, 2], [2, -2]], [[-1]], [[-2, 1, 1], [1, -2, 1], [1, 1, -2]], [[-2, 1], [0, -2]]],
)
def test_non_a_type_rejected(M):
    with pytest.raises(CartanUnsupported):
        check_cartan(IntMatrix(M))


def test_intersection_numbers_need_integrality():
    A2 = CartanData(IntMatrix([[-2, 1], [1, -2]]), (3, 3), [None, None])
    assert intersection_numbers([1, 2], A2) == (0, 1)
    with pytest.raises(NonIntegral):
        intersection_numbers([1, 0], A2)


def test_zero_has_no_valuation(s3):
    nu = monomial_valuation(s3.reps[0], 2)
    with pytest.raises(ValueError):
        nu_eval(nu, s3.ring.zero())


# -- properties ------------------------------------------------------------

case_names = st.sampled_from(sorted(CASES))


@st.composite
def case_and_polys(draw):
    case = CASES[draw(case_names)]
    k = draw(st.integers(0, len(case.reps) - 1))
    f = draw(polys(case.ring, max_terms=3, max_deg=3, nonzero=True))
    g = draw(polys(case.ring, max_terms=3, max_deg=3, nonzero=True))
    return case, k, f, g


@given(case_and_polys())
def test_valuation_is_additive(data):
    case, k, f, g = data
    nu = monomial_valuation(case.reps[k], case.classes[k].order)
    assert nu_eval(nu, f * g) == nu_eval(nu, f) + nu_eval(nu, g)
    if f + g:
        assert nu_eval(nu, f + g) >= min(nu_eval(nu, f), nu_eval(nu, g))


@st.composite
def table_products(draw):
    case = CASES[draw(case_names)]
    idx = draw(st.lists(st.integers(0, len(case.table) - 1), min_size=1, max_size=3))
    return case, idx


@given(table_products())
def test_valuation_matches_eigenvalue_mod_order(data):
    case, idx = data
    a = lifted_valuation(case.reps, case.table, [c.order for c in case.classes], case.convention)
    vals = case_valuations(case)
    p = case.ring.one()
    for j in idx:
        p = p * case.table[j].poly
    for i, (T, c) in enumerate(zip(case.reps, case.classes)):
        nu = monomial_valuation(T, c.order)
        total = sum(vals[i][j] for j in idx)
        assert nu_eval(nu, p) == total
        assert (total - sum(a[i][j] for j in idx)) % c.order == 0
        assert (eigen_log(T, p, c.order, case.convention) - total) % c.order == 0
