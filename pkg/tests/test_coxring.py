import pytest

from coxalg.coxring import (
    GROUP32_INDEX,
    HypothesisViolated,
    case_from_group,
    class_group_index_check,
    cox_report,
    four_variable_identity,
    lift_exponents,
    lift_in_generated_algebra,
    load_case,
    synthesize_cox_generators,
    verify_lifting_condition,
)
from coxalg.linalg import FieldMatrix
from coxalg.matgroup import act, group_closure
from strategies import Q12


def _torus(case):
    return {g.t_exponents for g in synthesize_cox_generators(case) if g.base is None}


def test_torus_monomials(s3, d8, g4):
    assert _torus(s3) == {(-2,)}
    assert _torus(d8) == {(-2, 0), (0, -2)}
    assert _torus(g4) == {(-2, 1), (1, -2)}


@pytest.mark.parametrize("name", ["s3", "d8-wreath", "g4"])
def test_generators_equal_printed_sets(name):
    case = load_case(name)
    got = {g.key() for g in synthesize_cox_generators(case)}
    assert got == case.claims["cox"]
    rep = cox_report(case)
    assert not rep.failed(), [it.to_dict() for it in rep.failed()]


def test_generator_formatting(s3):
    gens = synthesize_cox_generators(s3)
    assert [g.format(s3.t_names) for g in gens][:2] == ["t^-2", "phi1"]
    assert "phi8*t" in [g.format(s3.t_names) for g in gens]


@pytest.mark.parametrize("name,expected", [("s3", 2), ("d8-wreath", 4), ("g4", 3)])
def test_index_check(name, expected):
    item = class_group_index_check(load_case(name)).get("index")
    assert item.status == "PASS"
    assert item.detail == {"ab_order": expected, "abs_det_cartan": expected}


def test_index_check_negative_example():
    item = class_group_index_check(GROUP32_INDEX).get("index")
    assert item.status == "FAIL" and item.detail == {"ab_order": 16, "abs_det_cartan": 32}


def test_s3_lifting(s3):
    rep = verify_lifting_condition(s3, 3)
    st = rep.statuses()
    assert st["class0/intersection-printed-generators"] == "PASS"
    assert st["class0/preimage-of-intersection"] == "PASS"
    assert st["class0/powers-vs-intersection"] == "PASS"
    assert not rep.failed()
    assert rep.get("class0/intersection-printed-generators").detail["count"] == 5


def test_four_variable_identity():
    assert four_variable_identity().get("identity").status == "PASS"


def test_lift_test_positive(s3):
    phi8 = next(g.poly for g in s3.table if g.name == "phi8")
    assert lift_exponents(s3, phi8) == (1,)
    assert lift_in_generated_algebra(s3, phi8)
    assert lift_in_generated_algebra(s3, phi8 * phi8)


def test_g4_witness_is_not_generated(g4):
    t = {g.name: g.poly for g in g4.table}
    f = Q12
    w = t["phi1"] ** 3 + t["phi8"].scale((1 + f.zeta_power(2)) * f(3) / 2)
    assert all(act(h, w) == w for h in g4.group.generators)
    assert lift_exponents(g4, w) == (1, 1)
    assert not lift_in_generated_algebra(g4, w)
    for good in (t["phi1"] ** 3, t["phi8"], t["phi9"] * t["phi14"], t["phi1"] ** 2 * t["phi9"]):
        assert lift_in_generated_algebra(g4, good)


def test_case_from_group_matches_bundled_s3(s3):
    case = case_from_group(s3.group, 6)
    assert len(case.table) == len(s3.table)
    assert sorted(g.degree for g in case.table) == sorted(g.degree for g in s3.table)
    assert _torus(case) == {(-2,)}


def test_reflection_in_commutator_is_rejected():
    e = Q12.root_of_unity(3)
    G = group_closure([FieldMatrix([[e, 0], [0, e * e]], Q12), FieldMatrix([[0, 1], [1, 0]], Q12)])
    with pytest.raises(HypothesisViolated):
        case_from_group(G, 4)
