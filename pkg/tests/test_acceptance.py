"""Acceptance criteria 1-9, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are printed
even when output capture is on. Criteria 6 and 7 compare against printed
reference data literally and currently FAIL; the reason is in the line.
"""
import pytest

import test_cyclotomic
import test_gitfan
import test_groebner
import test_invariants
import test_valuation
from coxalg.centralfiber import d8_central_fiber_report
from coxalg.coxring import (
    case_valuations,
    class_group_index_check,
    four_variable_identity,
    printed_embedding_ideal,
    synthesize_cox_generators,
    verify_lifting_condition,
)
from coxalg.groebner import ideal_equal
from coxalg.invariants import verify_generating_table
from coxalg.linalg import FieldMatrix
from coxalg.matgroup import abelianization, symplectic_reflections
from coxalg.runner import _flip, git_report


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail=""):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())
        assert ok, detail

    return emit


def _neg(g):
    return FieldMatrix([[-x for x in r] for r in g.tolist()], g.field)


def test_criterion_1_group_facts(s3, d8, g4, verdict):
    checks = {}
    G, H = s3.group, s3.commutator
    cls = symplectic_reflections(G)
    checks["s3"] = (
        len(G) == 6 and len(H) == 3 and abelianization(G, H).invariants == (2,)
        and [len(c.elements) for c in cls] == [3]
    )
    G, H = d8.group, d8.commutator
    T0, T2 = d8.named["T0"], d8.named["T2"]
    cls = {frozenset(c.elements) for c in symplectic_reflections(G)}
    checks["d8"] = (
        len(G) == 8 and set(H.elements) == {G.identity(), _neg(G.identity())}
        and tuple(abelianization(G, H).invariants) == (2, 2)
        and cls == {frozenset({T0, _neg(T0)}), frozenset({T2, _neg(T2)})}
    )
    G, H = g4.group, g4.commutator
    invol = [h for h in H if h != G.identity() and h * h == G.identity()]
    checks["g4"] = (
        len(G) == 24 and len(H) == 8 and len(invol) == 1
        and any(a * b != b * a for a in H for b in H)
        and abelianization(G, H).invariants == (3,)
        and sorted(len(c.elements) for c in symplectic_reflections(G)) == [4, 4]
    )
    verdict(1, all(checks.values()), str(checks))


def test_criterion_2_tables(s3, d8, g4, verdict):
    out = {}
    for case, bound in ((s3, 6), (d8, 4), (g4, 6)):
        rep = verify_generating_table(case.table, case.commutator, bound, case.reps, case.convention)
        out[case.name] = rep.ok and [rep.dims[d] for d in range(bound + 1)] == rep.molien
    verdict(2, all(out.values()), str(out))


def test_criterion_3_valuations_and_generators(s3, d8, g4, verdict):
    out = {"s3-pattern": case_valuations(s3) == [[0] * 7 + [1] * 5]}
    gens = {c.name: synthesize_cox_generators(c) for c in (s3, d8, g4)}
    got_t = {g.label: g.t_exponents for g in gens["d8-wreath"] if g.base is not None}
    out["d8-t-exponents"] = got_t == d8.claims["t_exponents"]
    for c in (s3, d8, g4):
        out[f"{c.name}-set"] = {g.key() for g in gens[c.name]} == c.claims["cox"]
    torus = {c: sorted(g.t_exponents for g in gens[c] if g.base is None) for c in gens}
    out["torus"] = torus == {"s3": [(-2,)], "d8-wreath": [(-2, 0), (0, -2)], "g4": [(-2, 1), (1, -2)]}
    verdict(3, all(out.values()), str(out))


def test_criterion_4_index(s3, d8, g4, verdict):
    details = {c.name: class_group_index_check(c).get("index").detail for c in (s3, d8, g4)}
    want = {"s3": 2, "d8-wreath": 4, "g4": 3}
    ok = all(d == {"ab_order": want[n], "abs_det_cartan": want[n]} for n, d in details.items())
    verdict(4, ok, str(details))


def test_criterion_5_lifting_condition(s3, d8, verdict):
    reps = {"s3": verify_lifting_condition(s3, 3), "d8": verify_lifting_condition(d8, 3, joint=True)}
    four = four_variable_identity().get("identity").status
    failed = {k: [it.id for it in r.failed()] for k, r in reps.items()}
    s3_gens = reps["s3"].get("class0/intersection-printed-generators").detail["count"]
    needed = [
        ("s3", "class0/preimage-of-intersection"),
        ("d8", "class0/preimage-of-intersection"),
        ("d8", "class1/preimage-of-intersection"),
        ("s3", "class0/powers-vs-intersection"),
        ("d8", "class0/powers-vs-intersection"),
        ("d8", "class1/powers-vs-intersection"),
    ]
    present = all(reps[k].get(i).status == "PASS" for k, i in needed)
    ok = not any(failed.values()) and four == "PASS" and s3_gens == 5 and present
    verdict(5, ok, f"failed={failed} four-variable={four} s3-intersection-generators={s3_gens}")


def test_criterion_6_embedding_ideal(d8, d8_kernel, verdict):
    printed = printed_embedding_ideal(d8)
    literal = ideal_equal(d8_kernel, printed)
    normalized = ideal_equal(d8_kernel, _flip(printed, d8.claims["embedding_sign_flip"]))
    detail = (
        f"printed={len(printed.gens)} generators; literal equality={literal}; "
        f"equal after w02 -> -w02: {normalized}"
    )
    verdict(6, literal, detail)


def test_criterion_7_git(d8, d8_kernel, verdict):
    rep = git_report(d8, (2, 1), kernel=d8_kernel)
    sups = rep.get("semistable-supports")
    from coxalg.gitfan import WeightSystem, isotropy_trivial, semistable_supports

    ws = WeightSystem.from_case(d8, (2, 1))
    computed = semistable_supports(ws)
    iso = dict(zip((" ".join(sorted(S)) for S in computed), isotropy_trivial(ws, computed)))
    minors = rep.get("monomial-minors").status == "PASS"
    absorbed = rep.get("stable-free-on-spec").status
    ok = sups.status == "PASS" and all(iso.values()) and minors
    detail = (
        f"supports match={sups.status == 'PASS'} extra={sups.detail['extra']} missing={sups.detail['missing']}; "
        f"non-free supports={[k for k, v in iso.items() if not v]}; minors={minors}; "
        f"extra supports absorbed on Spec R: {absorbed}"
    )
    verdict(7, ok, detail)


def test_criterion_8_central_fiber(d8_kernel, verdict):
    rep = d8_central_fiber_report(kernel=d8_kernel)
    st = rep.statuses()
    comp = rep.get("components").detail
    fan = rep.get("toric/quotient-fan").detail
    cone = rep.get("toric/cone").detail
    diff = rep.get("toric/printed-ray-list").detail
    ok = (
        not rep.failed()
        and all(s == "PASS" for k, s in st.items() if k != "toric/printed-ray-list")
        and [comp["dims"][k] for k in ("W_u", "W02", "W0", "W2")] == [2, 4, 4, 4]
        and rep.get("stable-components").detail["semistable_components"] == ["W02", "W2"]
        and len(cone["rays"]) == 5 and len(cone["hilbert_basis"]) == 7
        and fan["complete"] and fan["smooth"] and len(fan["rays"]) == 4 and fan["hirzebruch"] == 4
        and diff["agrees"] is False
    )
    detail = (
        f"computed fan rays={fan['rays']} printed={fan['printed_rays']} "
        f"(discrepancy flagged: only_printed={diff['only_printed']})"
    )
    verdict(8, ok, detail)


PROPERTIES = [
    test_cyclotomic.test_ring_axioms,
    test_cyclotomic.test_inverse,
    test_groebner.test_gb_is_deterministic,
    test_groebner.test_combinations_are_members,
    test_groebner.test_normal_form_is_a_sound_remainder,
    test_groebner.test_linear_algebra_members_agree,
    test_groebner.test_ideal_operation_identities,
    test_groebner.test_saturation_and_radical,
    test_invariants.test_reynolds_idempotent_and_invariant,
    test_valuation.test_valuation_is_additive,
    test_valuation.test_valuation_matches_eigenvalue_mod_order,
    test_gitfan.test_cone_double_duality,
    test_gitfan.test_hilbert_basis_is_irreducible_and_generating,
]


def _run_counting(prop) -> int:
    inner = prop.hypothesis.inner_test
    calls = 0

    def counted(*args, **kwargs):
        nonlocal calls
        calls += 1
        return inner(*args, **kwargs)

    prop.hypothesis.inner_test = counted
    try:
        prop()
    finally:
        prop.hypothesis.inner_test = inner
    return calls


def test_criterion_9_property_suites(verdict):
    counts = {}
    failures = []
    for prop in PROPERTIES:
        try:
            counts[prop.__name__] = _run_counting(prop)
        except Exception as err:  # noqa: BLE001 - report every failing suite
            failures.append(f"{prop.__name__}: {type(err).__name__}")
    short = {k: n for k, n in counts.items() if n < 100}
    ok = not failures and not short
    verdict(9, ok, f"{len(counts)}/{len(PROPERTIES)} suites ran, min instances={min(counts.values(), default=0)}; "
                   f"failures={failures} under-100={short}")
