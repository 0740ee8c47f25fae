from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxalg.invariants import (
    GradedGenerator,
    GradedSubalgebra,
    NonStableSpan,
    invariant_generators,
    invariant_space,
    molien_series,
    reynolds,
    split_eigenvectors,
    verify_generating_table,
)
from coxalg.linalg import FieldMatrix
from coxalg.matgroup import abelianization, act, group_closure
from coxalg.poly import PolyRing
from strategies import Q12, polys

MINUS4 = group_closure([FieldMatrix.diagonal([-1] * 4, Q12)])
TRIVIAL2 = group_closure([FieldMatrix.identity(2, Q12)])


def test_molien_small_groups():
    assert molien_series(TRIVIAL2, 4) == [1, 2, 3, 4, 5]
    assert molien_series(MINUS4, 2)[2] == 10
    assert molien_series(MINUS4, 3)[3] == 0


def test_molien_s3_quadrics(s3):
    assert molien_series(s3.commutator, 2)[2] == 4


def test_reynolds_examples(s3):
    R = PolyRing("x1 x2 x3 x4", Q12)
    assert not reynolds(R.var("x1"), MINUS4)
    x1, y1 = s3.ring.var("x1"), s3.ring.var("y1")
    assert reynolds(x1 * y1, s3.commutator) == x1 * y1


def test_generators_of_trivial_group_are_the_variables():
    gens = invariant_generators(TRIVIAL2, 3)
    assert sorted(str(g) for g in gens) == ["x1", "x2"]


def test_minus_identity_gives_ten_quadrics(d8):
    gens = invariant_generators(d8.commutator, 4, ring=d8.ring)
    assert [g.total_degree() for g in gens] == [2] * 10
    span = GradedSubalgebra(d8.ring, gens)
    assert all(span.contains(g.poly) for g in d8.table)


def test_g4_generator_degrees_match_the_table(g4):
    gens = invariant_generators(g4.commutator, 6, ring=g4.ring)
    assert Counter(g.total_degree() for g in gens) == Counter(g.degree for g in g4.table)


def _span(ps):
    from coxalg.linalg import SparseEchelon

    E = SparseEchelon()
    for p in ps:
        E.add(dict(p.terms))
    return {k: dict(v) for k, v in E.rows.items()}


def test_split_s3_minus_one_block(s3):
    gens = invariant_generators(s3.commutator, 6, ring=s3.ring)
    split = split_eigenvectors(gens, s3.reps)
    odd = [g for g in split if g.character[0] == -1]
    assert len(odd) == 5
    # no linear invariants, so odd generators of degree <= 3 are a basis of the odd part
    assert _span([g.poly for g in odd]) == _span([g.poly for g in s3.table if g.character[0] == -1])


def test_split_d8_phi02_character(d8):
    phi02 = next(g for g in d8.table if g.name == "phi02")
    (out,) = split_eigenvectors([phi02.poly], d8.reps)
    assert out.character == (-1, -1)


def test_split_trivial_characters():
    gens = invariant_generators(MINUS4, 2)
    assert all(all(c == 1 for c in g.character) for g in split_eigenvectors(gens, [MINUS4.identity()]))


def test_split_rejects_unstable_span():
    R = PolyRing("a b", Q12)
    swap = FieldMatrix([[0, 1], [1, 0]], Q12)
    with pytest.raises(NonStableSpan):
        split_eigenvectors([R.var("a")], [swap])


def test_tables_generate(s3, d8, g4):
    for case, bound in ((s3, 6), (d8, 4), (g4, 6)):
        rep = verify_generating_table(case.table, case.commutator, bound, case.reps, case.convention)
        assert rep.ok, rep.failures
        assert [rep.dims[d] for d in range(bound + 1)] == rep.molien


def test_table_check_detects_a_missing_generator(s3):
    short = [g for g in s3.table if g.name != "phi3"]
    rep = verify_generating_table(short, s3.commutator, 4, s3.reps)
    assert not rep.ok
    assert any(f["kind"] == "not-generated" and f["degree"] == 2 for f in rep.failures)


def test_table_check_detects_a_wrong_character(s3):
    bad = [GradedGenerator(g.poly, tuple(-c for c in g.character), g.degree, g.name) for g in s3.table[:1]]
    rep = verify_generating_table(bad + s3.table[1:], s3.commutator, 2, s3.reps)
    assert any(f["kind"] == "wrong-character" for f in rep.failures)


# -- properties ------------------------------------------------------------

S3_RING = PolyRing("x1 y1 x2 y2", Q12)


@given(polys(S3_RING, max_terms=4, max_deg=4))
def test_reynolds_idempotent_and_invariant(f):
    from coxalg.coxring import load_case

    H = load_case("s3").commutator
    r = reynolds(f, H)
    assert reynolds(r, H) == r
    assert all(act(h, r) == r for h in H.generators)


@given(polys(S3_RING, max_terms=3, max_deg=3), polys(S3_RING, max_terms=3, max_deg=3))
def test_reynolds_linear_and_module_map(f, g):
    from coxalg.coxring import load_case

    H = load_case("s3").commutator
    assert reynolds(f + g, H) == reynolds(f, H) + reynolds(g, H)
    inv = reynolds(g, H)
    assert reynolds(inv * f, H) == inv * reynolds(f, H)


@given(st.sampled_from(["s3", "d8-wreath"]), st.integers(1, 4))
def test_molien_counts_reynolds_images(name, d):
    # two routes to dim C[V]^H_d: the Molien expansion and the rank of Reynolds images
    from coxalg.coxring import load_case
    from coxalg.linalg import SparseEchelon

    case = load_case(name)
    E = SparseEchelon()
    for _, r in invariant_space(case.commutator, case.ring, d):
        E.add(dict(r.terms))
    assert len(E) == molien_series(case.commutator, d)[d]
