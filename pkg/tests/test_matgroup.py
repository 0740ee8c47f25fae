import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxalg.linalg import FieldMatrix
from coxalg.matgroup import (
    BoundExceeded,
    NotAnEigenvector,
    abelianization,
    act,
    character_of,
    commutator_subgroup,
    group_closure,
    is_symplectic_reflection,
    reflections_in_commutator,
    symplectic_reflections,
)
from coxalg.poly import PolyRing
from strategies import Q12, polys


def _neg(g):
    return FieldMatrix([[-x for x in r] for r in g.tolist()], g.field)


def test_s3_facts(s3):
    G, H = s3.group, s3.commutator
    assert len(G) == 6 and len(H) == 3
    assert all(h ** 3 == G.identity() for h in H)
    assert abelianization(G, H).invariants == (2,)
    (c,) = symplectic_reflections(G)
    assert len(c.elements) == 3 and c.order == 2


def test_d8_facts(d8):
    G, H = d8.group, d8.commutator
    assert len(G) == 8
    minus = _neg(G.identity())
    assert set(H.elements) == {G.identity(), minus}
    assert tuple(abelianization(G, H).invariants) == (2, 2)
    T0, T2 = d8.named["T0"], d8.named["T2"]
    classes = {frozenset(c.elements) for c in symplectic_reflections(G)}
    assert classes == {frozenset({T0, _neg(T0)}), frozenset({T2, _neg(T2)})}


def test_g4_facts(g4):
    G, H = g4.group, g4.commutator
    assert len(G) == 24 and len(H) == 8
    # quaternion: non-abelian of order 8 with a single involution
    assert any(a * b != b * a for a in H for b in H)
    involutions = [h for h in H if h != G.identity() and h * h == G.identity()]
    assert involutions == [_neg(G.identity())]
    assert abelianization(G, H).invariants == (3,)
    classes = symplectic_reflections(G)
    assert sorted(len(c.elements) for c in classes) == [4, 4]


def test_no_reflections_in_commutators(s3, d8, g4):
    for case in (s3, d8, g4):
        assert not reflections_in_commutator(case.group, case.commutator)


def test_reflection_detection():
    assert is_symplectic_reflection(FieldMatrix.diagonal([-1, -1, 1, 1], Q12))
    assert not is_symplectic_reflection(FieldMatrix.diagonal([-1, 1, 1, 1], Q12))
    assert not is_symplectic_reflection(FieldMatrix.identity(4, Q12))


def test_closure_bound():
    with pytest.raises(BoundExceeded):
        group_closure([FieldMatrix([[1, 1], [0, 1]], Q12)], bound=20)


def test_character_and_conventions():
    R = PolyRing("x y", Q12)
    x, y = R.gens()
    i = Q12.root_of_unity(4)
    g = FieldMatrix.diagonal([i, 1], Q12)
    assert character_of(g, x, "pullback") == i
    assert character_of(g, x, "inverse") == -i
    with pytest.raises(NotAnEigenvector):
        character_of(g, x + y)


@given(polys(PolyRing("x1 y1 x2 y2", Q12)), st.integers(0, 5), st.integers(0, 5))
def test_action_is_compatible_with_products(f, a, b):
    from coxalg.coxring import load_case

    G = load_case("s3").group
    g, h = G.elements[a], G.elements[b]
    # pullback: f(ghx) = (h-action after g-action)
    assert act(g * h, f) == act(h, act(g, f))
    assert act(g * h, f, "inverse") == act(g, act(h, f, "inverse"), "inverse")
