from itertools import product

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from coxalg.gitfan import (
    Cone,
    DimensionLimit,
    Fan,
    NotAnOrbitClosure,
    WeightSystem,
    hilbert_basis,
    is_semistable_point,
    isotropy_trivial,
    kernel_monoid_basis,
    monomial_minor_search,
    orbit_face,
    quotient_fan,
    semistable_supports,
    support_is_stable,
    toric_ideal,
)
from coxalg.groebner import Ideal, ideal_equal
from coxalg.poly import PolyRing
from strategies import Q12


def _sets(sups):
    return {frozenset(s) for s in sups}


def test_semistable_supports_small():
    ws = WeightSystem(["u1", "u2", "w"], [(1, 0), (0, 1), (1, 1)], (2, 1))
    assert _sets(semistable_supports(ws)) == {frozenset({"u1", "u2"}), frozenset({"u1", "w"})}
    assert is_semistable_point(ws, ["u1", "w"])
    assert not is_semistable_point(ws, ["u2", "w"])
    assert isotropy_trivial(ws, semistable_supports(ws)) == [True, True]


def test_nontrivial_isotropy():
    ws = WeightSystem(["a", "b"], [(2, 0), (0, 1)], (1, 1))
    (S,) = semistable_supports(ws)
    assert isotropy_trivial(ws, [S]) == [False]
    assert support_is_stable(ws, S)


def test_zero_linearization_rejected():
    with pytest.raises(ValueError):
        WeightSystem(["a"], [(1,)], (0,))


def test_cone_basics():
    c = Cone([(1, 0), (1, 2), (1, 1)])
    assert sorted(c.rays) == [(1, 0), (1, 2)]
    assert c.strongly_convex and c.dim == 2
    assert hilbert_basis(c) == [(1, 0), (1, 1), (1, 2)]
    assert not Cone([(1, 0), (-1, 0)]).strongly_convex
    with pytest.raises(DimensionLimit):
        Cone([(1,) * 9])


def test_toric_ideal_of_a_conic():
    I = toric_ideal([(1, 0), (1, 1), (1, 2)])
    R = I.ring
    assert ideal_equal(I, Ideal(R, [R("v1*v3 - v2^2")]))


def test_orbit_face_on_the_plane():
    c = Cone([(1, 0), (0, 1)])
    R = PolyRing("a b", Q12)
    tau = orbit_face(c, [(1, 0), (0, 1)], Ideal(R, [R("a")]))
    assert tau.rays == [(1, 0)]
    with pytest.raises(NotAnOrbitClosure):
        orbit_face(c, [(1, 0), (0, 1)], Ideal(R, [R("a - b")]))


def _fan(rays):
    n = len(rays)
    return Fan(2, [Cone([rays[k], rays[(k + 1) % n]]) for k in range(n)])


@pytest.mark.parametrize("a", [0, 1, 2, 4])
def test_hirzebruch_fans(a):
    F = _fan([(1, 0), (0, 1), (-1, a), (0, -1)])
    assert F.is_complete() and F.is_smooth()
    assert F.hirzebruch_index() == a


def test_projective_plane_and_incomplete_fans():
    P2 = _fan([(1, 0), (0, 1), (-1, -1)])
    assert P2.is_complete() and P2.is_smooth() and P2.hirzebruch_index() is None
    half = Fan(2, [Cone([(1, 0), (0, 1)]), Cone([(0, 1), (-1, 0)])])
    assert not half.is_complete()
    assert not _fan([(1, 0), (1, 2), (-1, 0), (0, -1)]).is_smooth()


def test_quotient_fan_of_the_orthant():
    # removing the origin-containing face {0} of R^3_{>=0} and projecting along (1,1,1) gives P^2
    c = Cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    F = quotient_fan(c, [Cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)])], [(1, 0, -1), (0, 1, -1)])
    assert sorted(F.rays) == [(-1, -1), (0, 1), (1, 0)]
    assert F.is_complete() and F.is_smooth()


def test_kernel_monoid_basis_by_hand():
    # a + 2b = 3c
    assert sorted(kernel_monoid_basis([(1,), (2,), (-3,)])) == [(0, 3, 2), (1, 1, 1), (3, 0, 1)]
    assert kernel_monoid_basis([(1,), (2,)]) == []


def test_monomial_minor_search_seeds_and_screen():
    R = PolyRing("x y v", Q12)
    gens = [R("x*y - v^2"), R("x^2"), R("y + v")]
    hits = monomial_minor_search(gens, R.names, 2, seeds=[((1, 2), (1, 2))])
    assert hits and hits[0].support == ("x",)
    rnd = monomial_minor_search(gens, R.names, 2, random_trials=200, rng_seed=1, max_hits=None)
    for h in rnd:
        assert len(h.monomial.terms) == 1
    assert {h.support for h in rnd} >= {("x",)}


# -- properties ------------------------------------------------------------

vec3 = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 3))
vec2 = st.tuples(st.integers(-3, 3), st.integers(1, 3))


@given(st.one_of(st.lists(vec2, min_size=1, max_size=4), st.lists(vec3, min_size=1, max_size=5)))
def test_cone_double_duality(gens):
    c = Cone(gens)
    d = c.dual()
    assert d.dual().same_as(c)
    for r in d.rays:
        assert all(sum(a * b for a, b in zip(r, g)) >= 0 for g in gens)
    for g in gens:
        assert c.contains(g)


def _points(c, box):
    n = c.rank
    return [p for p in product(range(-box, box + 1), repeat=n) if any(p) and c.contains(p)]


@given(st.one_of(st.lists(vec2, min_size=2, max_size=3), st.lists(vec3, min_size=3, max_size=4)))
def test_hilbert_basis_is_irreducible_and_generating(gens):
    c = Cone(gens)
    assume(c.dim == c.rank)
    hb = hilbert_basis(c)
    hb_set = set(hb)
    pts = _points(c, 4)
    for m in hb:
        assert c.contains(m)
        # irreducible: no splitting into two nonzero lattice points of the cone
        assert not any(c.contains(tuple(a - b for a, b in zip(m, p))) and p != m for p in pts
                       if any(a - b for a, b in zip(m, p)))
    # brute force: every irreducible point found in the box lies in the basis
    for p in pts:
        if not any(q != p and c.contains(tuple(a - b for a, b in zip(p, q))) for q in pts):
            assert p in hb_set


@given(st.lists(st.tuples(st.integers(-3, 3)), min_size=2, max_size=4))
def test_monoid_basis_against_enumeration(weights):
    B = kernel_monoid_basis(weights)
    n = len(weights)
    for a in B:
        assert sum(x * w[0] for x, w in zip(a, weights)) == 0
        assert not any(b != a and all(x >= y for x, y in zip(a, b)) for b in B)
    sols = [a for a in product(range(4), repeat=n) if any(a) and sum(x * w[0] for x, w in zip(a, weights)) == 0]
    minimal = [a for a in sols if not any(b != a and all(x >= y for x, y in zip(a, b)) for b in sols)]
    assert set(minimal) <= set(B)
