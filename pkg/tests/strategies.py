"""Hypothesis strategies for small exact objects."""
from fractions import Fraction

from hypothesis import strategies as st

from coxalg.cyclotomic import field
from coxalg.poly import Poly, PolyRing

Q12 = field(12)

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def cycnums(draw, f=Q12, nonzero=False):
    c = draw(st.lists(small_q, min_size=f.degree, max_size=f.degree))
    x = f.from_coeffs(c)
    if nonzero and not x:
        x = f.one
    return x


def rational_cycnums(f=Q12):
    return small_q.map(lambda q: f(q))


@st.composite
def polys(draw, ring: PolyRing, max_terms=4, max_deg=3, coeffs=None, nonzero=False):
    coeffs = coeffs if coeffs is not None else st.integers(-3, 3).map(lambda k: ring.field(k))
    n = draw(st.integers(0 if not nonzero else 1, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.lists(st.integers(0, max_deg), min_size=ring.n, max_size=ring.n)))
        if sum(e) > max_deg:
            continue
        c = draw(coeffs)
        if c:
            terms[e] = terms.get(e, ring.field.zero) + c
    terms = {e: c for e, c in terms.items() if c}
    if nonzero and not terms:
        terms = {tuple(draw(st.lists(st.integers(0, 1), min_size=ring.n, max_size=ring.n))): ring.field.one}
    return Poly(ring, terms)


def monomials(ring: PolyRing, max_deg=3):
    return st.lists(st.integers(0, max_deg), min_size=ring.n, max_size=ring.n).map(
        lambda e: ring.monomial(tuple(e))
    )


def as_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))
