"""Invariant theory of finite matrix groups: Reynolds operator, Molien series,
graded generators and their splitting into eigenvectors."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .cyclotomic import CycNum
from .linalg import FieldMatrix, SparseEchelon
from .matgroup import DEFAULT_CONVENTION, INVERSE, PULLBACK, FiniteMatrixGroup, character_of
from .poly import Poly, PolyRing


class NonStableSpan(ValueError):
    pass


class LinearAction:
    """Cached substitution x -> g x (or g^-1 x) for a fixed ring."""

    def __init__(self, ring: PolyRing, convention: str = DEFAULT_CONVENTION):
        if convention not in (PULLBACK, INVERSE):
            raise ValueError(f"unknown action convention {convention!r}")
        self.ring = ring
        self.convention = convention
        self._images: dict = {}

    def images(self, g: FieldMatrix) -> list:
        im = self._images.get(g)
        if im is None:
            m = g if self.convention == PULLBACK else g.inverse()
            n = self.ring.n
            im = []
            for i in range(n):
                t = {}
                for j in range(n):
                    if m[i, j]:
                        e = [0] * n
                        e[j] = 1
                        t[tuple(e)] = m[i, j]
                im.append(Poly(self.ring, t))
            self._images[g] = im
        return im

    def __call__(self, g: FieldMatrix, f: Poly) -> Poly:
        return f.compose(self.images(g), self.ring)


def reynolds(f: Poly, H: FiniteMatrixGroup, convention: str = DEFAULT_CONVENTION, action=None) -> Poly:
    """Average of h.f over h in H."""
    action = action or LinearAction(f.ring, convention)
    total = f.ring.zero()
    for h in H.elements:
        total = total + action(h, f)
    return total.scale(f.ring.field(1) / len(H))


def _char_poly_1_minus_t(h: FieldMatrix) -> list:
    """Coefficients of det(I - t h) in t, by interpolation at t = 0..n."""
    n = h.rows
    f = h.field
    ident = FieldMatrix.identity(n, f)
    xs = list(range(n + 1))
    ys = [(ident - h * t).det() if t else f.one for t in xs]
    coeffs = [f.zero] * (n + 1)
    for i, xi in enumerate(xs):
        # Lagrange basis polynomial for node xi
        basis = [f.one]
        denom = f.one
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [f.zero] + basis
            for k in range(len(basis) - 1):
                basis[k] = basis[k] - basis[k + 1] * xj
            denom = denom * (xi - xj)
        scale = ys[i] / denom
        for k, b in enumerate(basis):
            coeffs[k] = coeffs[k] + b * scale
    return coeffs


def molien_series(H: FiniteMatrixGroup, degree_bound: int) -> list:
    """dim C[V]^H_d for d = 0..degree_bound."""
    f = H.field
    total = [f.zero] * (degree_bound + 1)
    for cls in H.conjugacy_classes():
        p = _char_poly_1_minus_t(cls[0])
        # power series inverse of p, p[0] = 1
        inv = [f.zero] * (degree_bound + 1)
        inv[0] = f.one
        for d in range(1, degree_bound + 1):
            s = f.zero
            for k in range(1, min(d, len(p) - 1) + 1):
                if p[k]:
                    s = s - p[k] * inv[d - k]
            inv[d] = s
        w = len(cls)
        for d in range(degree_bound + 1):
            total[d] = total[d] + inv[d] * w
    out = []
    for c in total:
        c = c / len(H)
        q = c.rational()
        if q.denominator != 1 or q < 0:
            raise ArithmeticError(f"Molien coefficient {q} is not a non-negative integer")
        out.append(int(q))
    return out


def _vec(f: Poly) -> dict:
    return dict(f.terms)


def _from_vec(ring: PolyRing, v: dict) -> Poly:
    return Poly(ring, {e: c for e, c in v.items() if c})


class GradedSubalgebra:
    """Graded pieces A_d of the algebra generated by homogeneous polynomials."""

    def __init__(self, ring: PolyRing, gens):
        self.ring = ring
        self.gens = [g for g in gens if g]
        self.degs = [g.total_degree() for g in self.gens]
        self._pieces: dict = {0: [ring.one()]}
        self._spaces: dict = {}

    def piece(self, d: int) -> list:
        """Echelon basis (as polynomials) of A_d."""
        if d in self._pieces:
            return self._pieces[d]
        if d < 0:
            return []
        ech = SparseEchelon()
        for g, k in zip(self.gens, self.degs):
            if k <= 0 or k > d:
                continue
            for b in self.piece(d - k):
                ech.add(_vec(g * b))
        basis = [_from_vec(self.ring, v) for v in ech.rows.values()]
        self._pieces[d] = basis
        self._spaces[d] = ech
        return basis

    def space(self, d: int) -> SparseEchelon:
        if d not in self._spaces:
            ech = SparseEchelon()
            for b in self.piece(d):
                ech.add(_vec(b))
            self._spaces[d] = ech
        return self._spaces[d]

    def dim(self, d: int) -> int:
        return len(self.piece(d))

    def contains(self, f: Poly) -> bool:
        parts = f.homogeneous_parts()
        return all(self.space(d).contains(_vec(p)) for d, p in parts.items())


def invariant_space(H: FiniteMatrixGroup, ring: PolyRing, d: int, convention=DEFAULT_CONVENTION, action=None):
    """Reynolds images of the degree-d monomials, as (monomial, image) pairs."""
    action = action or LinearAction(ring, convention)
    out = []
    for e in ring.monomials_of_degree(d):
        r = reynolds(ring.monomial(e), H, convention, action)
        if r:
            out.append((e, r))
    return out


def invariant_generators(
    H: FiniteMatrixGroup,
    degree_bound: int | None = None,
    ring: PolyRing | None = None,
    convention: str = DEFAULT_CONVENTION,
    ambient_reps=None,
) -> list:
    """A minimal homogeneous generating list of C[V]^H up to the degree bound.

    With ``ambient_reps`` (elements normalizing H) new generators are chosen
    inside joint eigenspaces, so the result can be split into eigenvectors.
    """
    ring = ring or PolyRing([f"x{i + 1}" for i in range(H.dim)], H.field)
    degree_bound = degree_bound or len(H)
    action = LinearAction(ring, convention)
    molien = molien_series(H, degree_bound)
    gens: list = []
    for d in range(1, degree_bound + 1):
        alg = GradedSubalgebra(ring, gens)
        ech = alg.space(d)
        if len(ech) == molien[d]:
            continue
        cands = [r for _, r in invariant_space(H, ring, d, convention, action)]
        if ambient_reps:
            split = []
            for chi, proj in _eigen_projectors(ambient_reps, ring, convention, action):
                split.extend(p for p in (proj(c) for c in cands) if p)
            cands = split
        for c in cands:
            if ech.add(_vec(c)):
                gens.append(c)
            if len(ech) == molien[d]:
                break
    return gens


@dataclass
class GradedGenerator:
    poly: Poly
    character: tuple  # eigenvalue on each representative
    degree: int
    name: str = ""
    meta: dict = dc_field(default_factory=dict)


def _eigen_projectors(reps, ring, convention, action):
    """Yield (character exponents, projector) for every joint character of the reps."""
    reps = list(reps)
    f = ring.field
    orders = []
    for T in reps:
        k, p = 1, T
        while not p.is_identity():
            p = p * T
            k += 1
        orders.append(k)
    powers = [[T**j for j in range(r)] for T, r in zip(reps, orders)]

    def make(ks):
        def proj(p):
            for T_pows, r, k in zip(powers, orders, ks):
                acc = ring.zero()
                for j, Tj in enumerate(T_pows):
                    acc = acc + action(Tj, p).scale(f.root_of_unity(r, -k * j))
                p = acc.scale(f(1) / r)
            return p

        return proj

    for ks in product(*(range(r) for r in orders)):
        yield tuple(f.root_of_unity(r, k) for r, k in zip(orders, ks)), make(ks)


def split_eigenvectors(gens, reps, convention: str = DEFAULT_CONVENTION, names=None) -> list:
    """Re-basis each graded piece of span(gens) into joint eigenvectors of ``reps``."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    action = LinearAction(ring, convention)
    by_deg: dict = {}
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"{g} is not homogeneous")
        by_deg.setdefault(g.total_degree(), []).append(g)
    out = []
    for d, polys in sorted(by_deg.items()):
        span = SparseEchelon()
        for p in polys:
            span.add(_vec(p))
        total = 0
        for chi, proj in _eigen_projectors(reps, ring, convention, action):
            ech = SparseEchelon()
            for p in polys:
                q = proj(p)
                if q:
                    if not span.contains(_vec(q)):
                        raise NonStableSpan(f"degree {d} span is not stable under the representatives")
                    ech.add(_vec(q))
            for v in ech.rows.values():
                out.append(GradedGenerator(_from_vec(ring, v), chi, d))
            total += len(ech)
        if total != len(span):
            raise NonStableSpan(f"degree {d}: eigenspaces do not fill the span")
    return out


@dataclass
class TableReport:
    status: str
    failures: list
    dims: dict
    molien: list

    @property
    def ok(self) -> bool:
        return self.status == "PASS"


def verify_generating_table(
    table,
    H: FiniteMatrixGroup,
    bound: int,
    reps=(),
    convention: str = DEFAULT_CONVENTION,
) -> TableReport:
    """Check invariance, stated characters, generation and Molien agreement up to ``bound``."""
    failures = []
    if not table:
        return TableReport("FAIL", [{"kind": "empty-table"}], {}, [])
    ring = table[0].poly.ring
    action = LinearAction(ring, convention)
    for k, g in enumerate(table):
        label = g.name or f"entry {k + 1}"
        for h in H.generators:
            if action(h, g.poly) != g.poly:
                failures.append({"kind": "not-invariant", "entry": label})
                break
        for T, stated in zip(reps, g.character):
            try:
                lam = character_of(T, g.poly, convention)
            except ValueError:
                failures.append({"kind": "not-eigenvector", "entry": label})
                continue
            if lam != stated:
                failures.append({"kind": "wrong-character", "entry": label, "stated": str(stated), "found": str(lam)})
    molien = molien_series(H, bound)
    alg = GradedSubalgebra(ring, [g.poly for g in table])
    dims = {}
    for d in range(bound + 1):
        space = alg.space(d)
        dims[d] = len(space)
        if d == 0:
            continue
        witness = None
        for e, r in invariant_space(H, ring, d, convention, action):
            if not space.contains(_vec(r)):
                witness = e
                break
        if witness is not None:
            mono = ring.monomial(witness)
            failures.append({"kind": "not-generated", "degree": d, "witness": str(mono)})
        if dims[d] != molien[d]:
            failures.append({"kind": "dimension", "degree": d, "subalgebra": dims[d], "molien": molien[d]})
    return TableReport("PASS" if not failures else "FAIL", failures, dims, molien)
