"""Monomial valuations of finite-order operators and the valuation/intersection dictionary."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .linalg import FieldMatrix, IntMatrix, diagonalize_finite_order
from .matgroup import DEFAULT_CONVENTION, FiniteMatrixGroup, character_of, fixed_space_dim
from .poly import Poly, PolyRing


class NonIntegral(ValueError):
    pass


class CartanUnsupported(ValueError):
    pass


def _order(T: FieldMatrix) -> int:
    k, p = 1, T
    while not p.is_identity():
        p = p * T
        k += 1
        if k > 10_000:
            raise ValueError("matrix does not have finite order")
    return k


@dataclass(frozen=True)
class MonomialValuation:
    """nu(f) = min <a, alpha> over the monomials u^alpha of f written in eigencoordinates.

    Coordinates: x = P u, where the columns of P are eigenvectors of T and
    u_i transforms under T with eigenvalue zeta_r^{a_i}.
    """

    T: FieldMatrix
    r: int
    P: FieldMatrix
    a: tuple

    def images(self, ring: PolyRing) -> list:
        n = ring.n
        out = []
        for i in range(n):
            t = {}
            for j in range(n):
                if self.P[i, j]:
                    e = [0] * n
                    e[j] = 1
                    t[tuple(e)] = self.P[i, j]
            out.append(Poly(ring, t))
        return out

    def in_eigencoordinates(self, f: Poly) -> Poly:
        return f.compose(self.images(f.ring), f.ring)

    def __call__(self, f: Poly) -> int:
        return nu_eval(self, f)


def monomial_valuation(T: FieldMatrix, r: int | None = None) -> MonomialValuation:
    r = r or _order(T)
    P, a = diagonalize_finite_order(T, r)
    return MonomialValuation(T, r, P, a)


def nu_eval(nu: MonomialValuation, f: Poly) -> int:
    if not f:
        raise ValueError("valuation of the zero polynomial")
    g = nu.in_eigencoordinates(f)
    return min(sum(w * k for w, k in zip(nu.a, e)) for e in g.terms)


def eigen_log(T: FieldMatrix, f: Poly, r: int, convention: str = DEFAULT_CONVENTION) -> int:
    lam = character_of(T, f, convention)
    k = T.field.root_log(lam, r)
    if k is None:
        raise ValueError(f"eigenvalue {lam} is not an {r}-th root of unity")
    return k


def lifted_valuation(reps, gens, orders=None, convention: str = DEFAULT_CONVENTION) -> list:
    """Matrix a_ij: discrete log base zeta_{r_i} of the eigenvalue of T_i on gens[j]."""
    reps = list(reps)
    orders = list(orders) if orders else [_order(T) for T in reps]
    polys = [g.poly if hasattr(g, "poly") else g for g in gens]
    return [[eigen_log(T, p, r, convention) for p in polys] for T, r in zip(reps, orders)]


def valuation_ideal_gens(nu: MonomialValuation, ring: PolyRing, d: int) -> list:
    """Generators of {f : nu(f) >= d}: minimal eigen-monomials of weight >= d, in x-coordinates."""
    if d <= 0:
        return [ring.one()]
    Pinv = nu.P.inverse()
    n = ring.n
    forms = []
    for i in range(n):
        t = {}
        for j in range(n):
            if Pinv[i, j]:
                e = [0] * n
                e[j] = 1
                t[tuple(e)] = Pinv[i, j]
        forms.append(Poly(ring, t))
    pos = [i for i in range(n) if nu.a[i] > 0]
    out = []
    for alpha in product(*(range(-(-d // nu.a[i]) + 1) for i in pos)):
        w = sum(nu.a[i] * k for i, k in zip(pos, alpha))
        if w < d:
            continue
        if any(k and w - nu.a[i] >= d for i, k in zip(pos, alpha)):
            continue
        m = ring.one()
        for i, k in zip(pos, alpha):
            if k:
                m = m * forms[i] ** k
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# Cartan data


@dataclass
class CartanData:
    matrix: IntMatrix  # (E_i . C_j)
    orders: tuple  # r_i
    representatives: list

    def __post_init__(self):
        check_cartan(self.matrix)

    def det(self) -> int:
        return self.matrix.det()


def _a_blocks(M: IntMatrix) -> list:
    n = M.rows
    seen = set()
    blocks = []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and M[i, j] and j not in seen:
                    seen.add(j)
                    stack.append(j)
        blocks.append(sorted(comp))
    return blocks


def check_cartan(M: IntMatrix) -> list:
    """Verify M is a direct sum of A_n Cartan blocks (diagonal -2, path adjacency 1).

    Returns the block sizes.
    """
    if M.rows != M.cols:
        raise CartanUnsupported("Cartan matrix must be square")
    sizes = []
    for comp in _a_blocks(M):
        for i in comp:
            if M[i, i] != -2:
                raise CartanUnsupported("diagonal entries must be -2")
        deg = {i: 0 for i in comp}
        for i in comp:
            for j in comp:
                if i != j:
                    if M[i, j] not in (0, 1) or M[i, j] != M[j, i]:
                        raise CartanUnsupported("off-diagonal entries must be symmetric 0/1")
                    deg[i] += M[i, j]
        edges = sum(deg.values()) // 2
        if edges != len(comp) - 1 or any(v > 2 for v in deg.values()):
            raise CartanUnsupported("block is not of type A_n")
        sizes.append(len(comp))
    if M.det() == 0:
        raise CartanUnsupported("Cartan matrix is singular")
    return sizes


def assemble_cartan(G: FiniteMatrixGroup, classes) -> CartanData:
    """Build (E_i.C_j) from the pointwise stabilizers of the reflection fixed spaces.

    Each stabilizer is cyclic of order r'; its non-identity powers g^1..g^{r'-1}
    give an A_{r'-1} chain of classes. Folded chains are rejected.
    """
    m = len(classes)
    index = {}
    for k, c in enumerate(classes):
        for g in c.elements:
            index[g] = k
    M = [[0] * m for _ in range(m)]
    for k, c in enumerate(classes):
        M[k][k] = -2
    done = set()
    for c in classes:
        T = c.representative
        n = T.rows
        W = (T - FieldMatrix.identity(n, T.field)).nullspace()
        stab = [g for g in G.elements if not g.is_identity() and all(g.apply(w) == w for w in W)]
        if not stab:
            continue
        gen = max(stab, key=G.element_order)
        rr = G.element_order(gen)
        if len(stab) != rr - 1:
            raise CartanUnsupported("pointwise stabilizer is not cyclic")
        chain = []
        p = gen
        for _ in range(rr - 1):
            if p not in index or fixed_space_dim(p) != n - 2:
                raise CartanUnsupported("stabilizer element is not a listed symplectic reflection")
            chain.append(index[p])
            p = p * gen
        if len(set(chain)) != len(chain):
            raise CartanUnsupported("folded chain: distinct powers are conjugate; supply Cartan data")
        key = frozenset(chain)
        if key in done:
            continue
        done.add(key)
        for a, b in zip(chain, chain[1:]):
            M[a][b] = M[b][a] = 1
    return CartanData(IntMatrix(M), tuple(c.order for c in classes), [c.representative for c in classes])


def intersection_numbers(nu_values, cartan: CartanData) -> tuple:
    """(D.C_1, ..., D.C_m) = -(nu_1/r_1, ..., nu_m/r_m) . (E_i.C_j)."""
    nu_values = list(nu_values)
    m = cartan.matrix.rows
    if len(nu_values) != m:
        raise ValueError("one valuation per class expected")
    out = []
    for j in range(m):
        s = Fraction(0)
        for i in range(m):
            s -= Fraction(nu_values[i], cartan.orders[i]) * cartan.matrix[i, j]
        if s.denominator != 1:
            raise NonIntegral(f"intersection number {s} is not an integer")
        out.append(int(s))
    return tuple(out)
