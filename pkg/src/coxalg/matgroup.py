"""Finite matrix groups over Q(zeta_N)."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cyclotomic import CycNum
from .linalg import FieldMatrix, IntMatrix, smith_normal_form
from .poly import Poly, linear_substitute

PULLBACK = "pullback"  # (g.f)(x) = f(g x)
INVERSE = "inverse"  # (g.f)(x) = f(g^-1 x)
DEFAULT_CONVENTION = PULLBACK


class BoundExceeded(RuntimeError):
    pass


class NotAnEigenvector(ValueError):
    pass


class FiniteMatrixGroup:
    """A finite group given by its closed element list."""

    def __init__(self, generators, elements):
        self.generators = list(generators)
        self.elements = list(elements)
        self.index = {g: k for k, g in enumerate(self.elements)}
        self.dim = self.elements[0].rows
        self.field = self.elements[0].field
        self._orders: dict = {}
        self._classes = None
        self._inverse: dict = {}

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g):
        return g in self.index

    def __iter__(self):
        return iter(self.elements)

    def identity(self) -> FieldMatrix:
        return FieldMatrix.identity(self.dim, self.field)

    def inverse(self, g: FieldMatrix) -> FieldMatrix:
        inv = self._inverse.get(g)
        if inv is None:
            k = self.element_order(g)
            inv = g ** (k - 1) if k > 1 else g
            self._inverse[g] = inv
        return inv

    def element_order(self, g: FieldMatrix) -> int:
        k = self._orders.get(g)
        if k is None:
            k, p = 1, g
            while not p.is_identity():
                p = p * g
                k += 1
                if k > len(self.elements):
                    raise ValueError("element is not in this group")
            self._orders[g] = k
        return k

    def exponent(self) -> int:
        from math import lcm

        out = 1
        for g in self.elements:
            out = lcm(out, self.element_order(g))
        return out

    def conjugacy_classes(self) -> list:
        if self._classes is None:
            seen = set()
            classes = []
            for h in self.elements:
                if h in seen:
                    continue
                cls = []
                for g in self.elements:
                    c = g * h * self.inverse(g)
                    if c not in seen:
                        seen.add(c)
                        cls.append(c)
                classes.append(cls)
            self._classes = classes
        return self._classes

    def class_of(self, g) -> list:
        for cls in self.conjugacy_classes():
            if g in cls:
                return cls
        raise ValueError("element not in group")

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.generators for b in self.generators)

    def is_normal(self, H: "FiniteMatrixGroup") -> bool:
        return all(g * h * self.inverse(g) in H for g in self.generators for h in H.generators)


def group_closure(gens, bound: int = 512) -> FiniteMatrixGroup:
    """Breadth-first closure of the generators under multiplication."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    for g in gens:
        if not g.det():
            raise ValueError("generator is not invertible")
    ident = FieldMatrix.identity(gens[0].rows, gens[0].field)
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = a * s
                if b not in seen:
                    seen.add(b)
                    elements.append(b)
                    nxt.append(b)
                    if len(elements) > bound:
                        raise BoundExceeded(f"group has more than {bound} elements (or is infinite)")
        frontier = nxt
    return FiniteMatrixGroup(gens, elements)


def subgroup(G: FiniteMatrixGroup, gens) -> FiniteMatrixGroup:
    gens = [g for g in gens if not g.is_identity()] or [G.identity()]
    return group_closure(gens, bound=len(G))


def commutator_subgroup(G: FiniteMatrixGroup) -> FiniteMatrixGroup:
    comms = []
    seen = set()
    for g in G.elements:
        gi = G.inverse(g)
        for h in G.elements:
            c = g * h * gi * G.inverse(h)
            if c not in seen:
                seen.add(c)
                comms.append(c)
    return subgroup(G, comms)


@dataclass
class Abelianization:
    """G/[G,G] presented as Z_{d_1} x ... x Z_{d_k}."""

    invariants: tuple
    commutator: FiniteMatrixGroup
    coset_of: dict  # element -> coset index
    coords_of_coset: list  # coset index -> tuple in prod Z_{d_i}
    representatives: list  # one element per coset

    def order(self) -> int:
        out = 1
        for d in self.invariants:
            out *= d
        return out

    def project(self, g) -> tuple:
        return self.coords_of_coset[self.coset_of[g]]

    def generators(self) -> list:
        """For each cyclic factor, an element of G mapping to its unit vector."""
        out = []
        for k in range(len(self.invariants)):
            want = tuple(int(j == k) for j in range(len(self.invariants)))
            out.append(self.representatives[self.coords_of_coset.index(want)])
        return out


def abelianization(G: FiniteMatrixGroup, H: FiniteMatrixGroup | None = None) -> Abelianization:
    H = H or commutator_subgroup(G)
    hset = set(H.elements)
    coset_of: dict = {}
    reps = []
    for g in G.elements:
        if g in coset_of:
            continue
        k = len(reps)
        reps.append(g)
        for h in H.elements:
            coset_of[g * h] = k
    ncos = len(reps)
    gens = G.generators
    # exponent box: order of each generator in the quotient
    qorders = []
    for s in gens:
        k, p = 1, s
        while p not in hset:
            p = p * s
            k += 1
        qorders.append(k)
    where: dict = {}
    relations = [[qorders[i] if j == i else 0 for j in range(len(gens))] for i in range(len(gens))]
    powers = []
    for s, k in zip(gens, qorders):
        pw = [G.identity()]
        for _ in range(k - 1):
            pw.append(pw[-1] * s)
        powers.append(pw)
    for v in product(*(range(k) for k in qorders)):
        m = G.identity()
        for pw, e in zip(powers, v):
            if e:
                m = m * pw[e]
        c = coset_of[m]
        if c in where:
            u = where[c]
            relations.append([a - b for a, b in zip(v, u)])
        else:
            where[c] = v
        if len(where) == ncos and len(relations) > 4 * len(gens) + 8:
            break
    _, D, V = smith_normal_form(IntMatrix(relations))
    diag = [D[i, i] for i in range(min(D.rows, D.cols))]
    keep = [j for j, d in enumerate(diag) if d != 1]
    invariants = tuple(diag[j] for j in keep)
    coords = []
    for c in range(ncos):
        v = where[c]
        w = [sum(v[i] * V[i, j] for i in range(len(v))) for j in range(V.cols)]
        coords.append(tuple(w[j] % diag[j] for j in keep))
    if 0 in invariants:
        raise AssertionError("quotient of a finite group must be finite")
    return Abelianization(invariants, H, coset_of, coords, reps)


def fixed_space_dim(g: FieldMatrix) -> int:
    n = g.rows
    return len((g - FieldMatrix.identity(n, g.field)).nullspace())


@dataclass
class ReflectionClass:
    representative: FieldMatrix
    order: int
    elements: list


def symplectic_reflections(G: FiniteMatrixGroup, representatives=None) -> list:
    """Conjugacy classes of elements fixing a codimension-2 subspace.

    ``representatives`` may pin the chosen element of a class.
    """
    out = []
    pinned = list(representatives or [])
    for cls in G.conjugacy_classes():
        g = cls[0]
        if g.is_identity() or fixed_space_dim(g) != G.dim - 2:
            continue
        rep = next((p for p in pinned if p in cls), g)
        out.append(ReflectionClass(rep, G.element_order(rep), list(cls)))
    if pinned:
        order = {id(c): next((k for k, p in enumerate(pinned) if p in c.elements), len(pinned)) for c in out}
        out.sort(key=lambda c: order[id(c)])
    return out


def is_symplectic_reflection(g: FieldMatrix) -> bool:
    return not g.is_identity() and fixed_space_dim(g) == g.rows - 2


def reflections_in_commutator(G: FiniteMatrixGroup, H: FiniteMatrixGroup | None = None) -> bool:
    H = H or commutator_subgroup(G)
    return any(is_symplectic_reflection(h) for h in H.elements)


def act(g: FieldMatrix, f: Poly, convention: str = DEFAULT_CONVENTION) -> Poly:
    if convention == PULLBACK:
        return linear_substitute(f, g)
    if convention == INVERSE:
        return linear_substitute(f, g.inverse())
    raise ValueError(f"unknown action convention {convention!r}")


def character_of(g: FieldMatrix, f: Poly, convention: str = DEFAULT_CONVENTION) -> CycNum:
    """The scalar lambda with g.f = lambda f."""
    if not f:
        raise NotAnEigenvector("zero polynomial")
    gf = act(g, f, convention)
    e, c = next(iter(f.terms.items()))
    lam = gf.coeff(e) / c
    if gf != f.scale(lam):
        raise NotAnEigenvector(f"{f} is not an eigenvector")
    return lam
