"""GIT for diagonal torus actions and small toric geometry: cones, duals,
Hilbert bases, toric ideals, orbit faces and quotient fans."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd

import numpy as np

from .groebner import Ideal, RingMap, ideal_equal, ring_map_kernel
from .linalg import IntMatrix, invariant_factors, primitive
from .poly import Poly, PolyRing


class DimensionLimit(ValueError):
    pass


class NotAnOrbitClosure(ValueError):
    pass


class ProjectionRankError(ValueError):
    pass


# ---------------------------------------------------------------------------
# exact rational linear algebra on small integer matrices


def _rref(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    piv = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        piv.append(c)
        r += 1
    return M[:r], piv


def _rank(rows) -> int:
    return len(_rref(rows)[1]) if rows else 0


def _nullspace(rows, n):
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    R, piv = _rref(rows)
    free = [c for c in range(n) if c not in piv]
    out = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -R[i][f]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append(primitive([int(x * den) for x in v]))
    return out


def _solve_unique(cols, target):
    """Coefficients of ``target`` in the independent columns, or None."""
    n = len(target)
    k = len(cols)
    rows = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    R, piv = _rref(rows)
    if k in piv:
        return None
    if len(piv) < k:
        raise ValueError("columns are dependent")
    sol = [Fraction(0)] * k
    for i, p in enumerate(piv):
        sol[p] = R[i][k]
    return sol


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# torus weights and stability


@dataclass
class WeightSystem:
    variables: list
    weights: list  # integer vector per variable
    chi: tuple

    def __post_init__(self):
        self.weights = [tuple(w) for w in self.weights]
        self.chi = tuple(self.chi)
        if not any(self.chi):
            raise ValueError("linearization must be nonzero")
        if len(self.weights) != len(self.variables):
            raise ValueError("one weight per variable")

    @property
    def rank(self) -> int:
        return len(self.chi)

    def weight(self, name):
        return self.weights[self.variables.index(name)]

    @classmethod
    def from_case(cls, case, chi, gens=None):
        """Torus weights of the embedding coordinates: t-exponents of the Cox generators."""
        from .coxring import synthesize_cox_generators

        gens = gens or synthesize_cox_generators(case)
        torus = [g for g in gens if g.base is None]
        lifted = [g for g in gens if g.base is not None]
        w = dict(zip(case.u_names, (g.t_exponents for g in torus)))
        w.update(zip(case.w_names, (g.t_exponents for g in lifted)))
        names = case.embedding_names()
        return cls(names, [w[n] for n in names], chi)


def semistable_supports(ws: WeightSystem) -> list:
    """Inclusion-minimal variable sets whose weights span a cone containing chi."""
    idx = [i for i, w in enumerate(ws.weights) if any(w)]
    out = []
    for k in range(1, ws.rank + 1):
        for S in combinations(idx, k):
            cols = [ws.weights[i] for i in S]
            if _rank(cols) < k:
                continue
            lam = _solve_unique(cols, ws.chi)
            if lam is not None and all(x > 0 for x in lam):
                out.append(frozenset(ws.variables[i] for i in S))
    return sorted(out, key=lambda s: (len(s), sorted(ws.variables.index(v) for v in s)))


def isotropy_trivial(ws: WeightSystem, supports) -> list:
    """Whether the weights of each support generate the whole character lattice."""
    out = []
    for S in supports:
        M = IntMatrix([list(ws.weight(v)) for v in sorted(S, key=ws.variables.index)])
        facs = invariant_factors(M)
        out.append(len(facs) == ws.rank and all(f == 1 for f in facs))
    return out


def support_is_stable(ws: WeightSystem, S) -> bool:
    """chi lies in the interior of the full-dimensional cone of the support weights."""
    cols = [ws.weight(v) for v in S]
    if _rank(cols) < ws.rank:
        return False
    basis = [c for c in cols]
    if len(basis) == ws.rank:
        lam = _solve_unique(basis, ws.chi)
        return lam is not None and all(x > 0 for x in lam)
    # more generators than the rank: interior iff strictly positive on every facet
    cone = Cone(cols)
    return all(_dot(u, ws.chi) > 0 for u in cone.facet_normals)


def is_semistable_point(ws: WeightSystem, nonzero, supports=None) -> bool:
    supports = supports if supports is not None else semistable_supports(ws)
    nz = set(nonzero)
    return any(S <= nz for S in supports)


# ---------------------------------------------------------------------------
# cones


class Cone:
    """Cone generated by integer vectors (stored primitive, duplicates removed)."""

    MAX_RANK = 8

    def __init__(self, generators, rank: int | None = None):
        gens = []
        for g in generators:
            p = primitive(g)
            if any(p) and p not in gens:
                gens.append(p)
        self.rank = rank if rank is not None else (len(gens[0]) if gens else 0)
        if self.rank > self.MAX_RANK:
            raise DimensionLimit(f"rank {self.rank} exceeds {self.MAX_RANK}")
        self.generators = gens

    def __repr__(self):
        return f"Cone({self.rays})"

    @cached_property
    def dim(self) -> int:
        return _rank(self.generators)

    @property
    def strongly_convex(self) -> bool:
        return not self.lineality()

    def lineality(self) -> list:
        """Basis of the largest linear subspace inside the cone."""
        if not self.generators:
            return []
        if not self._dual_gens:
            return _nullspace([], self.rank)
        return self._lineality

    @cached_property
    def _dual_gens(self) -> list:
        return _dual_generators(self.generators, self.rank)

    @cached_property
    def _lineality(self) -> list:
        return _nullspace([list(u) for u in self._dual_gens], self.rank)

    @cached_property
    def _span_equations(self) -> list:
        return _nullspace([list(g) for g in self.generators], self.rank)

    @cached_property
    def rays(self) -> list:
        """Extreme rays (for a strongly convex cone); all generators otherwise."""
        if not self.strongly_convex:
            return list(self.generators)
        normals = self.facet_normals
        out = []
        for g in self.generators:
            tight = [u for u in normals if _dot(u, g) == 0]
            if _rank(tight) == self.dim - 1 or self.dim == 1:
                out.append(g)
        return sorted(out)

    @cached_property
    def facet_normals(self) -> list:
        """Primitive inner normals u (<u, g> >= 0) of facets, within the span of the cone."""
        if self.dim == 0:
            return []
        span_eq = self._span_equations  # orthogonal complement
        out = []
        for S in combinations(self.generators, self.dim - 1):
            if self.dim > 1 and _rank(list(S)) != self.dim - 1:
                continue
            cand = _nullspace([list(s) for s in S] + [list(e) for e in span_eq], self.rank) if self.dim > 1 else None
            if self.dim == 1:
                # facet of a ray is the origin: normal is the ray direction itself
                g = self.generators[0]
                u = primitive(g)
                cand = [u]
            if len(cand) != 1:
                continue
            u = cand[0]
            vals = [_dot(u, g) for g in self.generators]
            if all(v >= 0 for v in vals):
                pass
            elif all(v <= 0 for v in vals):
                u = tuple(-x for x in u)
            else:
                continue
            if u not in out:
                out.append(u)
        return sorted(out)

    def contains(self, v) -> bool:
        if self.dim == 0:
            return not any(v)
        if any(_dot(e, v) for e in self._span_equations):
            return False
        if not self.strongly_convex:
            return all(_dot(u, v) >= 0 for u in self._dual_gens)
        return all(_dot(u, v) >= 0 for u in self.facet_normals)

    def dual(self) -> "Cone":
        return Cone(self._dual_gens, self.rank)

    def faces(self) -> list:
        """All faces as sorted tuples of ray indices (into ``self.rays``), origin included."""
        rays = self.rays
        full = tuple(range(len(rays)))
        facet_sets = {tuple(i for i, r in enumerate(rays) if _dot(u, r) == 0) for u in self.facet_normals}
        faces = {full} | facet_sets
        frontier = set(facet_sets)
        while frontier:
            nxt = set()
            for a in frontier:
                for b in facet_sets:
                    c = tuple(sorted(set(a) & set(b)))
                    if c not in faces:
                        faces.add(c)
                        nxt.add(c)
            frontier = nxt
        faces.add(())
        return sorted(faces, key=lambda f: (len(f), f))

    def face_cone(self, face) -> "Cone":
        return Cone([self.rays[i] for i in face], self.rank)

    def same_as(self, other: "Cone") -> bool:
        return self.rank == other.rank and sorted(self.rays) == sorted(other.rays)


def _dual_generators(gens, n) -> list:
    """Generators of {m : <m, g> >= 0 for all g} by enumerating tight subsystems."""
    if n > Cone.MAX_RANK:
        raise DimensionLimit(f"rank {n} exceeds {Cone.MAX_RANK}")
    A = [list(g) for g in gens]
    lin = _nullspace(A, n) if A else [tuple(int(i == j) for j in range(n)) for i in range(n)]
    out = []
    for v in lin:
        for s in (v, tuple(-x for x in v)):
            if s not in out:
                out.append(s)
    lin_rows = [list(v) for v in lin]
    rk = _rank(A) if A else 0
    for S in combinations(range(len(A)), max(rk - 1, 0)):
        rows = [A[i] for i in S] + lin_rows
        ns = _nullspace(rows, n) if rows else [tuple(int(i == j) for j in range(n)) for i in range(n)]
        if len(ns) != 1:
            continue
        u = ns[0]
        vals = [_dot(u, a) for a in A]
        if all(x >= 0 for x in vals):
            cand = u
        elif all(x <= 0 for x in vals):
            cand = tuple(-x for x in u)
        else:
            continue
        if any(cand) and cand not in out:
            out.append(cand)
    return sorted(out)


def dual_cone(c: Cone) -> Cone:
    return c.dual()


def hilbert_basis(c: Cone) -> list:
    """Minimal generators of the monoid of lattice points of a strongly convex cone."""
    if c.rank > 4:
        raise DimensionLimit("hilbert basis enumeration is limited to rank 4")
    if not c.strongly_convex:
        raise ValueError("cone is not strongly convex")
    rays = c.rays
    k = c.dim
    cands = set(rays)
    for S in combinations(rays, k):
        if _rank(list(S)) < k:
            continue
        cands.update(_parallelepiped_points(list(S)))
    cands.discard(tuple([0] * c.rank))
    G = sorted(cands)
    out = []
    for m in G:
        if not any(g != m and c.contains(tuple(a - b for a, b in zip(m, g))) for g in G):
            out.append(m)
    return sorted(out)


def _parallelepiped_points(cols) -> list:
    """Lattice points sum lambda_i v_i with 0 <= lambda_i < 1."""
    k = len(cols)
    n = len(cols[0])
    D = None
    for rows in combinations(range(n), k):
        d = abs(IntMatrix([[cols[j][i] for j in range(k)] for i in rows]).det())
        if d and (D is None or d < D):
            D = d
    # lambda_j = js_j / D; sweep the first coordinate, vectorize the rest
    C = np.array(cols, dtype=np.int64)
    rest = np.indices((D,) * (k - 1), dtype=np.int64).reshape(k - 1, -1).T
    base = rest @ C[1:] if k > 1 else np.zeros((1, n), dtype=np.int64)
    out = []
    for j0 in range(D):
        num = base + j0 * C[0]
        hit = num[(num % D == 0).all(axis=1)] // D
        out.extend(tuple(int(x) for x in row) for row in hit)
    return out


def toric_ideal(points, varnames=None, field_order: int = 12) -> Ideal:
    """Kernel of v_i -> t^{points_i} (Laurent monomials)."""
    points = [tuple(p) for p in points]
    n = len(points[0])
    names = list(varnames or [f"v{i + 1}" for i in range(len(points))])
    S = PolyRing(names, field_order)
    T = PolyRing([f"s{i + 1}" for i in range(n)], field_order)
    ext = T.extend([f"s{i + 1}_inv" for i in range(n)])
    imgs = []
    for p in points:
        e = [0] * ext.n
        for i, a in enumerate(p):
            if a > 0:
                e[i] = a
            elif a < 0:
                e[n + i] = -a
        imgs.append(ext.monomial(tuple(e)))
    K = ring_map_kernel(RingMap(S, T, imgs, invertible=T.names))
    return Ideal(S, K.gb())


def is_binomial(f: Poly) -> bool:
    return 1 <= len(f.terms) <= 2


# ---------------------------------------------------------------------------
# orbit closures of affine toric varieties


def orbit_face(c: Cone, coords, ideal: Ideal):
    """Face tau of ``c`` whose orbit closure V(tau) in Spec C[c^dual] is V(ideal).

    ``coords`` are lattice points of the dual cone matching the variables of
    ``ideal.ring`` (a generating set of the dual monoid). Returns the face as
    a Cone; raises NotAnOrbitClosure when no face fits.
    """
    ring = ideal.ring
    vanishing = {i for i in range(ring.n) if ideal.contains(ring.var(ring.names[i]))}
    if not vanishing and not ideal.gens:
        return Cone([], c.rank)
    for face in c.faces():
        fc = [c.rays[i] for i in face]
        off = {i for i, m in enumerate(coords) if any(_dot(m, r) for r in fc)}
        if off != vanishing:
            continue
        keep = [i for i in range(len(coords)) if i not in off]
        gens = [ring.var(ring.names[i]) for i in sorted(off)]
        if keep:
            sub = toric_ideal([coords[i] for i in keep], [ring.names[i] for i in keep], ring.field.order)
            gens += [g.to_ring(ring) for g in sub.gens]
        if ideal_equal(Ideal(ring, gens), ideal):
            return Cone(fc, c.rank)
    raise NotAnOrbitClosure("ideal is not the ideal of a torus orbit closure")


# ---------------------------------------------------------------------------
# fans


@dataclass
class Fan:
    rank: int
    cones: list  # Cone objects (maximal cones; faces implied)
    meta: dict = dc_field(default_factory=dict)

    @cached_property
    def rays(self) -> list:
        out = []
        for c in self.cones:
            for r in c.rays:
                if r not in out:
                    out.append(r)
        if self.rank == 2:
            out.sort(key=_angle_key)
        return out

    def is_complete(self) -> bool:
        if self.rank != 2:
            raise DimensionLimit("completeness is implemented for rank 2")
        two = [c for c in self.cones if c.dim == 2]
        if not two:
            return False
        arcs = sorted((_arc(c) for c in two), key=lambda a: _angle_key(a[0]))
        # arcs are (start ray, end ray) in counterclockwise order; they must chain around
        rays = self.rays
        if len(arcs) != len(rays):
            return False
        for k, (a, b) in enumerate(arcs):
            nxt = arcs[(k + 1) % len(arcs)]
            if b != nxt[0]:
                return False
        return True

    def is_smooth(self) -> bool:
        for c in self.cones:
            rs = c.rays
            if len(rs) != c.dim:
                return False
            if c.dim == self.rank:
                if abs(IntMatrix([list(r) for r in rs]).det()) != 1:
                    return False
            elif c.dim:
                facs = invariant_factors(IntMatrix([list(r) for r in rs]))
                if any(f != 1 for f in facs):
                    return False
        return True

    def self_intersections(self) -> list:
        """For a smooth complete 2D fan: b_i with v_{i-1} + v_{i+1} = b_i v_i."""
        rays = self.rays
        n = len(rays)
        out = []
        for i in range(n):
            s = tuple(a + b for a, b in zip(rays[i - 1], rays[(i + 1) % n]))
            v = rays[i]
            ratio = None
            for a, b in zip(s, v):
                if b:
                    ratio = Fraction(a, b)
                    break
            if ratio is None or any(Fraction(a) != ratio * b for a, b in zip(s, v)) or ratio.denominator != 1:
                raise ValueError("wall relation is not a multiple of the middle ray")
            out.append(int(ratio))
        return out

    def hirzebruch_index(self):
        """a when the fan is the fan of F_a (4 rays, smooth, complete), else None."""
        if self.rank != 2 or len(self.rays) != 4 or not self.is_complete() or not self.is_smooth():
            return None
        b = self.self_intersections()
        for k in range(2):
            if b[k] == 0 and b[k + 2] == 0 and b[k + 1] == -b[(k + 3) % 4]:
                return abs(b[k + 1])
        return None


def _angle_key(v):
    from math import atan2, pi

    a = atan2(v[1], v[0])
    return a if a >= 0 else a + 2 * pi


def _arc(c: Cone):
    r0, r1 = c.rays[0], c.rays[1]
    cross = r0[0] * r1[1] - r0[1] * r1[0]
    return (r0, r1) if cross > 0 else (r1, r0)


def quotient_fan(c: Cone, removed, projection) -> Fan:
    """Images of the faces of c containing no removed face, under an integer projection."""
    P = [list(r) for r in projection]
    if _rank(P) != len(P):
        raise ProjectionRankError("projection rows must be independent")
    q = len(P)
    removed = list(removed or [])
    keep = []
    for face in c.faces():
        rays = [c.rays[i] for i in face]
        if any(all(r in rays for r in rm.rays) and rm.rays for rm in removed):
            continue
        keep.append(rays)
    images = []
    for rays in keep:
        img = [tuple(_dot(row, r) for row in P) for r in rays]
        img = [v for v in img if any(v)]
        cone = Cone(img, q)
        if cone.dim and cone.strongly_convex:
            images.append(cone)
    maximal = []
    for cone in sorted(images, key=lambda x: -x.dim):
        if any(all(m.contains(r) for r in cone.rays) for m in maximal):
            continue
        maximal.append(cone)
    fan = Fan(q, maximal)
    return fan


# ---------------------------------------------------------------------------
# Jacobian minors


def jacobian(gens, variables) -> list:
    """Rows indexed by variables, columns by generators."""
    return [[g.diff(v) for g in gens] for v in variables]


def poly_det(M) -> Poly:
    """Determinant of a small square matrix of polynomials (Laplace with memo)."""
    return _laplace(M, M[0][0].ring)


def _laplace(M, ring) -> Poly:
    n = len(M)
    memo = {}

    def rec(row, used):
        if row == n:
            return ring.one()
        key = used
        if key in memo:
            return memo[key]
        total = ring.zero()
        k = 0  # position among unused columns, for the sign
        for j in range(n):
            if used >> j & 1:
                continue
            e = M[row][j]
            if e:
                sub = rec(row + 1, used | (1 << j))
                if sub:
                    total = total + e * sub if k % 2 == 0 else total - e * sub
            k += 1
        memo[key] = total
        return total

    return rec(0, 0)


@dataclass
class MinorHit:
    rows: tuple  # 1-based variable indices
    cols: tuple  # 1-based generator indices
    monomial: Poly
    support: tuple

    def to_dict(self):
        return {"rows": list(self.rows), "cols": list(self.cols), "minor": str(self.monomial), "support": list(self.support)}


def minor_at(J, rows, cols) -> Poly:
    return _laplace([[J[r][c] for c in cols] for r in rows], J[0][0].ring)


def monomial_minor_search(
    gens,
    variables,
    size: int,
    substitute: dict | None = None,
    seeds=(),
    allowed_support=None,
    random_trials: int = 0,
    rng_seed: int = 0,
    max_hits: int | None = 1,
) -> list:
    """Find size x size minors of the Jacobian that are single monomials.

    ``seeds`` are (rows, cols) tuples with 1-based indices tried first; a
    randomized modular screen over row/column subsets follows when
    ``random_trials`` is positive. ``allowed_support`` restricts accepted hits
    to monomials in those variables.
    """
    if not gens:
        return []
    ring = gens[0].ring
    if size > min(len(variables), len(gens)):
        raise ValueError("minor size exceeds the Jacobian shape")
    subs = {ring.var(k): ring(v) for k, v in (substitute or {}).items()}
    J = jacobian(gens, variables)
    if subs:
        images = [subs.get(ring.var(nm), ring.var(nm)) for nm in ring.names]
        J = [[e.compose(images, ring) if e else e for e in row] for row in J]
    allowed = set(allowed_support) if allowed_support is not None else None
    hits = []
    seen = set()

    def accept(rows, cols):
        key = (tuple(rows), tuple(cols))
        if key in seen:
            return False
        seen.add(key)
        m = minor_at(J, [r - 1 for r in rows], [c - 1 for c in cols])
        if len(m.terms) != 1:
            return False
        support = tuple(n for n, k in zip(ring.names, next(iter(m.terms))) if k)
        if allowed is not None and not set(support) <= allowed:
            return False
        hits.append(MinorHit(tuple(rows), tuple(cols), m, support))
        return True

    for rows, cols in seeds:
        if len(rows) == size and len(cols) == size:
            accept(rows, cols)
            if max_hits and len(hits) >= max_hits:
                return hits
    if random_trials:
        from ._kernels import screen_monomial_minors

        for rows, cols in screen_monomial_minors(J, size, random_trials, rng_seed, ring):
            accept(rows, cols)
            if max_hits and len(hits) >= max_hits:
                break
    return hits


# ---------------------------------------------------------------------------
# invariant monomials and the fiber over the origin


def kernel_monoid_basis(weights, max_steps: int = 200_000) -> list:
    """Hilbert basis of {a in N^n : sum a_i w_i = 0} (Contejean-Devie completion).

    Grows candidates p by unit vectors e_j with <A p, A e_j> < 0 and keeps the
    minimal solutions; terminates for every integer weight matrix.
    """
    W = [tuple(w) for w in weights]
    n = len(W)
    if not n:
        return []
    r = len(W[0])

    def img(a):
        return tuple(sum(a[j] * W[j][k] for j in range(n)) for k in range(r))

    def unit(j):
        return tuple(int(i == j) for i in range(n))

    basis: list = []
    frontier = [unit(j) for j in range(n)]
    steps = 0

    def dominated(a):
        return any(all(x >= y for x, y in zip(a, b)) for b in basis)

    while frontier:
        nxt = set()
        for p in frontier:
            steps += 1
            if steps > max_steps:
                raise DimensionLimit("monoid basis search exceeded its step budget")
            v = img(p)
            if not any(v):
                if not dominated(p):
                    basis.append(p)
                continue
            for j in range(n):
                if _dot(v, W[j]) < 0:
                    q = tuple(x + (i == j) for i, x in enumerate(p))
                    if not dominated(q):
                        nxt.add(q)
        frontier = sorted(nxt)
    return sorted(basis, key=lambda a: (sum(a), a))


def central_fiber_ideal(kernel: Ideal, ws: WeightSystem) -> Ideal:
    """kernel + all weight-zero monomials of positive degree (the fiber over 0 in Spec R^T)."""
    ring = kernel.ring
    idx = [ring.index(v) for v in ws.variables]
    monos = []
    for a in kernel_monoid_basis(ws.weights):
        e = [0] * ring.n
        for i, k in zip(idx, a):
            e[i] = k
        monos.append(ring.monomial(tuple(e)))
    return Ideal(ring, list(kernel.gens) + monos)


def _support_product(ring, S):
    out = ring.one()
    for v in S:
        out = out * ring.var(v)
    return out


def verify_components(fiber: Ideal, components: dict, dims: dict | None = None, ws: WeightSystem | None = None) -> dict:
    """Check rad(fiber) = intersection of the claimed component ideals.

    Items: containment of ``fiber`` in every component, radical membership of
    the generators of the intersection, Krull dimensions, irredundancy, and
    (with a weight system) which components meet the semistable locus.
    Components are taken to be prime; primality itself is not certified.
    """
    from .groebner import ideal_intersect, krull_dimension, radical_membership

    out = {}
    names = list(components)
    out["contained"] = {k: all(components[k].contains(g) for g in fiber.gens) for k in names}
    comps = [components[k] for k in names]
    inter = ideal_intersect(*comps) if len(comps) > 1 else comps[0]
    missing = [str(g) for g in inter.gb() if not radical_membership(g, fiber)]
    out["radical_covered"] = not missing
    if missing:
        out["not_in_radical"] = missing[:5]
    out["dims"] = {k: krull_dimension(components[k]) for k in names}
    if dims is not None:
        out["dims_match"] = out["dims"] == dict(dims)
    out["irredundant"] = all(
        not all(components[b].contains(g) for g in components[a].gens)
        for a in names for b in names if a != b
    )
    if ws is not None:
        supports = semistable_supports(ws)
        ring = fiber.ring
        meets = {}
        for k in names:
            hit = [S for S in supports if not components[k].contains(_support_product(ring, S))]
            meets[k] = {
                "semistable": bool(hit),
                "all_stable": all(support_is_stable(ws, S) for S in hit),
                "supports": [sorted(S, key=ws.variables.index) for S in hit],
            }
        out["stability"] = meets
    return out
