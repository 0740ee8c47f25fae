"""Sparse multivariate polynomials over a cyclotomic field."""
from __future__ import annotations

from itertools import combinations_with_replacement
from operator import add

from .cyclotomic import CycNum, CyclotomicField, field as cyc_field

Monomial = tuple  # exponent vector, one entry per ring variable


class PolyRing:
    """Polynomial ring over Q(zeta_N) in named variables."""

    __slots__ = ("names", "field", "n", "_index", "_hash")

    def __init__(self, names, field: CyclotomicField | int | None = None):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if field is None:
            field = cyc_field()
        elif isinstance(field, int):
            field = cyc_field(field)
        self.field = field
        self.n = len(self.names)
        self._index = {v: i for i, v in enumerate(self.names)}
        self._hash = hash((self.names, field.order))

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names and self.field is other.field

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)}; N={self.field.order})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in {self!r}") from None

    @property
    def zero_exp(self) -> Monomial:
        return (0,) * self.n

    def var(self, name) -> "Poly":
        i = name if isinstance(name, int) else self.index(name)
        e = [0] * self.n
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.n)]

    def __call__(self, value) -> "Poly":
        if isinstance(value, Poly):
            if value.ring == self:
                return value
            return value.to_ring(self)
        if isinstance(value, str):
            from .parsing import parse_poly

            return parse_poly(value, self)
        c = self.field(value)
        return Poly(self, {self.zero_exp: c} if c else {})

    def monomial(self, exp, coeff=1) -> "Poly":
        c = self.field(coeff)
        return Poly(self, {tuple(exp): c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {self.zero_exp: self.field.one})

    def extend(self, extra_names) -> "PolyRing":
        return PolyRing(self.names + tuple(extra_names), self.field)

    def fresh_name(self, base: str) -> str:
        name, k = base, 0
        while name in self._index:
            k += 1
            name = f"{base}{k}"
        return name

    def monomials_of_degree(self, d: int) -> list:
        out = []
        for combo in combinations_with_replacement(range(self.n), d):
            e = [0] * self.n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        return out


class Poly:
    """Immutable sparse polynomial: a dict from exponent tuples to nonzero CycNum."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_exp in self.terms)

    def constant_coeff(self) -> CycNum:
        return self.terms.get(self.ring.zero_exp, self.ring.field.zero)

    def coeff(self, exp) -> CycNum:
        return self.terms.get(tuple(exp), self.ring.field.zero)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var) -> int:
        i = var if isinstance(var, int) else self.ring.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self, weights=None) -> bool:
        return len({self._wdeg(e, weights) for e in self.terms}) <= 1

    def _wdeg(self, e, weights):
        if weights is None:
            return sum(e)
        return sum(a * b for a, b in zip(e, weights))

    def homogeneous_parts(self, weights=None) -> dict:
        parts: dict = {}
        for e, c in self.terms.items():
            parts.setdefault(self._wdeg(e, weights), {})[e] = c
        return {d: Poly(self.ring, t) for d, t in sorted(parts.items())}

    def variables(self) -> list:
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return [self.ring.names[i] for i in sorted(used)]

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> list:
        """Terms in canonical display order: higher total degree first, then lex."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-a for a in t[0])))

    # -- arithmetic ----------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        try:
            return self.ring(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if len(o.terms) > len(self.terms):
            big, small = o.terms, self.terms
        else:
            big, small = self.terms, o.terms
        t = dict(big)
        for e, c in small.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s:
                    t[e] = s
                else:
                    del t[e]
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "Poly":
        c = self.ring.field(c)
        if not c:
            return Poly(self.ring, {})
        if c.is_one():
            return self
        return Poly(self.ring, {e: a * c for e, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            t: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(map(add, e1, e2))
                    s = t.get(e)
                    t[e] = c1 * c2 if s is None else s + c1 * c2
            return Poly(self.ring, {e: c for e, c in t.items() if c})
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant():
                raise TypeError("polynomial division is only defined by constants")
            other = other.constant_coeff()
        return self.scale(self.ring.field(other).inverse())

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def mul_monomial(self, exp, coeff=None) -> "Poly":
        if coeff is None:
            return Poly(self.ring, {tuple(map(add, e, exp)): c for e, c in self.terms.items()})
        return Poly(self.ring, {tuple(map(add, e, exp)): c * coeff for e, c in self.terms.items()})

    def monic(self, key=None) -> "Poly":
        """Scale so the leading coefficient (canonical order, or ``key``) is 1."""
        if not self.terms:
            return self
        if key is None:
            lead = self.sorted_terms()[0][1]
        else:
            lead = self.terms[max(self.terms, key=key)]
        return self.scale(lead.inverse())

    def diff(self, var) -> "Poly":
        i = var if isinstance(var, int) else self.ring.index(var)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                t[tuple(ne)] = c.scale(e[i])
        return Poly(self.ring, t)

    # -- substitution --------------------------------------------------------
    def compose(self, images, target: PolyRing | None = None) -> "Poly":
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.ring.n:
            raise ValueError("need one image per variable")
        if target is None:
            target = images[0].ring if images else self.ring
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            p = cache.get(key)
            if p is None:
                p = images[i] if k == 1 else power(i, k - 1) * images[i]
                cache[key] = p
            return p

        out: dict = {}
        for e, c in self.terms.items():
            term = None
            for i, k in enumerate(e):
                if k:
                    p = power(i, k)
                    term = p if term is None else term * p
            if term is None:
                term = target.one()
            for te, tc in term.terms.items():
                s = out.get(te)
                out[te] = tc * c if s is None else s + tc * c
        return Poly(target, {e: c for e, c in out.items() if c})

    def subs(self, values: dict) -> "Poly":
        """Substitute polynomials or scalars for some variables (by name)."""
        images = self.ring.gens()
        for name, v in values.items():
            images[self.ring.index(name)] = self.ring(v)
        return self.compose(images, self.ring)

    def evaluate(self, point) -> CycNum:
        f = self.ring.field
        pt = [f(v) for v in point]
        total = f.zero
        for e, c in self.terms.items():
            term = c
            for x, k in zip(pt, e):
                if k:
                    term = term * x**k
            total = total + term
        return total

    def to_ring(self, ring: PolyRing) -> "Poly":
        """Re-embed into a ring whose variables include all variables used here."""
        idx = []
        for i, name in enumerate(self.ring.names):
            idx.append(ring._index.get(name, -1))
        t = {}
        for e, c in self.terms.items():
            ne = [0] * ring.n
            for i, k in enumerate(e):
                if k:
                    j = idx[i]
                    if j < 0:
                        raise ValueError(f"variable {self.ring.names[i]} missing in target ring")
                    ne[j] = k
            t[tuple(ne)] = c
        return Poly(ring, t)

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, CycNum)):
            return self == self.ring(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)


def linear_substitute(f: Poly, P) -> Poly:
    """Replace the variable vector x by P*x, i.e. x_i -> sum_j P[i][j] x_j."""
    from .linalg import FieldMatrix, SingularMatrix

    if not isinstance(P, FieldMatrix):
        P = FieldMatrix(P, f.ring.field)
    n = f.ring.n
    if P.rows != n or P.cols != n:
        raise ValueError(f"substitution matrix must be {n}x{n}")
    if P.det() == 0:
        raise SingularMatrix("substitution matrix is singular")
    one = f.ring.field.one
    images = []
    for i in range(n):
        t = {}
        for j in range(n):
            a = P[i, j]
            if a:
                e = [0] * n
                e[j] = 1
                t[tuple(e)] = a * one
        images.append(Poly(f.ring, t))
    return f.compose(images, f.ring)
