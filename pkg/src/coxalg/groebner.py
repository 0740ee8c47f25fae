"""Buchberger's algorithm over Q(zeta_N) and the elimination toolkit built on it.

Internally monomials are packed into Python ints: every variable gets a 16 bit
field (15 value bits plus a guard bit) and every graded block gets an extra
field holding its degree. Multiplication is integer addition, divisibility
and lcm use the guard bits, and ``E ^ cmask`` is an integer whose natural
order is the monomial order.
"""
from __future__ import annotations

import hashlib
import heapq
import threading
import time
from contextlib import contextmanager
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .poly import Poly, PolyRing

_W = 15
_F = 16
_WMASK = (1 << _W) - 1


class ResourceLimit(RuntimeError):
    """A configured Groebner resource bound was hit; the answer is unknown."""


class UnitIdealError(ValueError):
    pass


@dataclass
class GBLimits:
    max_pairs: int = 2_000_000
    max_degree: int | None = None
    max_seconds: float | None = None


LIMITS = GBLimits()


@contextmanager
def resource_limits(**overrides):
    """Temporarily tighten the global Groebner budget."""
    saved = {k: getattr(LIMITS, k) for k in overrides}
    for k, v in overrides.items():
        setattr(LIMITS, k, v)
    try:
        yield LIMITS
    finally:
        for k, v in saved.items():
            setattr(LIMITS, k, v)


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """A block order. Each block is (variable names, 'grevlex' | 'lex').

    Variables of the ring not mentioned go into a trailing grevlex block.
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks=()):
        self.blocks = tuple((tuple(names), kind) for names, kind in blocks)
        for _, kind in self.blocks:
            if kind not in ("grevlex", "lex"):
                raise ValueError(f"unknown block order {kind!r}")

    @classmethod
    def grevlex(cls, names=()) -> "MonomialOrder":
        return cls([(names, "grevlex")] if names else [])

    @classmethod
    def lex(cls, names) -> "MonomialOrder":
        return cls([(names, "lex")])

    @classmethod
    def elimination(cls, elim, rest=(), inner: str = "grevlex") -> "MonomialOrder":
        blocks = [(tuple(elim), inner)]
        if rest:
            blocks.append((tuple(rest), inner))
        return cls(blocks)

    @property
    def kind(self) -> str:
        if len(self.blocks) <= 1:
            return self.blocks[0][1] if self.blocks else "grevlex"
        return "block"

    def resolve(self, ring: PolyRing) -> list:
        seen = set()
        out = []
        for names, kind in self.blocks:
            idx = []
            for v in names:
                i = ring.index(v)
                if i in seen:
                    raise ValueError(f"variable {v} appears twice in the order")
                seen.add(i)
                idx.append(i)
            if idx:
                out.append((idx, kind))
        rest = [i for i in range(ring.n) if i not in seen]
        if rest:
            out.append((rest, "grevlex"))
        return out

    def canonical(self, ring: PolyRing) -> tuple:
        return tuple((tuple(ring.names[i] for i in idx), kind) for idx, kind in self.resolve(ring))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"MonomialOrder({list(self.blocks)})"


GREVLEX = MonomialOrder()


class Encoder:
    """Packing of exponent tuples for one (ring, order) pair."""

    def __init__(self, ring: PolyRing, order: MonomialOrder):
        self.ring = ring
        self.order = order
        n = ring.n
        self.shift = [0] * n
        self.blocks = []  # (var indices, degree shift or None, first field, field count)
        field_idx = 0
        cmask = 0
        varval = 0
        varguard = 0
        resolved = order.resolve(ring)
        for idx, kind in reversed(resolved):
            first = field_idx
            seq = idx if kind == "grevlex" else list(reversed(idx))
            for i in seq:
                self.shift[i] = field_idx * _F
                if kind == "grevlex":
                    cmask |= _WMASK << (field_idx * _F)
                varval |= _WMASK << (field_idx * _F)
                varguard |= 1 << (field_idx * _F + _W)
                field_idx += 1
            dshift = None
            if kind == "grevlex":
                dshift = field_idx * _F
                field_idx += 1
            self.blocks.append((seq, dshift, first, len(seq)))
        self.nfields = field_idx
        self.cmask = cmask
        self.varval = varval
        self.varguard = varguard
        self.guard = sum(1 << (k * _F + _W) for k in range(field_idx))
        self.low = sum(1 << (k * _F) for k in range(field_idx))
        self.allval = self.low * _WMASK
        self.ones = self.low
        self.top = (field_idx - 1) * _F
        self.graded = [(dshift, first, count) for _, dshift, first, count in self.blocks if dshift is not None]

    def encode(self, exps) -> int:
        E = 0
        for e, s in zip(exps, self.shift):
            if e:
                if e > _WMASK:
                    raise ResourceLimit(f"exponent {e} exceeds packed field width")
                E |= e << s
        for seq, dshift, _, _ in self.blocks:
            if dshift is not None:
                d = sum(exps[i] for i in seq)
                if d > _WMASK:
                    raise ResourceLimit(f"degree {d} exceeds packed field width")
                E |= d << dshift
        return E

    def decode(self, E: int) -> tuple:
        return tuple((E >> s) & _WMASK for s in self.shift)

    def key(self, E: int) -> int:
        return E ^ self.cmask

    def tdeg(self, E: int) -> int:
        return (((E & self.varval) * self.ones) >> self.top) & _WMASK

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        d = ((a | self.guard) - b) & self.guard
        sel = (d >> _W) * _WMASK
        L = (a & sel) | (b & ~sel & self.allval)
        for dshift, first, count in self.graded:
            block = (L >> (first * _F)) & ((1 << (count * _F)) - 1)
            s = ((block * sum(1 << (j * _F) for j in range(count))) >> ((count - 1) * _F)) & _WMASK
            L = (L & ~(_WMASK << dshift)) | (s << dshift)
        return L

    def coprime(self, a: int, b: int) -> bool:
        g = self.guard
        na = ((a | g) - self.low) & self.varguard
        nb = ((b | g) - self.low) & self.varguard
        return not (na & nb)

    def from_poly(self, f: Poly) -> dict:
        enc = self.encode
        return {enc(e): c for e, c in f.terms.items()}

    def to_poly(self, terms: dict) -> Poly:
        dec = self.decode
        return Poly(self.ring, {dec(E): c for E, c in terms.items()})


_ENCODERS: dict = {}


def encoder(ring: PolyRing, order: MonomialOrder | None) -> Encoder:
    order = order or GREVLEX
    k = (ring, order)
    enc = _ENCODERS.get(k)
    if enc is None:
        enc = _ENCODERS.setdefault(k, Encoder(ring, order))
    return enc


def leading_monomial(f: Poly, order: MonomialOrder | None = None) -> tuple:
    enc = encoder(f.ring, order)
    return max(f.terms, key=lambda e: enc.key(enc.encode(e)))


def leading_term(f: Poly, order: MonomialOrder | None = None):
    e = leading_monomial(f, order)
    return e, f.terms[e]


# ---------------------------------------------------------------------------
# Buchberger


class _Elt:
    __slots__ = ("lm", "tail", "sugar", "nterms")

    def __init__(self, lm, tail, sugar):
        self.lm = lm
        self.tail = tail  # list of (E, coeff), lead coefficient is 1
        self.sugar = sugar
        self.nterms = len(tail) + 1


def _make_monic(enc: Encoder, terms: dict, sugar: int) -> _Elt | None:
    if not terms:
        return None
    key = enc.key
    items = sorted(terms.items(), key=lambda t: key(t[0]), reverse=True)
    lm, lc = items[0]
    if lc.is_one():
        tail = items[1:]
    else:
        inv = lc.inverse()
        tail = [(E, c * inv) for E, c in items[1:]]
    return _Elt(lm, tail, sugar)


class _Reducer:
    def __init__(self, enc: Encoder):
        self.enc = enc
        self.elts: list = []

    def find(self, E):
        g = self.enc.guard
        for el in self.elts:
            if ((E | g) - el.lm) & g == g:
                return el
        return None

    def reduce(self, terms: dict, sugar: int, full: bool = True):
        """Reduce the polynomial given as {E: coeff}; returns (terms, sugar)."""
        enc = self.enc
        cm = enc.cmask
        g = enc.guard
        tdeg = enc.tdeg
        elts = self.elts
        heap = [-(E ^ cm) for E in terms]
        heapq.heapify(heap)
        out = {}
        push = heapq.heappush
        pop = heapq.heappop
        while heap:
            E = (-pop(heap)) ^ cm
            c = terms.pop(E, None)
            if c is None:
                continue
            red = None
            for el in elts:
                if ((E | g) - el.lm) & g == g:
                    red = el
                    break
            if red is None:
                out[E] = c
                if not full:
                    for E2 in list(terms):
                        out[E2] = terms.pop(E2)
                    break
                continue
            q = E - red.lm
            s2 = red.sugar + tdeg(q)
            if s2 > sugar:
                sugar = s2
            for Et, ct in red.tail:
                Et += q
                old = terms.get(Et)
                if old is None:
                    terms[Et] = -(c * ct)
                    push(heap, -(Et ^ cm))
                else:
                    s = old - c * ct
                    if s:
                        terms[Et] = s
                    else:
                        del terms[Et]
        return out, sugar


def _check_limits(npairs, start, deg=None):
    if npairs > LIMITS.max_pairs:
        raise ResourceLimit(f"pair budget of {LIMITS.max_pairs} exhausted")
    if LIMITS.max_seconds is not None and time.monotonic() - start > LIMITS.max_seconds:
        raise ResourceLimit(f"time budget of {LIMITS.max_seconds}s exhausted")
    if deg is not None and LIMITS.max_degree is not None and deg > LIMITS.max_degree:
        raise ResourceLimit(f"degree bound {LIMITS.max_degree} exceeded")


def _buchberger_packed(enc: Encoder, polys: list) -> list:
    start = time.monotonic()
    red = _Reducer(enc)
    basis: list = []  # all elements ever added
    active: list = []  # indices of non-redundant elements
    pairs: dict = {}  # (i, j) -> lcm
    heap: list = []
    key = enc.key

    def add(el: _Elt):
        h = len(basis)
        basis.append(el)
        hlm = el.lm
        # Gebauer-Moeller update
        cands = [(g, enc.lcm(hlm, basis[g].lm)) for g in active]
        keep = []
        for idx, (g, L) in enumerate(cands):
            if enc.coprime(hlm, basis[g].lm):
                keep.append((g, L, True))
                continue
            dominated = False
            for g2, L2 in cands[idx + 1 :]:
                if enc.divides(L2, L):
                    dominated = True
                    break
            if not dominated:
                for g2, L2, _ in keep:
                    if enc.divides(L2, L):
                        dominated = True
                        break
            if not dominated:
                keep.append((g, L, False))
        for pr, L in list(pairs.items()):
            i, j = pr
            if enc.divides(hlm, L) and enc.lcm(basis[i].lm, hlm) != L and enc.lcm(basis[j].lm, hlm) != L:
                del pairs[pr]
        for g, L, copr in keep:
            if copr:
                continue
            pr = (g, h)
            pairs[pr] = L
            bg = basis[g]
            sug = max(bg.sugar + enc.tdeg(L - bg.lm), el.sugar + enc.tdeg(L - hlm))
            heapq.heappush(heap, (sug, key(L), g, h))
        active[:] = [g for g in active if not enc.divides(hlm, basis[g].lm)]
        active.append(h)
        red.elts = sorted((basis[g] for g in active), key=lambda e: e.nterms)

    # seed: reduce inputs against each other as they arrive, lowest first
    seeds = []
    for t in polys:
        if t:
            sug = max(enc.tdeg(E) for E in t)
            seeds.append((max(key(E) for E in t), sug, t))
    seeds.sort(key=lambda s: (s[1], s[0]))
    for _, sug, t in seeds:
        terms, sug = red.reduce(dict(t), sug)
        el = _make_monic(enc, terms, sug)
        if el is None:
            continue
        if el.lm == 0:
            return [_Elt(0, [], 0)]
        add(el)

    npairs = 0
    while heap:
        sug, _, i, j = heapq.heappop(heap)
        if pairs.pop((i, j), None) is None:
            continue
        npairs += 1
        if npairs & 63 == 0:
            _check_limits(npairs, start, sug)
        fi, fj = basis[i], basis[j]
        L = enc.lcm(fi.lm, fj.lm)
        qi = L - fi.lm
        qj = L - fj.lm
        terms = {}
        for E, c in fi.tail:
            terms[E + qi] = c
        for E, c in fj.tail:
            E += qj
            old = terms.get(E)
            if old is None:
                terms[E] = -c
            else:
                s = old - c
                if s:
                    terms[E] = s
                else:
                    del terms[E]
        terms, sug = red.reduce(terms, sug)
        el = _make_monic(enc, terms, sug)
        if el is None:
            continue
        if el.lm == 0:
            return [_Elt(0, [], 0)]
        add(el)

    # interreduce the minimal basis
    final = [basis[g] for g in active]
    final.sort(key=lambda e: key(e.lm))
    out = []
    for idx, el in enumerate(final):
        red.elts = [e for k, e in enumerate(final) if k != idx]
        tail_terms, _ = red.reduce(dict(el.tail), el.sugar)
        tail = sorted(tail_terms.items(), key=lambda t: key(t[0]), reverse=True)
        out.append(_Elt(el.lm, tail, el.sugar))
    out.sort(key=lambda e: key(e.lm), reverse=True)
    return out


# ---------------------------------------------------------------------------
# GB cache


class _GBCache:
    """Process-wide cache of reduced bases; readers never block each other."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()
        self.disk = None  # optional object with load(key, ring) / store(key, polys)

    def get(self, k, ring):
        v = self._data.get(k)
        if v is None and self.disk is not None:
            v = self.disk.load(k, ring)
            if v is not None:
                with self._lock:
                    self._data[k] = v
        return v

    def put(self, k, value):
        with self._lock:
            self._data.setdefault(k, value)
            value = self._data[k]
        if self.disk is not None:
            self.disk.store(k, value)
        return value

    def clear(self):
        with self._lock:
            self._data.clear()


GB_CACHE = _GBCache()


def _cache_key(ring: PolyRing, gens, order: MonomialOrder) -> str:
    h = hashlib.sha256()
    h.update(repr((ring.names, ring.field.order, order.canonical(ring))).encode())
    for s in sorted(str(g) for g in gens):
        h.update(b"\n" + s.encode())
    return h.hexdigest()


def buchberger(I: "Ideal", order: MonomialOrder | None = None) -> list:
    """Reduced Groebner basis (monic, sorted by decreasing leading monomial)."""
    return I.gb(order)


def _compute_gb(ring: PolyRing, gens, order: MonomialOrder) -> list:
    enc = encoder(ring, order)
    packed = [enc.from_poly(g) for g in gens if g]
    res = _buchberger_packed(enc, packed)
    one = ring.field.one
    out = []
    for el in res:
        t = {el.lm: one}
        t.update(el.tail)
        out.append(enc.to_poly(t))
    return out


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """An ideal given by generators, with reduced Groebner bases cached per order."""

    def __init__(self, ring: PolyRing, gens=()):
        self.ring = ring
        self.gens = [ring(g) for g in gens]
        self.gens = [g for g in self.gens if g]
        self._gb: dict = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens) or '0'})"

    def __len__(self):
        return len(self.gens)

    def gb(self, order: MonomialOrder | None = None) -> list:
        order = order or GREVLEX
        res = self._gb.get(order)
        if res is not None:
            return res
        k = _cache_key(self.ring, self.gens, order)
        res = GB_CACHE.get(k, self.ring)
        if res is None:
            res = _compute_gb(self.ring, self.gens, order)
            res = GB_CACHE.put(k, res)
        with self._lock:
            self._gb.setdefault(order, res)
        return self._gb[order]

    def reduce(self, f: Poly, order: MonomialOrder | None = None) -> Poly:
        return normal_form(f, self, order)

    def contains(self, f) -> bool:
        return not normal_form(self.ring(f), self)

    __contains__ = contains

    def is_unit(self) -> bool:
        G = self.gb()
        return len(G) == 1 and G[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gens

    def __add__(self, other: "Ideal") -> "Ideal":
        _same_ring(self, other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _same_ring(self, other)
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def to_ring(self, ring: PolyRing) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring) for g in self.gens])

    def minimal_generators(self) -> list:
        """Drop generators that lie in the ideal of the others (greedy, not canonical)."""
        keep = list(self.gens)
        k = len(keep) - 1
        while k >= 0 and len(keep) > 1:
            others = Ideal(self.ring, keep[:k] + keep[k + 1 :])
            if others.contains(keep[k]):
                keep.pop(k)
            k -= 1
        return keep


def _same_ring(I, J):
    if I.ring != J.ring:
        raise ValueError(f"ring mismatch: {I.ring!r} vs {J.ring!r}")


def normal_form(f: Poly, I: Ideal, order: MonomialOrder | None = None) -> Poly:
    """Remainder of f modulo the reduced Groebner basis of I; zero iff f in I."""
    order = order or GREVLEX
    f = I.ring(f)
    G = I.gb(order)
    if not G:
        return f
    enc = encoder(I.ring, order)
    red = _Reducer(enc)
    red.elts = []
    for g in G:
        t = enc.from_poly(g)
        el = _make_monic(enc, t, 0)
        red.elts.append(el)
    terms, _ = red.reduce(enc.from_poly(f), 0)
    return enc.to_poly(terms)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    return all(J.contains(g) for g in I.gens) and all(I.contains(g) for g in J.gens)


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True iff J is a subset of I."""
    _same_ring(I, J)
    return all(I.contains(g) for g in J.gens)


def ideal_power(I: Ideal, d: int) -> Ideal:
    if d < 1:
        raise ValueError("power must be positive")
    gens = []
    for combo in combinations_with_replacement(I.gens, d):
        p = combo[0]
        for q in combo[1:]:
            p = p * q
        gens.append(p)
    return Ideal(I.ring, gens)


def eliminate(I: Ideal, names) -> Ideal:
    """I intersected with the polynomial ring in the remaining variables."""
    names = [n if isinstance(n, str) else I.ring.names[n] for n in names]
    if not names:
        return Ideal(I.ring, I.gens)
    rest = [v for v in I.ring.names if v not in names]
    order = MonomialOrder.elimination(names, rest)
    sub = PolyRing(rest, I.ring.field)
    drop = [I.ring.index(v) for v in names]
    out = []
    for g in I.gb(order):
        if all(e[i] == 0 for e in g.terms for i in drop):
            out.append(g.to_ring(sub))
    return Ideal(sub, out)


def ideal_intersect(I: Ideal, J: Ideal, *more: Ideal) -> Ideal:
    _same_ring(I, J)
    ring = I.ring
    t = ring.fresh_name("t_")
    big = ring.extend([t])
    tv = big.var(t)
    gens = [tv * g.to_ring(big) for g in I.gens] + [(1 - tv) * g.to_ring(big) for g in J.gens]
    res = eliminate(Ideal(big, gens), [t]).to_ring(ring)
    for K in more:
        res = ideal_intersect(res, K)
    return res


def ideal_quotient_saturate(I: Ideal, f: Poly) -> Ideal:
    """Saturation I : f^infinity."""
    ring = I.ring
    y = ring.fresh_name("y_")
    big = ring.extend([y])
    gens = [g.to_ring(big) for g in I.gens] + [big.var(y) * f.to_ring(big) - 1]
    return eliminate(Ideal(big, gens), [y]).to_ring(ring)


def radical_membership(f: Poly, I: Ideal) -> bool:
    """Rabinowitsch: f is in rad(I) iff 1 is in I + (1 - y f)."""
    ring = I.ring
    f = ring(f)
    if not f:
        return True
    y = ring.fresh_name("y_")
    big = ring.extend([y])
    J = Ideal(big, [g.to_ring(big) for g in I.gens] + [1 - big.var(y) * f.to_ring(big)])
    return J.is_unit()


def krull_dimension(I: Ideal) -> int:
    """Dimension of R/I from the leading-term ideal (largest independent variable set)."""
    G = I.gb()
    if any(g.is_constant() for g in G):
        raise UnitIdealError("the unit ideal has no dimension")
    n = I.ring.n
    supports = set()
    for g in G:
        e = leading_monomial(g)
        supports.add(sum(1 << i for i, a in enumerate(e) if a))
    # drop non-minimal supports
    sup = sorted(supports, key=lambda m: bin(m).count("1"))
    minimal = []
    for m in sup:
        if not any((p & m) == p for p in minimal):
            minimal.append(m)
    best = 0

    def independent(S):
        return not any((m & S) == m for m in minimal)

    def dfs(i, S, size):
        nonlocal best
        if size + (n - i) <= best:
            return
        if i == n:
            best = max(best, size)
            return
        S2 = S | (1 << i)
        if independent(S2):
            dfs(i + 1, S2, size + 1)
        dfs(i + 1, S, size)

    dfs(0, 0, 0)
    return best


# ---------------------------------------------------------------------------
# ring maps


def laurent_ring(ring: PolyRing, invertible) -> PolyRing:
    """``ring`` extended by ``v_inv`` for every invertible variable v."""
    return ring.extend([f"{v}_inv" for v in invertible])


class RingMap:
    """Homomorphism source -> target, images given per source variable.

    When ``invertible`` names target variables, images may use ``v_inv``
    (see :func:`laurent_ring`); the relation v * v_inv = 1 is imposed.
    """

    def __init__(self, source: PolyRing, target: PolyRing, images, invertible=()):
        self.source = source
        self.target = target
        self.invertible = tuple(invertible)
        self.ext = laurent_ring(target, self.invertible) if self.invertible else target
        if len(images) != source.n:
            raise ValueError("need one image per source variable")
        self.images = [self.ext(p) if not isinstance(p, Poly) else p.to_ring(self.ext) for p in images]
        clash = set(source.names) & set(self.ext.names)
        if clash:
            raise ValueError(f"source and target share variable names {sorted(clash)}")

    def __call__(self, f: Poly) -> Poly:
        """Apply the map; the result lives in the Laurent ring, reduced so no v*v_inv survives."""
        return self.simplify(self.source(f).compose(self.images, self.ext))

    def simplify(self, g: Poly) -> Poly:
        if not self.invertible:
            return g
        pairs = [(self.ext.index(v), self.ext.index(f"{v}_inv")) for v in self.invertible]
        out: dict = {}
        for e, c in g.terms.items():
            e = list(e)
            for a, b in pairs:
                m = min(e[a], e[b])
                e[a] -= m
                e[b] -= m
            e = tuple(e)
            s = out.get(e)
            out[e] = c if s is None else s + c
        return Poly(self.ext, {e: c for e, c in out.items() if c})

    def graph(self) -> tuple:
        big = PolyRing(self.ext.names + self.source.names, self.source.field)
        gens = [big.var(w) - img.to_ring(big) for w, img in zip(self.source.names, self.images)]
        for v in self.invertible:
            gens.append(big.var(v) * big.var(f"{v}_inv") - 1)
        return big, gens


def ring_map_kernel(phi: RingMap) -> Ideal:
    big, gens = phi.graph()
    K = eliminate(Ideal(big, gens), phi.ext.names)
    return K.to_ring(phi.source)


def ideal_preimage(phi: RingMap, J: Ideal) -> Ideal:
    big, gens = phi.graph()
    extra = [g.to_ring(big) for g in J.gens]
    K = eliminate(Ideal(big, gens + extra), phi.ext.names)
    return K.to_ring(phi.source)


def subalgebra_membership(f: Poly, gens, names=None) -> Poly | None:
    """Return g with g(gens) = f, or None when f is not in the generated subalgebra."""
    ring = f.ring
    if names is None:
        names = []
        for k in range(len(gens)):
            names.append(ring.fresh_name(f"w{k + 1}"))
    tags = PolyRing(names, ring.field)
    big = PolyRing(ring.names + tuple(names), ring.field)
    rel = [big.var(w) - g.to_ring(big) for w, g in zip(names, gens)]
    order = MonomialOrder.elimination(ring.names, names)
    r = normal_form(f.to_ring(big), Ideal(big, rel), order)
    xs = range(ring.n)
    if any(e[i] for e in r.terms for i in xs):
        return None
    return r.to_ring(tags)
