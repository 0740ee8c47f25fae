"""Exact arithmetic in the cyclotomic field Q(z), z a primitive N-th root of unity.

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) with gmpy2
rationals as coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from gmpy2 import mpq

_ZERO = mpq(0)
_ONE = mpq(1)

DEFAULT_ORDER = 12


class CycDivisionByZero(ZeroDivisionError):
    pass


class OrderIncompatibility(ValueError):
    """Raised when a root of unity of order r is requested with r not dividing N."""


def _poly_divmod_int(num, den):
    # integer polynomials, coefficient lists low -> high, den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    dd = len(den) - 1
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for j, dj in enumerate(den):
                num[k - dd + j] -= c * dj
    return q, num[:dd] if dd else []


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, r = _poly_divmod_int(p, cyclotomic_polynomial(d))
            assert not any(r)
    return tuple(p)


class CyclotomicField:
    """The field Q(zeta_N). Use :func:`field` to get the shared instance."""

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # z^k for d <= k <= 2d-2 expressed in the power basis
        table = []
        cur = [mpq(-c) for c in self.modulus[:d]]
        for _ in range(max(d - 1, 0)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [_ZERO] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * self.modulus[j]
        self._fold = tuple(table)
        self.zero = CycNum(self, (_ZERO,) * d, True)
        self.one = CycNum(self, (_ONE,) + (_ZERO,) * (d - 1), True)
        self._powers = None

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def __reduce__(self):
        return (field, (self.order,))

    def reduce(self, raw) -> tuple:
        """Reduce an arbitrary-length coefficient vector modulo Phi_N."""
        d = self.degree
        c = [mpq(x) for x in raw]
        if len(c) < d:
            c.extend([_ZERO] * (d - len(c)))
        for k in range(len(c) - 1, d - 1, -1):
            top = c[k]
            if top:
                for j in range(d):
                    c[k - d + j] -= top * self.modulus[j]
        return tuple(c[:d])

    def __call__(self, value) -> "CycNum":
        if isinstance(value, CycNum):
            if value.f is not self:
                raise ValueError(f"element of {value.f!r} used in {self!r}")
            return value
        if isinstance(value, (int, Rational)) or type(value) is type(_ZERO):
            q = mpq(value)
            return CycNum(self, (q,) + (_ZERO,) * (self.degree - 1), True)
        if isinstance(value, str):
            from .parsing import parse_cyc

            return parse_cyc(value, self)
        raise TypeError(f"cannot convert {value!r} to a cyclotomic number")

    def from_coeffs(self, raw) -> "CycNum":
        c = self.reduce(raw)
        return CycNum(self, c, not any(c[1:]))

    def zeta_power(self, k: int) -> "CycNum":
        """z^k for any integer k."""
        if self._powers is None:
            pw = [self.one]
            z = self.from_coeffs([0, 1])
            for _ in range(self.order - 1):
                pw.append(pw[-1] * z)
            self._powers = pw
        return self._powers[k % self.order]

    def root_of_unity(self, r: int, k: int = 1) -> "CycNum":
        """zeta_r^k with the fixed choice zeta_r = z^(N/r)."""
        if r < 1 or self.order % r:
            raise OrderIncompatibility(f"order {r} does not divide cyclotomic order {self.order}")
        return self.zeta_power(k * (self.order // r))

    def root_log(self, value: "CycNum", r: int | None = None) -> int | None:
        """Return k with zeta_r^k == value (0 <= k < r), or None if there is none."""
        r = self.order if r is None else r
        if self.order % r:
            raise OrderIncompatibility(f"order {r} does not divide cyclotomic order {self.order}")
        step = self.order // r
        for k in range(r):
            if self.zeta_power(k * step) == value:
                return k
        return None


_FIELDS: dict = {}


def field(order: int = DEFAULT_ORDER) -> CyclotomicField:
    """Shared field instance for the given order."""
    f = _FIELDS.get(order)
    if f is None:
        f = _FIELDS.setdefault(order, CyclotomicField(order))
    return f


class CycNum:
    """An element of Q(zeta_N) in the power basis. Immutable."""

    __slots__ = ("f", "c", "r")

    def __init__(self, f: CyclotomicField, c: tuple, rational: bool):
        self.f = f
        self.c = c
        self.r = rational

    # -- coercion helpers --------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.f is not self.f:
                raise ValueError("mixing elements of different cyclotomic fields")
            return other
        try:
            return self.f(other)
        except TypeError:
            return None

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.r and not self.c[0]

    def __bool__(self):
        return not (self.r and not self.c[0])

    def is_rational(self) -> bool:
        return self.r

    def is_one(self) -> bool:
        return self.r and self.c[0] == 1

    def rational(self) -> Fraction:
        if not self.r:
            raise ValueError(f"{self} is not rational")
        q = self.c[0]
        return Fraction(int(q.numerator), int(q.denominator))

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.r and o.r:
            return CycNum(self.f, (self.c[0] + o.c[0],) + self.c[1:], True)
        c = tuple(a + b for a, b in zip(self.c, o.c))
        return CycNum(self.f, c, not any(c[1:]))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.f, tuple(-a for a in self.c), self.r)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.r and o.r:
            return CycNum(self.f, (self.c[0] - o.c[0],) + self.c[1:], True)
        c = tuple(a - b for a, b in zip(self.c, o.c))
        return CycNum(self.f, c, not any(c[1:]))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, q) -> "CycNum":
        """Multiply by a rational."""
        if self.r:
            return CycNum(self.f, (self.c[0] * q,) + self.c[1:], True)
        if not q:
            return self.f.zero
        return CycNum(self.f, tuple(a * q for a in self.c), False)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.r:
            a = self.c[0]
            if o.r:
                return CycNum(self.f, (a * o.c[0],) + o.c[1:], True)
            if not a:
                return self.f.zero
            return CycNum(self.f, tuple(a * b for b in o.c), False)
        if o.r:
            b = o.c[0]
            if not b:
                return self.f.zero
            return CycNum(self.f, tuple(a * b for a in self.c), False)
        d = self.f.degree
        prod = [_ZERO] * (2 * d - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        out = prod[:d]
        for k, row in enumerate(self.f._fold):
            t = prod[d + k]
            if t:
                for j in range(d):
                    if row[j]:
                        out[j] += t * row[j]
        c = tuple(out)
        return CycNum(self.f, c, not any(c[1:]))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.r:
            if not self.c[0]:
                raise CycDivisionByZero("inverse of zero")
            return CycNum(self.f, (1 / self.c[0],) + self.c[1:], True)
        # extended Euclid in Q[x] against the cyclotomic modulus
        a = _trim([mpq(x) for x in self.f.modulus])
        b = _trim(list(self.c))
        s0, s1 = [], [_ONE]  # coefficients of self
        while len(b) > 1:
            q, rem = _qdivmod(a, b)
            a, b = b, rem
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
            if not b:
                raise AssertionError("cyclotomic modulus is irreducible")
        inv = b[0]
        return self.f.from_coeffs([x / inv for x in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.f.one
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def conjugate(self) -> "CycNum":
        """Complex conjugate: z -> z^-1."""
        out = self.f.zero
        for k, a in enumerate(self.c):
            if a:
                out = out + self.f.zeta_power(-k).scale(a)
        return out

    # -- comparison / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.f is other.f and self.c == other.c
        if isinstance(other, (int, Rational)):
            return self.r and self.c[0] == other
        return NotImplemented

    def __hash__(self):
        if self.r:
            return hash(self.c[0])
        return hash((self.f.order, self.c))

    def __repr__(self):
        return f"CycNum({self})"

    def __str__(self):
        return format_cyc(self)


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO) for i in range(n)]
    return _trim(out)


def _qdivmod(a, b):
    a = list(a)
    lead = b[-1]
    q = [_ZERO] * max(len(a) - len(b) + 1, 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return _trim(q), _trim(a[: len(b) - 1])


def _fmt_q(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_cyc(x: CycNum, var: str = "z") -> str:
    """Render as a sum of rational multiples of powers of ``var``."""
    parts = []
    for k, a in enumerate(x.c):
        if not a:
            continue
        if k == 0:
            body = _fmt_q(abs(a))
        else:
            zp = var if k == 1 else f"{var}^{k}"
            body = zp if abs(a) == 1 else f"{_fmt_q(abs(a))}*{zp}"
        parts.append(("-" if a < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def cyc_normalize(raw, order: int = DEFAULT_ORDER) -> CycNum:
    """Element with the given coefficients on 1, z, z^2, ... reduced modulo Phi_N."""
    return field(order).from_coeffs(list(raw))


def cyc_inverse(a: CycNum) -> CycNum:
    return a.inverse()
