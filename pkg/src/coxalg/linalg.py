"""Exact linear algebra over Q(zeta_N) and over the integers."""
from __future__ import annotations

from math import gcd

from .cyclotomic import CycNum, CyclotomicField, OrderIncompatibility, field as cyc_field


class SingularMatrix(ArithmeticError):
    pass


class NotFiniteOrder(ValueError):
    pass


class FieldMatrix:
    """Dense matrix with CycNum entries. Immutable."""

    __slots__ = ("field", "rows", "cols", "entries", "_hash")

    def __init__(self, entries, field: CyclotomicField | None = None):
        entries = [list(r) for r in entries]
        if field is None:
            field = next((x.f for r in entries for x in r if isinstance(x, CycNum)), None) or cyc_field()
        self.field = field
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(r) != self.cols for r in entries):
            raise ValueError("ragged matrix")
        self.entries = tuple(tuple(field(x) for x in r) for r in entries)
        self._hash = None

    @classmethod
    def identity(cls, n: int, field: CyclotomicField | None = None) -> "FieldMatrix":
        field = field or cyc_field()
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def diagonal(cls, diag, field: CyclotomicField | None = None) -> "FieldMatrix":
        diag = list(diag)
        n = len(diag)
        return cls([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i) -> list:
        return list(self.entries[i])

    def col(self, j) -> list:
        return [r[j] for r in self.entries]

    def tolist(self) -> list:
        return [list(r) for r in self.entries]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __eq__(self, other):
        return isinstance(other, FieldMatrix) and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.entries)
        return self._hash

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.entries)
        return f"FieldMatrix[{body}]"

    def __add__(self, other):
        return FieldMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.field)

    def __sub__(self, other):
        return FieldMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.field)

    def __neg__(self):
        return FieldMatrix([[-a for a in r] for r in self.entries], self.field)

    def __mul__(self, other):
        if isinstance(other, FieldMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
            zero = self.field.zero
            cols = list(zip(*other.entries))
            out = []
            for r in self.entries:
                row = []
                for c in cols:
                    s = zero
                    for a, b in zip(r, c):
                        if a and b:
                            s = s + a * b
                    row.append(s)
                out.append(row)
            return FieldMatrix(out, self.field)
        c = self.field(other)
        return FieldMatrix([[a * c for a in r] for r in self.entries], self.field)

    def __rmul__(self, other):
        c = self.field(other)
        return FieldMatrix([[c * a for a in r] for r in self.entries], self.field)

    def apply(self, v) -> list:
        zero = self.field.zero
        out = []
        for r in self.entries:
            s = zero
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def __pow__(self, e: int):
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        out = FieldMatrix.identity(self.rows, self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(list(zip(*self.entries)), self.field)

    def is_identity(self) -> bool:
        return all((x.is_one() if i == j else not x) for i, r in enumerate(self.entries) for j, x in enumerate(r))

    def det(self) -> CycNum:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        a = self.tolist()
        n = self.rows
        d = self.field.one
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k]), None)
            if p is None:
                return self.field.zero
            if p != k:
                a[k], a[p] = a[p], a[k]
                d = -d
            piv = a[k][k]
            d = d * piv
            inv = piv.inverse()
            for i in range(k + 1, n):
                if a[i][k]:
                    m = a[i][k] * inv
                    a[i] = [x - m * y if y else x for x, y in zip(a[i], a[k])]
        return d

    def rref(self):
        """Reduced row echelon form and pivot columns."""
        rows, piv = rref(self.tolist(), self.field)
        return FieldMatrix(rows, self.field) if rows else FieldMatrix([[0] * self.cols], self.field), piv

    def rank(self) -> int:
        return len(rref(self.tolist(), self.field)[1])

    def nullspace(self) -> list:
        """Basis of {v : M v = 0}, one vector per free column (that coordinate 1)."""
        return nullspace(self.tolist(), self.cols, self.field)

    def inverse(self) -> "FieldMatrix":
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = [list(r) + [self.field.one if i == j else self.field.zero for j in range(n)] for i, r in enumerate(self.entries)]
        rows, piv = rref(aug, self.field)
        if piv[:n] != list(range(n)):
            raise SingularMatrix("matrix is singular")
        return FieldMatrix([r[n:] for r in rows], self.field)


def rref(rows, field: CyclotomicField):
    """Return (nonzero rows of the reduced echelon form, pivot columns)."""
    a = [list(r) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    piv = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv if x else x for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                m = a[i][c]
                a[i] = [x - m * y if y else x for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], piv


def nullspace(rows, ncols: int, field: CyclotomicField) -> list:
    red, piv = rref(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for r, p in zip(red, piv):
            if r[f]:
                v[p] = -r[f]
        basis.append(v)
    return basis


class SparseEchelon:
    """Incrementally maintained echelon basis of sparse vectors (dict index -> CycNum)."""

    def __init__(self, order_key=None):
        self.rows: dict = {}  # pivot -> row with row[pivot] == 1
        self.key = order_key

    def __len__(self):
        return len(self.rows)

    def _pivot(self, v):
        return min(v, key=self.key) if self.key else min(v)

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        while v:
            hit = [p for p in v if p in self.rows]
            if not hit:
                break
            for p in hit:
                c = v.get(p)
                if c is None:
                    continue
                for j, a in self.rows[p].items():
                    s = v.get(j)
                    s = -(c * a) if s is None else s - c * a
                    if s:
                        v[j] = s
                    else:
                        v.pop(j, None)
        return v

    def add(self, v: dict) -> bool:
        """Insert v; return True if it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        p = self._pivot(v)
        inv = v[p].inverse()
        v = {j: a * inv for j, a in v.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for j, a in v.items():
                    s = row.get(j)
                    s = -(c * a) if s is None else s - c * a
                    if s:
                        row[j] = s
                    else:
                        row.pop(j, None)
        self.rows[p] = v
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def diagonalize_finite_order(M: FieldMatrix, r: int):
    """Diagonalize M with M^r = id.

    Returns (P, a) with M = P * diag(zeta_r^a_1, ..., zeta_r^a_n) * P^-1.
    Exponents are sorted in decreasing order; each eigenspace basis is in
    reduced echelon form.
    """
    f = M.field
    if r < 1 or f.order % r:
        raise OrderIncompatibility(f"order {r} does not divide cyclotomic order {f.order}")
    if not (M**r).is_identity():
        raise NotFiniteOrder(f"matrix is not of order dividing {r}")
    n = M.rows
    cols = []
    exps = []
    for k in sorted(range(r), reverse=True):
        lam = f.root_of_unity(r, k)
        shifted = [[M[i, j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
        basis = nullspace(shifted, n, f)
        if basis:
            basis, _ = rref(basis, f)
            cols.extend(basis)
            exps.extend([k] * len(basis))
    if len(cols) != n:
        raise NotFiniteOrder("matrix is not diagonalizable over the field")
    P = FieldMatrix([[cols[j][i] for j in range(n)] for i in range(n)], f)
    return P, tuple(exps)


# ---------------------------------------------------------------------------
# integer matrices


class IntMatrix:
    """Dense integer matrix. Immutable."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries):
        entries = [[int(x) for x in r] for r in entries]
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(r) != self.cols for r in entries):
            raise ValueError("ragged matrix")
        self.entries = tuple(tuple(r) for r in entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self):
        return [list(r) for r in self.entries]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntMatrix({self.tolist()})"

    def __mul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            cols = list(zip(*other.entries))
            return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries])
        return IntMatrix([[a * other for a in r] for r in self.entries])

    def apply(self, v) -> tuple:
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.entries)) if self.rows else [])

    def det(self) -> int:
        """Bareiss fraction-free determinant."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        a = self.tolist()
        n = self.rows
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                p = next((i for i in range(k + 1, n) if a[i][k]), None)
                if p is None:
                    return 0
                a[k], a[p] = a[p], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def rank(self) -> int:
        _, D, _ = smith_normal_form(self)
        return sum(1 for i in range(min(D.rows, D.cols)) if D[i, i])


def smith_normal_form(A: IntMatrix):
    """Return (U, D, V) with U*A*V = D, U and V unimodular, d_1 | d_2 | ...

    Args:
        A: integer matrix, any shape.

    Returns:
        The triple (U, D, V). Diagonal entries of D are non-negative.
    """
    if not isinstance(A, IntMatrix):
        A = IntMatrix(A)
    m, n = A.rows, A.cols
    D = A.tolist()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row dst += k * row src
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for r in D:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    add_row(i, t, -q)
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    add_col(j, t, -q)
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                # divisibility condition on the remaining block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]), None)
                if bad is None:
                    break
                add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return IntMatrix(U), IntMatrix(D), IntMatrix(V)


def invariant_factors(A: IntMatrix) -> list:
    _, D, _ = smith_normal_form(A)
    return [D[i, i] for i in range(min(D.rows, D.cols)) if D[i, i]]


def integer_kernel(A: IntMatrix) -> list:
    """Lattice basis of {v in Z^n : A v = 0}."""
    if not isinstance(A, IntMatrix):
        A = IntMatrix(A)
    _, D, V = smith_normal_form(A)
    rk = sum(1 for i in range(min(D.rows, D.cols)) if D[i, i])
    return [tuple(V[i, j] for i in range(V.rows)) for j in range(rk, A.cols)]


def primitive(v) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)
