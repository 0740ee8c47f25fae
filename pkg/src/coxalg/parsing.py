"""Text formats: cyclotomic/polynomial expressions, group files, polynomial files."""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from gmpy2 import mpq

from .cyclotomic import CycNum, CyclotomicField, OrderIncompatibility, field as cyc_field, format_cyc
from .poly import Poly, PolyRing


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0, line: int | None = None):
        self.message = message
        self.text = text
        self.pos = pos
        self.line = line
        where = f"line {line}, " if line is not None else ""
        detail = f"{where}column {pos + 1}: {message}"
        if text:
            detail += f"\n  {text}\n  {' ' * pos}^"
        super().__init__(detail)


class DivisionByZeroParseError(ParseError):
    pass


class OrderParseError(ParseError):
    """An entry asks for a root of unity that is not in Q(zeta_N)."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            p = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[p]!r}", text, p)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("num", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    """Recursive descent over + - * / ^ and parentheses.

    Values are CycNum when ``ring`` is None, Poly otherwise.
    """

    def __init__(self, text: str, fld: CyclotomicField, ring: PolyRing | None, root: str, constants=None):
        self.text = text
        self.constants = constants or {}
        self.toks = _tokenize(text)
        self.i = 0
        self.field = fld
        self.ring = ring
        self.root = root

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, pos=None):
        raise ParseError(msg, self.text, self.peek()[2] if pos is None else pos)

    def const(self, c):
        return self.field(c) if self.ring is None else self.ring(c)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op, pos = self.take()[1:]
            w_pos = self.peek()[2]
            w = self.unary()
            if op == "*":
                v = v * w
            else:
                if isinstance(w, Poly):
                    if not w.is_constant():
                        raise ParseError("division by a non-constant polynomial", self.text, w_pos)
                    w = w.constant_coeff()
                if not w:
                    raise DivisionByZeroParseError("division by zero", self.text, pos)
                v = v * w.inverse()
        return v

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base_pos = self.peek()[2]
        v = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            sign = 1
            if self.peek()[:2] == ("op", "-"):
                self.take()
                sign = -1
            tok = self.take()
            if tok[0] != "num":
                self.fail("exponent must be an integer literal", tok[2])
            e = sign * tok[1]
            if e < 0:
                if isinstance(v, Poly):
                    if not v.is_constant():
                        raise ParseError("negative power of a non-constant polynomial", self.text, base_pos)
                    if not v:
                        raise DivisionByZeroParseError("division by zero", self.text, base_pos)
                    return self.ring(v.constant_coeff() ** e)
                if not v:
                    raise DivisionByZeroParseError("division by zero", self.text, base_pos)
            return v**e
        return v

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return self.const(val)
        if kind == "name":
            if self.ring is not None and val in self.ring.names:
                return self.ring.var(val)
            if val == "zeta" and self.peek()[:2] == ("op", "("):
                self.take()
                tok = self.take()
                if tok[0] != "num" or self.peek()[:2] != ("op", ")"):
                    raise ParseError("zeta(...) takes an integer order", self.text, tok[2])
                self.take()
                try:
                    z = self.field.root_of_unity(tok[1])
                except OrderIncompatibility as err:
                    raise OrderParseError(str(err), self.text, pos) from None
                return z if self.ring is None else self.ring(z)
            if val == self.root:
                z = self.field.zeta_power(1)
                return z if self.ring is None else self.ring(z)
            if val in self.constants:
                c = self.constants[val]
                return c if self.ring is None else self.ring(c)
            raise ParseError(f"unknown symbol {val!r}", self.text, pos)
        if (kind, val) == ("op", "("):
            v = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return v
        if kind == "end":
            raise ParseError("unexpected end of expression", self.text, pos)
        raise ParseError(f"unexpected token {val!r}", self.text, pos)


def parse_cyc(text: str, fld: CyclotomicField | None = None, root: str = "z", constants=None) -> CycNum:
    return _Parser(text, fld or cyc_field(), None, root, constants).parse()


def parse_poly(text: str, ring: PolyRing, root: str = "z", constants=None) -> Poly:
    """``constants`` maps extra symbol names to field elements."""
    return _Parser(text, ring.field, ring, root, constants).parse()


def _coeff_str(c: CycNum) -> tuple:
    """Return (sign, body) where body is '' for a unit coefficient."""
    if c.r:
        q = c.c[0]
        sign = "-" if q < 0 else "+"
        q = abs(q)
        if q == 1:
            return sign, ""
        return sign, (str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}")
    nz = [a for a in c.c if a]
    if len(nz) == 1:
        body = format_cyc(c)
        if body.startswith("-"):
            return "-", body[1:]
        return "+", body
    return "+", f"({format_cyc(c)})"


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    pieces = []
    for e, c in f.sorted_terms():
        mono = "*".join(
            (name if k == 1 else f"{name}^{k}") for name, k in zip(f.ring.names, e) if k
        )
        sign, body = _coeff_str(c)
        if mono and body:
            text = f"{body}*{mono}"
        else:
            text = mono or body or "1"
        pieces.append((sign, text))
    sign, text = pieces[0]
    out = ("-" if sign == "-" else "") + text
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


# ---------------------------------------------------------------------------
# group files


@dataclass
class GroupFile:
    order: int
    dim: int
    generators: list  # FieldMatrix
    names: list
    options: dict = dc_field(default_factory=dict)


_HEADER = re.compile(r"^([a-z_]+)\s*:\s*(.*)$")


def parse_group_text(text: str) -> GroupFile:
    """Parse the line-oriented group format.

    Example::

        cyclotomic_order: 12
        dim: 2
        generator T
        0, 1
        1, 0
    """
    from .linalg import FieldMatrix

    order = None
    dim = None
    options: dict = {}
    gens: list = []
    names: list = []
    cur_rows: list | None = None
    fld = None

    def finish(lineno):
        if cur_rows is not None and len(cur_rows) != dim:
            raise ParseError(f"generator {names[-1]!r} has {len(cur_rows)} rows, expected {dim}", line=lineno)

    lines = text.splitlines()
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped == "generator" or stripped.startswith("generator "):
            if order is None or dim is None:
                raise ParseError("cyclotomic_order and dim must precede generators", raw, 0, lineno)
            finish(lineno)
            names.append(stripped[len("generator"):].strip() or f"g{len(names) + 1}")
            cur_rows = []
            gens.append(cur_rows)
            continue
        m = _HEADER.match(stripped)
        if m and cur_rows is None:
            key, val = m.group(1), m.group(2).strip()
            if key == "cyclotomic_order":
                order = _int_field(val, raw, lineno)
                if order < 1:
                    raise ParseError("cyclotomic_order must be positive", raw, raw.index(val), lineno)
                fld = cyc_field(order)
            elif key == "dim":
                dim = _int_field(val, raw, lineno)
            else:
                options[key] = val
            continue
        if cur_rows is None:
            raise ParseError("matrix row outside a generator block", raw, 0, lineno)
        if len(cur_rows) == dim:
            raise ParseError(f"too many rows for generator {names[-1]!r}", raw, 0, lineno)
        row = []
        offset = 0
        for cell in line.split(","):
            start = offset + len(cell) - len(cell.lstrip())
            try:
                row.append(parse_cyc(cell.strip(), fld))
            except ParseError as err:
                raise type(err)(err.message, raw, start + err.pos, lineno) from None
            offset += len(cell) + 1
        if len(row) != dim:
            raise ParseError(f"row has {len(row)} entries, expected {dim}", raw, 0, lineno)
        cur_rows.append(row)
    if order is None or dim is None:
        raise ParseError("missing cyclotomic_order or dim header", line=1)
    finish(len(lines))
    if not gens:
        raise ParseError("no generators", line=len(lines))
    mats = [FieldMatrix(rows, fld) for rows in gens]
    return GroupFile(order, dim, mats, names, options)


def _int_field(val, raw, lineno):
    try:
        return int(val)
    except ValueError:
        raise ParseError(f"expected an integer, got {val!r}", raw, max(raw.find(val), 0), lineno) from None


def parse_group_file(path) -> GroupFile:
    return parse_group_text(Path(path).read_text())


def unparse_group(gf: GroupFile) -> str:
    out = [f"cyclotomic_order: {gf.order}", f"dim: {gf.dim}"]
    for k, v in gf.options.items():
        out.append(f"{k}: {v}")
    for name, M in zip(gf.names, gf.generators):
        out.append(f"generator {name}")
        for r in M.entries:
            out.append(", ".join(format_cyc(x) for x in r))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# polynomial files


@dataclass
class PolyFile:
    ring: PolyRing
    polys: list
    names: list


def parse_poly_text(text: str, order: int | None = None) -> PolyFile:
    """Header ``variables: x1, y1`` (optional ``cyclotomic_order: N`` and
    ``constants: a = z^5, b = 2``), then one polynomial per line, optionally
    ``name = expression``."""
    names_hdr = None
    const_src: list = []
    consts: dict = {}
    polys, labels = [], []
    ring = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m and ring is None:
            key, val = m.group(1), m.group(2)
            if key == "variables":
                names_hdr = [v for v in re.split(r"[,\s]+", val.strip()) if v]
            elif key == "cyclotomic_order":
                order = int(val)
            elif key == "constants":
                const_src.append((val, raw, lineno))
            continue
        if ring is None:
            if names_hdr is None:
                raise ParseError("missing 'variables:' header", raw, 0, lineno)
            ring = PolyRing(names_hdr, order or None)
            consts = _parse_constants(const_src, ring.field)
        label = None
        body_at = 0
        if "=" in line:
            label, body = line.split("=", 1)
            label = label.strip()
            body_at = raw.index("=") + 1
        else:
            body = line
        try:
            polys.append(parse_poly(body.strip(), ring, constants=consts))
        except ParseError as err:
            lead = len(raw[body_at:]) - len(raw[body_at:].lstrip())
            raise type(err)(err.message, raw, body_at + lead + err.pos, lineno) from None
        labels.append(label or f"p{len(polys)}")
    if ring is None:
        if names_hdr is None:
            raise ParseError("missing 'variables:' header", line=1)
        ring = PolyRing(names_hdr, order or None)
    return PolyFile(ring, polys, labels)


def _parse_constants(sources, fld) -> dict:
    out: dict = {}
    for val, raw, lineno in sources:
        for item in val.split(","):
            if not item.strip():
                continue
            if "=" not in item:
                raise ParseError(f"constant definition {item.strip()!r} needs '='", raw, raw.find(item.strip()), lineno)
            name, expr = (p.strip() for p in item.split("=", 1))
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise ParseError(f"bad constant name {name!r}", raw, raw.find(name), lineno)
            try:
                out[name] = parse_cyc(expr, fld, constants=out)
            except ParseError as err:
                raise type(err)(err.message, raw, raw.find(expr) + err.pos, lineno) from None
    return out


def unparse_polys(pf: PolyFile) -> str:
    out = [f"cyclotomic_order: {pf.ring.field.order}", "variables: " + ", ".join(pf.ring.names)]
    for label, p in zip(pf.names, pf.polys):
        out.append(f"{label} = {format_poly(p)}")
    return "\n".join(out) + "\n"


def parse_rational(text: str):
    return mpq(text)


__all__ = [
    "ParseError",
    "DivisionByZeroParseError",
    "OrderParseError",
    "OrderIncompatibility",
    "parse_cyc",
    "parse_poly",
    "format_poly",
    "GroupFile",
    "parse_group_text",
    "parse_group_file",
    "unparse_group",
    "PolyFile",
    "parse_poly_text",
    "unparse_polys",
]
