"""Problem files: a line-oriented ``key: value`` block.

::

    # comment
    kind: polynomial            # or matrix
    time: discrete              # or continuous (default)
    params: r, p
    poly: s^6 + (r + i*p)*s^5 + 3/2
    box: -3:3:-3:3              # optional SVG / oracle window
    grid: 256                   # optional SVG resolution

Matrix problems give ``A``, ``B``, ``C`` and ``K`` as nested lists,
``[[1, 0], [0, 1]]``.  A value may continue on following indented lines.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from ..arith import I, rat_from_decimal
from ..errors import ParseError, ShapeError
from ..family import (CONTINUOUS, DISCRETE, S, TIME_DOMAINS, PolyFamily,
                      charpoly, closed_loop)
from ..mpoly import MPoly

KEYS = ("kind", "time", "params", "poly", "A", "B", "C", "K", "box", "grid")
KINDS = ("polynomial", "matrix")


@dataclass(frozen=True)
class Problem:
    kind: str
    time_domain: str = CONTINUOUS
    params: tuple = ("r", "p")
    poly: MPoly = None
    A: tuple = None
    B: tuple = None
    C: tuple = None
    K: tuple = None
    box: tuple = None
    grid: int = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        has_poly = self.poly is not None
        has_mat = any(m is not None for m in (self.A, self.B, self.C, self.K))
        if has_poly == has_mat:
            raise ValueError("exactly one of a polynomial or matrix payload is required")
        if (self.kind == "polynomial") != has_poly:
            raise ValueError(f"kind {self.kind!r} does not match the payload")

    def matrix_family(self):
        return closed_loop(self.A, self.B, self.C, self.K, self.time_domain, self.params)

    def family(self):
        """The polynomial family (characteristic polynomial for matrices)."""
        if self.kind == "matrix":
            return charpoly(self.matrix_family())
        return PolyFamily(self.poly, self.time_domain, self.params)


# -- tokens -----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+\.\d*|\.\d+|\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _Source:
    """Joined value text plus a map from offsets back to file positions."""

    def __init__(self, pieces):
        self.text = ""
        self.pos = []
        for line, col, text in pieces:
            if self.text:
                self.text += " "
                self.pos.append((line, col + len(text)))
            self.text += text
            self.pos.extend((line, col + k) for k in range(len(text)))
        last = pieces[-1] if pieces else (None, 1, "")
        self.end = (last[0], last[1] + len(last[2]))

    def where(self, offset):
        if offset < len(self.pos):
            return self.pos[offset]
        return self.end


class _Lexer:
    def __init__(self, src):
        self.src = src
        self.toks = []
        text = src.text
        i = 0
        while True:
            m = _TOKEN.match(text, i)
            if not m or m.end() == i and m.group(0) == "":
                break
            start = m.start(m.lastindex)
            self.toks.append((m.lastindex, m.group(m.lastindex), start))
            i = m.end()
        self.toks.append((0, "", len(text)))
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        line, col = self.src.where(tok[2])
        return ParseError(msg, line, col)

    def expect(self, ch):
        t = self.take()
        if t[1] != ch:
            raise self.error(f"expected {ch!r}, found {t[1] or 'end of value'!r}", t)
        return t


class _ExprParser:
    """Recursive descent over ``+ - * / ^``, parentheses, ``i`` and names."""

    def __init__(self, lexer, names):
        self.lx = lexer
        self.names = tuple(names)

    def const(self, c):
        return MPoly.const(c, self.names)

    def expr(self):
        acc = self.term()
        while self.lx.peek()[1] in ("+", "-"):
            op = self.lx.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.lx.peek()[1] in ("*", "/"):
            op_tok = self.lx.take()
            tok = self.lx.peek()
            rhs = self.unary()
            if op_tok[1] == "*":
                acc = acc * rhs
                continue
            if not rhs.is_constant():
                raise self.lx.error("division is only allowed by a numeric constant", tok)
            c = rhs.constant_value()
            if not c:
                raise self.lx.error("division by zero", tok)
            acc = acc / c
        return acc

    def unary(self):
        t = self.lx.peek()
        if t[1] == "-":
            self.lx.take()
            return -self.unary()
        if t[1] == "+":
            self.lx.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.lx.peek()[1] == "^":
            self.lx.take()
            t = self.lx.take()
            if t[0] != 1 or not t[1].isdigit():
                raise self.lx.error("exponent must be a nonnegative integer", t)
            return base ** int(t[1])
        return base

    def atom(self):
        t = self.lx.take()
        kind, text = t[0], t[1]
        if kind == 1:
            return self.const(rat_from_decimal(text))
        if kind == 2:
            if text == "i":
                return self.const(I)
            if text in self.names:
                return MPoly.var(text, self.names)
            raise self.lx.error(f"unknown variable {text!r}", t)
        if text == "(":
            e = self.expr()
            self.lx.expect(")")
            return e
        raise self.lx.error(f"unexpected {text or 'end of value'!r}", t)


def _parse_expr(src, names):
    lx = _Lexer(src)
    e = _ExprParser(lx, names).expr()
    if lx.peek()[0] != 0:
        raise lx.error(f"unexpected {lx.peek()[1]!r}")
    return e


def _parse_matrix(src, names):
    lx = _Lexer(src)
    ep = _ExprParser(lx, names)
    start = lx.peek()
    lx.expect("[")
    rows = []
    while True:
        lx.expect("[")
        row = [ep.expr()]
        while lx.peek()[1] == ",":
            lx.take()
            row.append(ep.expr())
        lx.expect("]")
        rows.append(tuple(row))
        if lx.peek()[1] != ",":
            break
        lx.take()
    lx.expect("]")
    if lx.peek()[0] != 0:
        raise lx.error(f"unexpected {lx.peek()[1]!r}")
    if any(len(r) != len(rows[0]) for r in rows):
        raise lx.error("matrix rows have different lengths", start)
    return tuple(rows)


# -- file level ------------------------------------------------------------------

def _strip_comment(line):
    k = line.find("#")
    return line if k < 0 else line[:k]


def _blocks(text):
    """``{key: (line, pieces)}`` where pieces are ``(line, col, text)``."""
    out = {}
    current = None
    for n, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        if line[0].isspace():
            if current is None:
                raise ParseError("continuation line without a key", n, 1)
            body = line.lstrip()
            out[current][1].append((n, len(line) - len(body) + 1, body))
            continue
        m = re.match(r"([A-Za-z_][A-Za-z_0-9]*)\s*:", line)
        if not m:
            raise ParseError("expected 'key: value'", n, 1)
        key = m.group(1)
        if key not in KEYS:
            raise ParseError(f"unknown key {key!r}", n, 1)
        if key in out:
            raise ParseError(f"duplicate key {key!r}", n, 1)
        rest = line[m.end():]
        body = rest.lstrip()
        pieces = [(n, m.end() + len(rest) - len(body) + 1, body)] if body else []
        out[key] = (n, pieces)
        current = key
    return out


def _word(blocks, key, choices, default):
    if key not in blocks:
        return default
    n, pieces = blocks[key]
    value = " ".join(p[2] for p in pieces).strip()
    if value not in choices:
        col = pieces[0][1] if pieces else 1
        raise ParseError(f"{key} must be one of {', '.join(choices)}; got {value!r}", n, col)
    return value


def _number(text):
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        if not re.fullmatch(r"[+-]?\d+", num.strip()) or not den.strip().isdigit() \
                or int(den) == 0:
            raise ParseError(f"malformed rational {text!r}")
        return Fraction(int(num), int(den))
    return rat_from_decimal(text)


def parse_box(text, line=None, column=None):
    parts = text.strip().split(":")
    if len(parts) != 4:
        raise ParseError("box must be XMIN:XMAX:YMIN:YMAX", line, column)
    try:
        vals = tuple(_number(x) for x in parts)
    except ParseError:
        raise ParseError(f"malformed box {text!r}", line, column) from None
    if not (vals[0] < vals[1] and vals[2] < vals[3]):
        raise ParseError("box must have XMIN < XMAX and YMIN < YMAX", line, column)
    return vals


def parse_input(text):
    """Parse a problem file into an exact :class:`Problem`."""
    blocks = _blocks(text)
    kind = _word(blocks, "kind", KINDS, None)
    if kind is None:
        kind = "matrix" if "A" in blocks else "polynomial"
    time_domain = _word(blocks, "time", TIME_DOMAINS, CONTINUOUS)

    params = ("r", "p")
    if "params" in blocks:
        n, pieces = blocks["params"]
        names = tuple(x.strip() for x in " ".join(p[2] for p in pieces).split(","))
        col = pieces[0][1] if pieces else 1
        if len(names) != 2 or not all(re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", x) for x in names):
            raise ParseError("params must list exactly two names", n, col)
        if len(set(names)) != 2 or set(names) & {S, "i"}:
            raise ParseError("parameter names must be distinct and differ from s and i", n, col)
        params = names

    def source(key):
        if key not in blocks:
            raise ParseError(f"missing key {key!r}")
        n, pieces = blocks[key]
        if not pieces:
            raise ParseError(f"empty value for {key!r}", n, 1)
        return _Source(pieces)

    box = grid = None
    if "box" in blocks:
        n, pieces = blocks["box"]
        box = parse_box(" ".join(p[2] for p in pieces), n, pieces[0][1] if pieces else 1)
    if "grid" in blocks:
        n, pieces = blocks["grid"]
        value = " ".join(p[2] for p in pieces)
        if not value.isdigit() or int(value) < 16:
            raise ParseError("grid must be an integer >= 16", n, pieces[0][1] if pieces else 1)
        grid = int(value)

    if kind == "polynomial":
        for key in ("A", "B", "C", "K"):
            if key in blocks:
                raise ParseError(f"key {key!r} is not allowed for a polynomial problem",
                                 blocks[key][0], 1)
        poly = _parse_expr(source("poly"), (S,) + params)
        return Problem(kind, time_domain, params, poly=poly, box=box, grid=grid)

    if "poly" in blocks:
        raise ParseError("key 'poly' is not allowed for a matrix problem", blocks["poly"][0], 1)
    mats = {key: _parse_matrix(source(key), params) for key in ("A", "B", "C", "K")}
    pr = Problem(kind, time_domain, params, box=box, grid=grid, **mats)
    try:
        pr.matrix_family()
    except ShapeError as exc:
        raise ParseError(str(exc), blocks["K"][0], 1) from None
    return pr


def read_problem(path):
    with open(path, encoding="utf-8") as fh:
        return parse_input(fh.read())


# -- canonical rendering ----------------------------------------------------------

def _frac_text(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _matrix_text(m):
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in m) + "]"


def render_problem(pr):
    """Canonical text; ``parse_input(render_problem(pr)) == pr``."""
    lines = [f"kind: {pr.kind}", f"time: {pr.time_domain}", f"params: {', '.join(pr.params)}"]
    if pr.kind == "polynomial":
        lines.append(f"poly: {pr.poly}")
    else:
        for key in ("A", "B", "C", "K"):
            lines.append(f"{key}: {_matrix_text(getattr(pr, key))}")
    if pr.box is not None:
        lines.append("box: " + ":".join(_frac_text(x) for x in pr.box))
    if pr.grid is not None:
        lines.append(f"grid: {pr.grid}")
    return "\n".join(lines) + "\n"


__all__ = ["Problem", "parse_input", "read_problem", "render_problem", "parse_box",
           "DISCRETE", "CONTINUOUS"]
