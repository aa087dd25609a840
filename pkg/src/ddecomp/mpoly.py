"""Sparse multivariate polynomials over the Gaussian rationals.

An :class:`MPoly` is an ordered tuple of variable names plus a dict mapping
exponent tuples to nonzero canonical coefficients (see :func:`arith.canon`).
Terms are ordered lexicographically by exponent tuple, so the *first*
declared variable dominates.  Polynomials are immutable.

Binary operations accept operands over different variable lists; the result
lives over the union (left operand's variables first).

Besides ring arithmetic this module provides the elimination toolkit:
recursive gcd via subresultant remainder sequences, square-free parts,
Sylvester resultants by fraction-free (Bareiss) elimination, and the
univariate real-root helpers built on :mod:`.dup`.
"""

from fractions import Fraction
from math import gcd as igcd, lcm
from operator import add as _add

from . import dup
from .arith import (GaussianRational, canon, conj as _conj, denominator,
                    div as _div, imag_part, is_real as _is_real_scalar,
                    real_part)
from .dup import Interval
from .errors import DomainError

_SCALARS = (int, Fraction, GaussianRational)


class MPoly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars=(), terms=None):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError(f"duplicate variable names in {vars}")
        clean = {}
        if terms:
            n = len(vars)
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e} for {vars}")
                c = canon(c)
                if c:
                    clean[e] = c
        self.vars = vars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms):
        # trusted constructor: terms already canonical and zero-free
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c, vars=()):
        vars = tuple(vars)
        c = canon(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, name, vars=None):
        vars = (name,) if vars is None else tuple(vars)
        e = tuple(1 if v == name else 0 for v in vars)
        if name not in vars:
            raise ValueError(f"{name} not among {vars}")
        return cls._raw(vars, {e: 1})

    # -- structure -------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.terms:
            return 0
        if not self.is_constant():
            raise DomainError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def _idx(self, var):
        try:
            return self.vars.index(var)
        except ValueError:
            return None

    def degree(self, var=None):
        """Degree in ``var``, or total degree when ``var`` is None (-1 for 0)."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self._idx(var)
        if i is None:
            return 0
        return max(e[i] for e in self.terms)

    total_degree = degree

    def depends_on(self, var):
        i = self._idx(var)
        return i is not None and any(e[i] for e in self.terms)

    def used_vars(self):
        return tuple(v for i, v in enumerate(self.vars)
                     if any(e[i] for e in self.terms))

    def is_real(self):
        return all(_is_real_scalar(c) for c in self.terms.values())

    def leading_term(self):
        """``(exponent, coefficient)`` of the lex-largest term."""
        e = max(self.terms)
        return e, self.terms[e]

    def leading_coefficient(self):
        return self.terms[max(self.terms)] if self.terms else 0

    def with_vars(self, vars):
        """Re-embed into a variable list that contains every used variable."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = []
        for i, v in enumerate(self.vars):
            if v in vars:
                pos.append((i, vars.index(v)))
            elif any(e[i] for e in self.terms):
                raise ValueError(f"variable {v} is used but missing from {vars}")
        n = len(vars)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, j in pos:
                ne[j] = e[i]
            out[tuple(ne)] = c
        return MPoly._raw(vars, out)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.vars == self.vars:
                return self, other
            vars = self.vars + tuple(v for v in other.vars if v not in self.vars)
            return self.with_vars(vars), other.with_vars(vars)
        if isinstance(other, _SCALARS):
            return self, MPoly.const(other, self.vars)
        return None, None

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        out = dict(a.terms)
        for e, c in b.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = canon(v + c)
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MPoly._raw(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        if len(a.terms) < len(b.terms):
            a, b = b, a
        if not b.terms:
            return MPoly._raw(a.vars, {})
        if len(b.terms) == 1:
            (e2, c2), = b.terms.items()
            return MPoly._raw(a.vars, {tuple(map(_add, e1, e2)): canon(c1 * c2)
                                        for e1, c1 in a.terms.items()})
        out = {}
        get = out.get
        bt = list(b.terms.items())
        for e1, c1 in a.terms.items():
            for e2, c2 in bt:
                e = tuple(map(_add, e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return MPoly._raw(a.vars, {e: canon(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        c = canon(c)
        if not c:
            return MPoly._raw(self.vars, {})
        if c == 1:
            return self
        return MPoly._raw(self.vars, {e: canon(x * c) for e, x in self.terms.items()})

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            if other.is_constant() and other:
                other = other.constant_value()
            else:
                return divexact(self, other)
        if isinstance(other, _SCALARS):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return MPoly._raw(self.vars, {e: _div(x, other) for e, x in self.terms.items()})
        return NotImplemented

    # -- comparison, hashing, printing ----------------------------------------------

    def _key(self):
        used = self.used_vars()
        idx = [self.vars.index(v) for v in used]
        return frozenset((tuple((used[k], e[i]) for k, i in enumerate(idx) if e[i]), c)
                         for e, c in self.terms.items())

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        if self.vars == other.vars:
            return self.terms == other.terms
        return self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"MPoly({self.vars!r}, {str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}"
                            for v, k in zip(self.vars, e) if k)
            if isinstance(c, GaussianRational):
                cs = _gauss_text(c)
                sign = "+"
            else:
                sign = "-" if c < 0 else "+"
                cs = str(abs(c))
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            parts.append((sign, body))
        sign, body = parts[0]
        out = [("-" if sign == "-" else "") + body]
        for sign, body in parts[1:]:
            out.append(f" {sign} {body}")
        return "".join(out)

    # -- calculus and substitution -------------------------------------------------

    def derivative(self, var):
        i = self._idx(var)
        if i is None:
            return MPoly._raw(self.vars, {})
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                out[tuple(ne)] = canon(c * k)
        return MPoly._raw(self.vars, out)

    def evaluate(self, assignment):
        """Substitute scalars for some variables; the variable list is kept."""
        if not assignment:
            return self
        idx = []
        for v, val in assignment.items():
            i = self._idx(v)
            if i is None:
                raise DomainError(f"unknown variable {v}")
            idx.append((i, canon(val)))
        out = {}
        get = out.get
        for e, c in self.terms.items():
            ne = list(e)
            for i, val in idx:
                k = ne[i]
                if k:
                    c = c * val ** k
                    ne[i] = 0
            ne = tuple(ne)
            out[ne] = get(ne, 0) + c
        return MPoly._raw(self.vars, {e: canon(c) for e, c in out.items() if c})

    def compose(self, var, poly):
        """Substitute the polynomial ``poly`` for ``var``."""
        coeffs = self.to_dense(var)
        acc = MPoly.const(0, self.vars)
        for c in reversed(coeffs):
            acc = acc * poly + c
        return acc

    def real_part(self):
        return MPoly._raw(self.vars, {e: real_part(c) for e, c in self.terms.items()
                                      if real_part(c)})

    def imag_part(self):
        return MPoly._raw(self.vars, {e: imag_part(c) for e, c in self.terms.items()
                                      if imag_part(c)})

    def conj(self):
        return MPoly._raw(self.vars, {e: _conj(c) for e, c in self.terms.items()})

    # -- recursive (dense in one variable) views ----------------------------------------

    def to_dense(self, var):
        """Coefficients in ``var`` (lowest degree first) as polynomials free
        of ``var`` over the same variable list."""
        i = self._idx(var)
        if i is None:
            return [self] if self.terms else []
        n = max((e[i] for e in self.terms), default=-1)
        buckets = [dict() for _ in range(n + 1)]
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1:]
            buckets[k][ne] = c
        return [MPoly._raw(self.vars, b) for b in buckets]

    @classmethod
    def from_dense(cls, coeffs, var, vars):
        vars = tuple(vars)
        i = vars.index(var)
        out = {}
        for k, c in enumerate(coeffs):
            c = c.with_vars(vars) if isinstance(c, MPoly) else MPoly.const(c, vars)
            for e, x in c.terms.items():
                ne = e[:i] + (e[i] + k,) + e[i + 1:]
                out[ne] = x
        return cls._raw(vars, out)

    def leading_coeff_in(self, var):
        d = self.to_dense(var)
        return d[-1] if d else MPoly._raw(self.vars, {})

    def int_coeffs(self, var):
        """Dense integer coefficients of a real univariate polynomial in
        ``var`` after clearing denominators (positive scale)."""
        for v in self.used_vars():
            if v != var:
                raise DomainError(f"{self} is not univariate in {var}")
        if not self.is_real():
            raise DomainError(f"{self} has non-real coefficients")
        i = self._idx(var)
        n = self.degree(var)
        coeffs = [0] * (n + 1)
        for e, c in self.terms.items():
            coeffs[e[i] if i is not None else 0] = c
        return dup.from_rationals(coeffs)

    @classmethod
    def from_ints(cls, coeffs, var, vars=None):
        vars = (var,) if vars is None else tuple(vars)
        i = vars.index(var)
        n = len(vars)
        out = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = k
                out[tuple(e)] = c
        return cls._raw(vars, out)

    # -- normalization ---------------------------------------------------------------------

    def denominator(self):
        m = 1
        for c in self.terms.values():
            m = lcm(m, denominator(c))
        return m

    def normalize(self):
        """Canonical associate: integer, content-free and positive leading
        coefficient when real; otherwise monic first, and integer-normalized
        if the monic form is real."""
        if not self.terms:
            return self
        if not self.is_real():
            f = self / self.leading_coefficient()
            if not f.is_real():
                return f
            return f.normalize()
        m = self.denominator()
        vals = [int(c * m) for c in self.terms.values()]
        g = 0
        for v in vals:
            g = igcd(g, v)
            if g == 1:
                break
        if self.leading_coefficient() < 0:
            g = -g
        return MPoly._raw(self.vars, {e: v // g for e, v in zip(self.terms, vals)})


def _gauss_text(c):
    re, im = c.re, c.im
    ims = "i" if abs(im) == 1 else f"{abs(im)}*i"
    if re == 0:
        return f"({'-' if im < 0 else ''}{ims})"
    return f"({re} {'-' if im < 0 else '+'} {ims})"


def _as_poly(f, vars=()):
    return f if isinstance(f, MPoly) else MPoly.const(f, vars)


def _align(f, g):
    f, g = _as_poly(f), _as_poly(g)
    if f.vars != g.vars:
        f, g = f._coerce(g)
    return f, g


# -- public operations ---------------------------------------------------------------------

def arith(f, g, op):
    """``op`` is one of ``"+", "-", "*", "^"`` (``g`` an int for ``"^"``)."""
    f = _as_poly(f)
    if op == "+":
        return f + g
    if op == "-":
        return f - g
    if op == "*":
        return f * g
    if op in ("^", "**", "power"):
        return f ** g
    raise ValueError(f"unknown operator {op!r}")


def evaluate(f, assignment):
    return f.evaluate(assignment)


def derivative(f, var):
    return f.derivative(var)


def divexact(f, g):
    """Exact quotient ``f / g``; raises ``ArithmeticError`` if inexact."""
    f, g = _align(f, g)
    if not g.terms:
        raise ZeroDivisionError("polynomial division by zero")
    if g.is_constant():
        return f / g.constant_value()
    vars = f.vars
    r = dict(f.terms)
    eg, cg = g.leading_term()
    gt = [(e, c) for e, c in g.terms.items() if e != eg]
    q = {}
    while r:
        e = max(r)
        c = r.pop(e)
        d = tuple(a - b for a, b in zip(e, eg))
        if min(d) < 0:
            raise ArithmeticError("inexact polynomial division")
        qc = _div(c, cg)
        q[d] = qc
        for e2, c2 in gt:
            ee = tuple(map(_add, d, e2))
            v = r.get(ee, 0) - qc * c2
            if v:
                r[ee] = canon(v)
            else:
                r.pop(ee, None)
    return MPoly._raw(vars, q)


def _prem_dense(A, B):
    """Pseudo-remainder of dense coefficient lists (entries MPoly)."""
    r = list(A)
    db = len(B) - 1
    lb = B[-1]
    if len(r) - 1 < db:
        return r
    for k in range(len(r) - 1, db - 1, -1):
        q = r[k]
        for i in range(k):
            r[i] = r[i] * lb
        r[k] = None
        if q:
            off = k - db
            for i in range(db):
                if B[i]:
                    r[off + i] = r[off + i] - q * B[i]
    r = r[:db]
    while r and not r[-1]:
        r.pop()
    return r


def _subresultant_gcd_dense(A, B):
    """Last nonzero subresultant of dense lists with deg A >= deg B >= 1."""
    one = MPoly.const(1, A[0].vars)
    g = h = one
    while True:
        delta = len(A) - len(B)
        R = _prem_dense(A, B)
        if not R:
            return B
        if len(R) == 1:
            return [one]
        d = g * h ** delta
        A, B = B, [divexact(c, d) if c else c for c in R]
        g = A[-1]
        if delta:
            h = divexact(g ** delta, h ** (delta - 1))


def content(f, var):
    """gcd of the coefficients of ``f`` viewed as a polynomial in ``var``."""
    c = None
    for k in f.to_dense(var):
        if not k:
            continue
        c = k.normalize() if c is None else gcd(c, k)
        if c.is_constant():
            return MPoly.const(1, f.vars)
    return c if c is not None else MPoly.const(0, f.vars)


def primitive_part(f, var):
    if not f:
        return f
    return divexact(f, content(f, var))


def gcd(f, g, main_var=None):
    """Greatest common divisor, normalized (see :meth:`MPoly.normalize`)."""
    f, g = _align(f, g)
    if not f.terms:
        return g.normalize()
    if not g.terms:
        return f.normalize()
    vs = [v for v in f.vars if f.depends_on(v) or g.depends_on(v)]
    one = MPoly.const(1, f.vars)
    if not vs:
        return one
    if main_var in vs:
        x = main_var
    else:
        x = vs[0]
    if (len(vs) == 1 and f.is_real() and g.is_real()):
        a, b = f.int_coeffs(x), g.int_coeffs(x)
        return MPoly.from_ints(dup.gcd(a, b), x, f.vars).normalize()
    cf, cg = content(f, x), content(g, x)
    c = gcd(cf, cg)
    pf, pg = divexact(f, cf), divexact(g, cg)
    if not pf.depends_on(x) or not pg.depends_on(x):
        return c.normalize()
    A, B = pf.to_dense(x), pg.to_dense(x)
    if len(A) < len(B):
        A, B = B, A
    G = _subresultant_gcd_dense(A, B)
    gp = MPoly.from_dense(G, x, f.vars)
    gp = primitive_part(gp, x)
    return (c * gp).normalize()


def squarefree_part(f, main_var=None):
    """Product of the distinct irreducible factors of ``f`` (normalized).

    Factors free of ``main_var`` (the content) are reduced recursively in the
    remaining variables, so the zero set is preserved exactly.
    """
    f = _as_poly(f)
    if not f.terms:
        raise DomainError("square-free part of the zero polynomial")
    used = f.used_vars()
    if not used:
        return MPoly.const(1, f.vars)
    x = main_var if main_var in used else used[0]
    if len(used) == 1 and f.is_real():
        return MPoly.from_ints(dup.sqf_part(f.int_coeffs(x)), x, f.vars)
    c = content(f, x)
    p = divexact(f, c)
    g = gcd(p, p.derivative(x), x)
    sp = divexact(p, g) if not g.is_constant() else p
    if not c.is_constant():
        sp = sp * squarefree_part(c)
    return sp.normalize()


def sylvester_matrix(f, g, var):
    """Sylvester matrix of ``f`` and ``g`` in ``var`` (MPoly entries)."""
    f, g = _align(f, g)
    A, B = f.to_dense(var), g.to_dense(var)
    m, n = len(A) - 1, len(B) - 1
    zero = MPoly.const(0, f.vars)
    size = m + n
    ra, rb = A[::-1], B[::-1]
    rows = []
    for i in range(n):
        rows.append([zero] * i + ra + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + rb + [zero] * (size - n - 1 - i))
    return rows


def bareiss_det(rows):
    """Determinant of a square matrix of MPoly entries, fraction-free."""
    n = len(rows)
    if n == 0:
        return MPoly.const(1)
    a = [list(r) for r in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[0][0] * 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                if aik and rowk[j]:
                    t = rowi[j] * akk - aik * rowk[j]
                elif rowi[j]:
                    t = rowi[j] * akk
                else:
                    continue
                rowi[j] = divexact(t, prev) if prev is not None else t
        prev = akk
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def resultant(f, g, var):
    """Sylvester resultant of ``f`` and ``g`` with respect to ``var``."""
    f, g = _align(f, g)
    if not f.terms or not g.terms:
        raise DomainError("resultant with the zero polynomial")
    m, n = f.degree(var), g.degree(var)
    if m <= 0 and n <= 0:
        raise DomainError(f"neither polynomial depends on {var}")
    if n == 0:
        return g ** m
    if m == 0:
        return f ** n
    # integer (Gaussian-integer) entries keep every Bareiss division in Z
    df, dg = f.denominator(), g.denominator()
    res = bareiss_det(sylvester_matrix(f.scale(df), g.scale(dg), var))
    scale = Fraction(df) ** n * Fraction(dg) ** m
    return res / scale if scale != 1 else res


# -- univariate real roots ----------------------------------------------------------------

def _univariate_ints(f):
    if not f.terms:
        raise DomainError("zero polynomial")
    if not f.is_real():
        raise DomainError(f"{f} has non-real coefficients")
    used = f.used_vars()
    if len(used) > 1:
        raise DomainError(f"{f} is not univariate")
    if not used:
        return dup.from_rationals([f.constant_value()])
    return f.int_coeffs(used[0])


def isolate_real_roots(f):
    """Isolating intervals (sorted) for the distinct real roots of ``f``."""
    f = _as_poly(f)
    if not f.is_real():
        raise DomainError("real-root isolation needs real coefficients")
    return dup.isolate(_univariate_ints(f))


def sturm_count(f, lo=None, hi=None):
    """Distinct real roots of ``f`` in (lo, hi); ``None`` means infinite."""
    return dup.sturm_count(_univariate_ints(_as_poly(f)), lo, hi)


def cauchy_root_bound(f):
    """``B >= 1`` with every complex root of univariate ``f`` below ``B``."""
    f = _as_poly(f)
    if not f.terms:
        raise DomainError("root bound of the zero polynomial")
    used = f.used_vars()
    if len(used) > 1:
        raise DomainError(f"{f} is not univariate")
    if not used:
        return Fraction(1)
    x = used[0]
    coeffs = f.to_dense(x)
    lead = coeffs[-1].constant_value()
    best = Fraction(0)
    for c in coeffs[:-1]:
        if c:
            q = GaussianRational._coerce(c.constant_value()) / lead
            best = max(best, abs(q.re) + abs(q.im))
    return 1 + best


__all__ = [
    "MPoly", "Interval", "arith", "evaluate", "derivative", "divexact", "gcd",
    "content", "primitive_part", "squarefree_part", "sylvester_matrix",
    "bareiss_det", "resultant", "isolate_real_roots", "sturm_count",
    "cauchy_root_bound",
]
