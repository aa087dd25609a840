"""Dense univariate polynomials over the integers.

A polynomial is a list of ``int`` coefficients, lowest degree first, without
trailing zeros; ``[]`` is zero.  Everything the pipeline does with univariate
real polynomials (square-free parts, Sturm chains, Descartes isolation,
resultants at evaluation points) runs here, on top of :mod:`.kernels`.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd

from . import kernels as K
from .errors import DomainError, EndpointError

strip = K.strip


def degree(a):
    return len(a) - 1


def content(a):
    c = 0
    for x in a:
        c = igcd(c, x)
        if c == 1:
            break
    return c


def primitive(a):
    """Divide by the (positive) integer content; sign is preserved."""
    c = content(a)
    if c <= 1:
        return list(a)
    return [x // c for x in a]


def canonical(a):
    """Primitive with positive leading coefficient."""
    a = primitive(a)
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def neg(a):
    return [-x for x in a]


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return strip(out)


def sub(a, b):
    return add(a, neg(b))


def deriv(a):
    return [i * a[i] for i in range(1, len(a))]


def reflect(a):
    """Coefficients of ``a(-x)``."""
    return [-x if i & 1 else x for i, x in enumerate(a)]


def divexact(a, b):
    """Quotient of an exact division ``a / b`` over the integers."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        if r:
            raise ArithmeticError("inexact polynomial division")
        return []
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        qk, rem = divmod(c, lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        off = k - db
        q[off] = qk
        for i in range(db + 1):
            r[off + i] -= qk * b[i]
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return strip(q)


def gcd(a, b):
    """Canonical gcd via the primitive polynomial remainder sequence."""
    a, b = strip(list(a)), strip(list(b))
    if not a:
        return canonical(b)
    if not b:
        return canonical(a)
    c = igcd(content(a), content(b))
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = K.prem(a, b)
        if not r:
            return [x * c for x in canonical(b)]
        a, b = b, primitive(r)
    return [c]


def sqf_part(a):
    a = strip(list(a))
    if len(a) <= 2:
        return canonical(a)
    g = gcd(a, deriv(a))
    if len(g) == 1:
        return canonical(a)
    return canonical(divexact(a, g))


def from_rationals(coeffs):
    """Clear denominators; returns the integer polynomial (positive scale)."""
    den = 1
    for c in coeffs:
        d = Fraction(c).denominator
        den = den * d // igcd(den, d)
    return strip([int(Fraction(c) * den) for c in coeffs])


# -- signs, Sturm chains -----------------------------------------------------

def sign(x):
    return (x > 0) - (x < 0)


def sign_at(a, x):
    """Sign of ``a`` at a rational ``x``; ``None`` is not allowed here."""
    x = Fraction(x)
    return sign(K.eval_hom(a, x.numerator, x.denominator))


def sign_at_inf(a, direction):
    if not a:
        return 0
    s = sign(a[-1])
    if direction < 0 and (len(a) - 1) & 1:
        s = -s
    return s


def _point_signs(chain, x):
    if x is None:
        raise ValueError("use _inf_signs for infinite endpoints")
    return [sign_at(p, x) for p in chain]


def variations(signs):
    v = 0
    last = 0
    for s in signs:
        if s:
            if last and s != last:
                v += 1
            last = s
    return v


def signed_remainder_chain(f, g):
    """Sturm-type chain ``f, g, -rem(f, g), ...`` with positive scalings.

    Pseudo-remainders are multiplied by a positive factor only, so sign
    patterns of the classical chain are preserved.
    """
    chain = [canonical_sign_keep(f), canonical_sign_keep(g)]
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r = K.prem(a, b)
        if b[-1] < 0 and (len(a) - len(b) + 1) & 1:
            r = neg(r)
        if not r:
            break
        chain.append(primitive(neg(r)))
    if not chain[-1]:
        chain.pop()
    return chain


def canonical_sign_keep(a):
    return primitive(strip(list(a)))


def chain_variations(chain, x):
    """Sign variations of a chain at rational ``x`` or at +-inf (``x`` a str)."""
    if x == "-inf":
        return variations([sign_at_inf(p, -1) for p in chain])
    if x == "+inf":
        return variations([sign_at_inf(p, 1) for p in chain])
    return variations(_point_signs(chain, x))


def sturm_count(a, lo=None, hi=None):
    """Number of distinct real roots of ``a`` in the open interval (lo, hi).

    ``None`` endpoints stand for -inf / +inf.  Endpoints must not be roots.
    """
    a = strip(list(a))
    if not a:
        raise DomainError("Sturm count of the zero polynomial")
    for x in (lo, hi):
        if x is not None and sign_at(a, x) == 0:
            raise EndpointError(f"endpoint {x} is a root")
    if len(a) == 1:
        return 0
    chain = signed_remainder_chain(a, deriv(a))
    vlo = chain_variations(chain, "-inf" if lo is None else lo)
    vhi = chain_variations(chain, "+inf" if hi is None else hi)
    return vlo - vhi


def cauchy_index(num, den):
    """Cauchy index of ``num/den`` over the whole real line.

    Requires ``deg num < deg den``.  Positive jumps (-inf to +inf) count +1.
    """
    if not num:
        return 0
    chain = signed_remainder_chain(den, num)
    return chain_variations(chain, "-inf") - chain_variations(chain, "+inf")


# -- bounds and isolation ------------------------------------------------------

def cauchy_bound(a):
    """``1 + max |a_i / a_n|``; every complex root has modulus below it."""
    a = strip(list(a))
    if not a:
        raise DomainError("root bound of the zero polynomial")
    if len(a) == 1:
        return Fraction(1)
    lead = abs(a[-1])
    return 1 + Fraction(max(abs(x) for x in a[:-1]), lead)


@dataclass(frozen=True)
class Interval:
    """Isolating interval: an exact point (``lo == hi``) or open (lo, hi)."""

    lo: Fraction
    hi: Fraction
    exact: bool = False

    def __post_init__(self):
        if self.exact and self.lo != self.hi:
            raise ValueError("exact interval needs lo == hi")
        if not self.exact and not self.lo < self.hi:
            raise ValueError("open interval needs lo < hi")

    def contains(self, x):
        if self.exact:
            return x == self.lo
        return self.lo < x < self.hi

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2


def _pow2_bound_bits(a):
    b = cauchy_bound(a)
    k = 0
    while (1 << k) < b:
        k += 1
    return k


def _single_root(g, c, width):
    """Interval for the unique root of ``g`` in (0, 1), exact when cheap."""
    if len(g) == 2:
        t = Fraction(-g[0], g[1])
        return Interval((c + t) * width, (c + t) * width, True)
    if K.eval_hom(g, 1, 2) == 0:
        x = (2 * c + 1) * width / 2
        return Interval(x, x, True)
    return Interval(c * width, (c + 1) * width)


def _isolate_positive(a):
    """Isolating intervals for the roots of ``a`` in (0, inf).

    ``a`` is square-free with ``a(0) != 0``.
    """
    if len(a) <= 1:
        return []
    k = _pow2_bound_bits(a)
    scale = 1 << k
    # g(x) = a(2^k x): every positive root moves into (0, 1)
    g = primitive([x << (k * i) for i, x in enumerate(a)])
    out = []
    stack = [(g, 0, 0)]
    while stack:
        g, c, depth = stack.pop()
        v = K.descartes_01(g)
        if v == 0:
            continue
        width = Fraction(scale, 1 << depth)
        if v == 1:
            out.append(_single_root(g, c, width))
            continue
        g1 = K.halve(g)
        if sum(g1) == 0:
            out.append(Interval((2 * c + 1) * width / 2, (2 * c + 1) * width / 2, True))
            g1 = divexact(g1, [-1, 1])
        g1 = primitive(g1)
        g2 = K.taylor_shift1(g1)
        stack.append((g2, 2 * c + 1, depth + 1))
        stack.append((g1, 2 * c, depth + 1))
    out.sort(key=lambda iv: iv.lo)
    return out


def isolate(a):
    """Disjoint isolating intervals for the distinct real roots of ``a``."""
    a = strip(list(a))
    if not a:
        raise DomainError("cannot isolate roots of the zero polynomial")
    a = sqf_part(a)
    roots = []
    if len(a) > 1 and a[0] == 0:
        roots.append(Interval(Fraction(0), Fraction(0), True))
        a = a[1:]
    pos = _isolate_positive(a)
    negs = [Interval(-iv.hi, -iv.lo, iv.exact) for iv in _isolate_positive(reflect(a))]
    negs.reverse()
    return negs + roots + pos


def refine(a, iv, width):
    """Bisect an open isolating interval of square-free ``a`` below ``width``."""
    lo, hi = iv.lo, iv.hi
    slo = sign_at(a, lo)
    if slo == 0:
        # lo is a neighbouring simple root: use the sign just to its right
        slo = sign_at(deriv(a), lo)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        sm = sign_at(a, mid)
        if sm == 0:
            return Interval(mid, mid, True)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)


# -- resultants at evaluation points ------------------------------------------

def sylvester(a, b):
    """Sylvester matrix of ``a`` (deg m) and ``b`` (deg n), rows high-to-low."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    ra, rb = a[::-1], b[::-1]
    for i in range(n):
        rows.append([0] * i + ra + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + rb + [0] * (size - n - 1 - i))
    return rows


def resultant(a, b):
    a, b = strip(list(a)), strip(list(b))
    if not a or not b:
        return 0
    if len(a) == 1 and len(b) == 1:
        return 1
    return K.bareiss_det(sylvester(a, b))
