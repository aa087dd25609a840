"""Exact stable-root counts for univariate complex polynomials.

Continuous time counts roots with ``Re s < 0`` using the Cauchy index of
``Re q(jw) / Im q(jw)``; discrete time counts roots with ``|z| < 1`` through
the bilinear map.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import dup
from .arith import canon, conj, denominator, imag_part, real_part
from .errors import BorderContactError, DegreeDropError, DomainError
from .family import DISCRETE
from .mpoly import MPoly


@dataclass(frozen=True)
class RootCount:
    stable: int
    unstable: int
    degree: int
    marginal: bool = False

    def __post_init__(self):
        if self.stable < 0 or self.unstable < 0:
            raise ValueError("negative root count")
        if not self.marginal and self.stable + self.unstable != self.degree:
            raise ValueError("stable + unstable must equal the degree")


def _coeffs(q):
    """Dense canonical coefficients, lowest first, trailing zeros removed."""
    if isinstance(q, MPoly):
        used = q.used_vars()
        if len(used) > 1:
            raise DomainError(f"{q} is not univariate")
        if not used:
            cs = [q.constant_value()] if q else []
        else:
            cs = [c.constant_value() for c in q.to_dense(used[0])]
    else:
        cs = [canon(c) for c in q]
    while cs and not cs[-1]:
        cs.pop()
    if not cs:
        raise DomainError("stable-root count of the zero polynomial")
    return cs


def _split_axis(cs):
    """``R, I`` with ``q(jw) = R(w) + i I(w)`` as integer polynomials."""
    re, im = [], []
    for k, c in enumerate(cs):
        # (j)^k cycles 1, j, -1, -j
        a, b = real_part(c), imag_part(c)
        k4 = k % 4
        if k4 == 0:
            x, y = a, b
        elif k4 == 1:
            x, y = -b, a
        elif k4 == 2:
            x, y = -a, -b
        else:
            x, y = b, -a
        re.append(x)
        im.append(y)
    m = lcm(*(denominator(c) for c in re + im)) if cs else 1
    return (dup.strip([int(Fraction(x) * m) for x in re]),
            dup.strip([int(Fraction(y) * m) for y in im]))


def lhp_count(q):
    """Roots of ``q`` in the open left half plane (exact).

    ``marginal`` is set when ``q`` has a root on the imaginary axis.
    """
    cs = _coeffs(q)
    n = len(cs) - 1
    if n == 0:
        return RootCount(0, 0, 0)
    # real positive leading coefficient: exactly one of R, I has degree n
    lead = conj(cs[-1])
    cs = [canon(c * lead) for c in cs]
    R, I = _split_axis(cs)
    G = dup.gcd(R, I)
    g = len(G) - 1
    if g > 0 and dup.sturm_count(G) > 0:
        return RootCount(0, 0, n, True)
    if n % 2 == 0:
        # deg R = n > deg I
        delta = -dup.cauchy_index(I, R)
    else:
        delta = dup.cauchy_index(R, I)
    # off-axis roots shared by R and I come in mirror pairs s, -conj(s)
    stable = (n - g + delta) // 2 + g // 2
    return RootCount(stable, n - stable, n)


def schur_count(q):
    """Roots of ``q`` in the open unit disk (exact)."""
    cs = _coeffs(q)
    n = len(cs) - 1
    if n == 0:
        return RootCount(0, 0, 0)
    if not sum(cs):
        return RootCount(0, 0, n, True)
    return lhp_count(_bilinear_coeffs(cs))


def _bilinear_coeffs(cs):
    """``(s-1)^n q((s+1)/(s-1))`` on a coefficient list."""
    n = len(cs) - 1
    plus = [[1]]
    minus = [[1]]
    for _ in range(n):
        plus.append(dup.K.mul(plus[-1], [1, 1]))
        minus.append(dup.K.mul(minus[-1], [-1, 1]))
    out = [0] * (n + 1)
    for k, c in enumerate(cs):
        if c:
            for i, x in enumerate(dup.K.mul(plus[k], minus[n - k])):
                out[i] = out[i] + c * x
    return [canon(x) for x in out]


def count_for_domain(q, time_domain):
    return schur_count(q) if time_domain == DISCRETE else lhp_count(q)


def classify_point(f, point):
    """Stable/unstable split of the family ``f`` at a sample point."""
    r, p = _coords(point)
    q = f.specialize(r, p)
    if q.degree() < f.t:
        raise DegreeDropError(
            f"leading coefficient vanishes at ({r}, {p}): degree drops from {f.t}")
    rc = count_for_domain(q, f.time_domain)
    if rc.marginal:
        raise BorderContactError(f"point ({r}, {p}) lies on the stability border")
    return rc


def _coords(point):
    if hasattr(point, "r"):
        return point.r, point.p
    r, p = point
    return r, p
