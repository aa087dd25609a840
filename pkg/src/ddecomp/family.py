"""Parametric polynomial and matrix families.

A family is a polynomial ``P(s, r, p)`` (or a matrix whose characteristic
polynomial is one) together with its time domain.  This module performs the
discrete-to-continuous bilinear map, the split ``P(jw) = R + i*I`` and the
matrix plumbing (closed loop, characteristic polynomial).
"""

from dataclasses import dataclass, field

from .arith import I as _I, canon, imag_part, real_part
from .errors import DegenerateFamilyError, ShapeError
from .mpoly import MPoly

CONTINUOUS = "continuous"
DISCRETE = "discrete"
TIME_DOMAINS = (CONTINUOUS, DISCRETE)

S = "s"
W = "w"


@dataclass(frozen=True)
class PolyFamily:
    poly: MPoly
    time_domain: str = CONTINUOUS
    param_names: tuple = ("r", "p")

    def __post_init__(self):
        if self.time_domain not in TIME_DOMAINS:
            raise ValueError(f"unknown time domain {self.time_domain!r}")
        vars = (S,) + tuple(self.param_names)
        extra = set(self.poly.used_vars()) - set(vars)
        if extra:
            raise ValueError(f"family uses unknown variables {sorted(extra)}")
        object.__setattr__(self, "poly", self.poly.with_vars(vars))
        if self.poly.degree(S) < 1:
            raise DegenerateFamilyError("family must have degree >= 1 in s")

    @property
    def vars(self):
        return self.poly.vars

    @property
    def t(self):
        """Degree in ``s``."""
        return self.poly.degree(S)

    @property
    def d(self):
        """Total degree in the parameters."""
        return max((sum(e[1:]) for e in self.poly.terms), default=0)

    def coefficients(self):
        """Coefficients in ``s``, lowest first, as polynomials in the parameters."""
        return self.poly.to_dense(S)

    def leading_coefficient(self):
        return self.coefficients()[-1]

    def specialize(self, r, p):
        """The univariate polynomial in ``s`` at a parameter point."""
        rn, pn = self.param_names
        return self.poly.evaluate({rn: r, pn: p}).with_vars((S,))


@dataclass(frozen=True)
class MatrixFamily:
    entries: tuple
    time_domain: str = CONTINUOUS
    param_names: tuple = ("r", "p")

    def __post_init__(self):
        rows = tuple(tuple(_poly(x, self.param_names) for x in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ShapeError("matrix family must be square and nonempty")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self):
        return len(self.entries)

    @property
    def d(self):
        return max((x.degree() for row in self.entries for x in row if x), default=0)


@dataclass(frozen=True)
class SplitPair:
    """``P(jw) = R + i*I`` with real ``R`` and ``I`` in ``(w, r, p)``."""

    R: MPoly
    I: MPoly
    param_names: tuple = field(default=("r", "p"))


def _poly(x, params):
    if isinstance(x, MPoly):
        return x.with_vars(tuple(params) + tuple(v for v in x.vars if v not in params))
    return MPoly.const(x, params)


def to_continuous(f):
    """Bilinear map ``P(z) -> (s-1)^n P((s+1)/(s-1))`` on a discrete family.

    Schur roots of ``P`` correspond to Hurwitz roots of the image.
    """
    if f.time_domain != DISCRETE:
        raise ValueError("to_continuous expects a discrete-time family")
    if not f.poly.evaluate({S: 1}):
        raise DegenerateFamilyError(
            "P(1, r, p) vanishes identically: a root is pinned at z = 1")
    return PolyFamily(bilinear(f.poly), CONTINUOUS, f.param_names)


def bilinear(poly, var=S):
    """``(v-1)^n * poly((v+1)/(v-1))`` with ``n = deg_v poly``."""
    coeffs = poly.to_dense(var)
    n = len(coeffs) - 1
    x = MPoly.var(var, poly.vars)
    plus, minus = x + 1, x - 1
    pplus = [MPoly.const(1, poly.vars)]
    pminus = [MPoly.const(1, poly.vars)]
    for _ in range(n):
        pplus.append(pplus[-1] * plus)
        pminus.append(pminus[-1] * minus)
    acc = MPoly.const(0, poly.vars)
    for k, a in enumerate(coeffs):
        if a:
            acc = acc + a * pplus[k] * pminus[n - k]
    return acc


def continuous_form(f):
    return to_continuous(f) if f.time_domain == DISCRETE else f


def split_re_im(f):
    """Real and imaginary parts of ``P(jw, r, p)`` for a continuous family."""
    if f.time_domain != CONTINUOUS:
        raise ValueError("split_re_im expects a continuous-time family")
    vars = (W,) + tuple(f.param_names)
    re_terms, im_terms = {}, {}
    unit = [1, _I, -1, -_I]
    for e, c in f.poly.terms.items():
        k = e[0]
        v = canon(c * unit[k % 4])
        key = (k,) + e[1:]
        if real_part(v):
            re_terms[key] = real_part(v)
        if imag_part(v):
            im_terms[key] = imag_part(v)
    return SplitPair(MPoly(vars, re_terms), MPoly(vars, im_terms), tuple(f.param_names))


def _grid(m, params):
    return [[_poly(x, params) for x in row] for row in m]


def _matmul(a, b):
    if not a or not b or len(a[0]) != len(b):
        raise ShapeError("matrix dimensions do not compose")
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), MPoly.const(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def closed_loop(A, B, C, K, time_domain=CONTINUOUS, params=("r", "p")):
    """``A + B K C`` as a :class:`MatrixFamily`."""
    A, B, C, K = (_grid(m, params) for m in (A, B, C, K))
    t = len(A)
    if any(len(row) != t for row in A):
        raise ShapeError("A must be square")
    if len(B) != t or len(C[0]) != t or len(K) != len(B[0]) or len(K[0]) != len(C):
        raise ShapeError(
            f"dimension mismatch: A {t}x{t}, B {len(B)}x{len(B[0])}, "
            f"C {len(C)}x{len(C[0])}, K {len(K)}x{len(K[0])}")
    BKC = _matmul(_matmul(B, K), C)
    entries = [[A[i][j] + BKC[i][j] for j in range(t)] for i in range(t)]
    return MatrixFamily(tuple(map(tuple, entries)), time_domain, tuple(params))


def berkowitz(m):
    """Coefficients ``[1, c1, ..., cn]`` of ``det(xI - M) = sum c_k x^(n-k)``.

    Division-free, so it works over any commutative ring.
    """
    n = len(m)
    one = m[0][0] * 0 + 1
    v = [one, -m[0][0]]
    for k in range(1, n):
        # leading principal k x k block A, new row R, new column C, corner a
        R = m[k][:k]
        Ccol = [m[i][k] for i in range(k)]
        a = m[k][k]
        toep = [one, -a]
        vec = Ccol
        for _ in range(k):
            toep.append(-sum((R[j] * vec[j] for j in range(k)), one * 0))
            vec = [sum((m[i][j] * vec[j] for j in range(k)), one * 0) for i in range(k)]
        # toep has k + 2 entries; new vector = lower-triangular Toeplitz * v
        v = [sum((toep[i - j] * v[j] for j in range(min(i, k) + 1)), one * 0)
             for i in range(k + 2)]
    return v


def charpoly(mf):
    """``det(sI - M)`` as a :class:`PolyFamily` (monic, degree = size)."""
    params = tuple(mf.param_names)
    vars = (S,) + params
    m = [[x.with_vars(vars) for x in row] for row in mf.entries]
    coeffs = berkowitz(m)
    t = len(coeffs) - 1
    poly = MPoly.from_dense([coeffs[t - k] for k in range(t + 1)], S, vars)
    return PolyFamily(poly, mf.time_domain, params)


def leading_component(f):
    """Locus where the leading coefficient in ``s`` vanishes.

    Returns ``a_t`` when it is real, ``Re(a_t)^2 + Im(a_t)^2`` otherwise, and
    the constant 1 when ``a_t`` is a nonzero constant.
    """
    params = tuple(f.param_names)
    a = f.leading_coefficient().with_vars(f.vars)
    if not a:
        raise DegenerateFamilyError("leading coefficient vanishes identically")
    a = a.with_vars(params) if not a.depends_on(S) else a
    if a.is_constant():
        return MPoly.const(1, params)
    if a.is_real():
        return a
    re, im = a.real_part(), a.imag_part()
    return re * re + im * im
