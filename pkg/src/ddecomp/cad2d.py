"""Sample points in every connected region of ``{h(r, p) != 0}``.

Open cells of a cylindrical decomposition give the cloud.  Cells are merged
into regions on exact certificates only: delineability inside a strip, and
horizontal segments with a zero Sturm count across critical abscissae.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, lcm

from . import dup
from . import kernels as K
from .errors import DegenerateSegmentError, DomainError
from .mpoly import MPoly, squarefree_part


@dataclass(frozen=True, order=True)
class SamplePoint:
    r: Fraction
    p: Fraction
    stack_index: int = field(default=0, compare=False)
    cell_index: int = field(default=0, compare=False)


@dataclass
class RegionPartition:
    points: list
    region_of: dict
    region_count: int
    segments_tested: int = 0

    def regions(self):
        """Point lists per region id, in id order."""
        out = [[] for _ in range(self.region_count)]
        for pt in self.points:
            out[self.region_of[pt]].append(pt)
        return out


# -- integer views of h ---------------------------------------------------------

class _Curve:
    """``h`` as an integer grid ``g[i][j]`` = coefficient of ``r^i p^j``."""

    def __init__(self, h):
        if isinstance(h, _Curve):
            self.__dict__.update(h.__dict__)
            return
        if not isinstance(h, MPoly):
            h = MPoly.const(h, ("r", "p"))
        if not h.is_real():
            raise DomainError("curve needs real coefficients")
        if len(h.vars) != 2:
            extra = [v for v in h.used_vars()]
            if len(extra) > 2:
                raise DomainError(f"curve {h} has more than two variables")
            names = tuple(extra) + tuple(v for v in ("r", "p") if v not in extra)
            h = h.with_vars(names[:2])
        self.h = h
        m = h.denominator()
        D = max(h.degree(), 0)
        grid = [[0] * (D + 1) for _ in range(D + 1)]
        for (i, j), c in h.terms.items():
            grid[i][j] = int(c * m)
        self.grid = grid
        self.D = D

    def deg_p(self):
        return max((j for row in self.grid for j, c in enumerate(row) if c), default=-1)

    def coeffs_in_p(self):
        """Integer polynomials in ``r`` for each power of ``p``."""
        D = self.D
        return [dup.strip([self.grid[i][j] for i in range(D + 1)]) for j in range(D + 1)]

    def at_r(self, r0):
        """Integer polynomial in ``p`` proportional to ``h(r0, p)``."""
        r0 = Fraction(r0)
        num, den = r0.numerator, r0.denominator
        cols = self.coeffs_in_p()
        top = max(len(c) for c in cols)
        # common scale den^(top - 1) for every coefficient
        return dup.strip([K.eval_hom(c, num, den) * den ** (top - len(c)) if c else 0
                          for c in cols])

    def sign_at(self, r0, p0):
        g = self.at_r(r0)
        return dup.sign_at(g, p0) if g else 0


def _sqf_curve(h):
    # repeated factors leave the zero set alone but kill the discriminant
    if isinstance(h, _Curve):
        return h
    if isinstance(h, MPoly) and h.used_vars():
        h = squarefree_part(h)
    return _Curve(h)


# -- projection -----------------------------------------------------------------

def _poly_gcd_list(polys):
    g = []
    for a in polys:
        if a:
            g = dup.gcd(g, a) if g else dup.canonical(a)
            if len(g) == 1:
                return [1]
    return g


def _interpolate(xs, ys):
    """Newton interpolation through integer nodes; integer coefficients."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - k])
    poly = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        nxt = [Fraction(0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k + 1] += c
            nxt[k] -= c * xs[i]
        nxt[0] += coef[i]
        poly = nxt
    return dup.from_rationals(poly)


def _nodes():
    k = 0
    while True:
        yield k
        k = -k if k > 0 else -k + 1


def discriminant_in_p(cols, bound):
    """``Res_p(f, df/dp)`` for ``f`` given by its coefficients in ``p``.

    Evaluated at integer ``r`` (skipping zeros of the leading coefficient)
    and interpolated; one extra node checks the degree bound.
    """
    lc = cols[-1]
    xs, ys = [], []
    for x in _nodes():
        if dup.sign_at(lc, x) == 0:
            continue
        fx = [K.eval_hom(c, x, 1) if c else 0 for c in cols]
        xs.append(x)
        ys.append(dup.resultant(fx, dup.deriv(fx)))
        if len(xs) == bound + 2:
            break
    res = _interpolate(xs[:-1], ys[:-1])
    if K.eval_hom(res, xs[-1], 1) != ys[-1]:
        raise ArithmeticError("discriminant degree bound violated")
    return res


_PROJECTIONS = {}


def _projection(curve):
    """Integer polynomial in ``r`` whose real roots are the critical abscissae."""
    key = tuple(map(tuple, curve.grid))
    if key not in _PROJECTIONS:
        if len(_PROJECTIONS) > 64:
            _PROJECTIONS.clear()
        _PROJECTIONS[key] = _compute_projection(curve)
    return list(_PROJECTIONS[key])


def _compute_projection(curve):
    cols = [c for c in curve.coeffs_in_p()]
    while cols and not cols[-1]:
        cols.pop()
    if not cols:
        return []
    cont = _poly_gcd_list(cols)
    if len(cols) == 1:
        return dup.sqf_part(cols[0])
    if len(cont) > 1:
        cols = [dup.divexact(c, cont) if c else [] for c in cols]
    D = curve.D
    disc = discriminant_in_p(cols, D * (D - 1))
    proj = K.mul(dup.sqf_part(cols[-1]), dup.sqf_part(disc) if disc else [1])
    if len(cont) > 1:
        proj = K.mul(proj, dup.sqf_part(cont))
    return dup.sqf_part(proj)


def _separate(a, ivs):
    """Refine isolating intervals of ``a`` until consecutive ones have a gap."""
    ivs = list(ivs)
    changed = True
    while changed:
        changed = False
        for i in range(len(ivs) - 1):
            x, y = ivs[i], ivs[i + 1]
            if x.hi < y.lo:
                continue
            changed = True
            wide = i if (x.hi - x.lo) >= (y.hi - y.lo) else i + 1
            iv = ivs[wide]
            ivs[wide] = dup.refine(a, iv, (iv.hi - iv.lo) / 2)
    return ivs


def _roots(a):
    if len(a) <= 1:
        return []
    a = dup.sqf_part(a)
    return _separate(a, dup.isolate(a))


def critical_abscissae(h):
    """Sorted disjoint isolating intervals of the critical ``r`` values."""
    curve = _sqf_curve(h)
    if curve.D <= 0:
        return []
    return _roots(_projection(curve))


# -- sampling ------------------------------------------------------------------

def _simplest_nonneg(lo, hi):
    # 0 <= lo < hi, hi may be None (+inf)
    fl = floor(lo)
    if hi is None or fl + 1 < hi:
        return Fraction(fl + 1)
    if lo == fl:
        return fl + 1 / _simplest_nonneg(1 / (hi - fl), None)
    return fl + 1 / _simplest_nonneg(1 / (hi - fl), 1 / (lo - fl))


def simplest_rational_in(lo, hi):
    """Rational of least denominator (then least ``|num|``) in ``(lo, hi)``.

    ``None`` stands for an infinite endpoint.
    """
    lo = None if lo is None else Fraction(lo)
    hi = None if hi is None else Fraction(hi)
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    if (lo is None or lo < 0) and (hi is None or hi > 0):
        return Fraction(0)
    if lo is not None and lo >= 0:
        return _simplest_nonneg(lo, hi)
    return -_simplest_nonneg(-hi, None if lo is None else -lo)


def _gap_samples(ivs):
    if not ivs:
        return [Fraction(0)]
    out = [simplest_rational_in(None, ivs[0].lo)]
    for x, y in zip(ivs, ivs[1:]):
        out.append(simplest_rational_in(x.hi, y.lo))
    out.append(simplest_rational_in(ivs[-1].hi, None))
    return out


def sample_cloud(h):
    """At least one rational point in every region of the complement of h = 0."""
    curve = _sqf_curve(h)
    if not curve.h:
        raise DomainError("sample cloud of the zero polynomial")
    if curve.D <= 0:
        return [SamplePoint(Fraction(0), Fraction(0), 0, 0)]
    cloud = []
    for si, r0 in enumerate(_gap_samples(critical_abscissae(curve))):
        g = curve.at_r(r0)
        for ci, p0 in enumerate(_gap_samples(_roots(g))):
            cloud.append(SamplePoint(r0, p0, si, ci))
    return cloud


# -- connectivity ---------------------------------------------------------------

def _restrict(curve, a, b):
    L = lcm(a.r.denominator, a.p.denominator, b.r.denominator, b.p.denominator)
    ar, ap = int(a.r * L), int(a.p * L)
    dr, dp = int(b.r * L) - ar, int(b.p * L) - ap
    return K.line_restrict(curve.grid, ar, ap, dr, dp, L)


def segment_crossings(h, a, b):
    """Distinct points of ``h = 0`` on the open segment from ``a`` to ``b``."""
    curve = _Curve(h)
    a, b = _point(a), _point(b)
    if (a.r, a.p) == (b.r, b.p):
        return 0
    g = _restrict(curve, a, b)
    if not g:
        raise DegenerateSegmentError(f"segment {a}-{b} lies on the curve")
    if len(g) == 1:
        return 0
    v = K.descartes_01(g)
    if v <= 1:
        # v = 1 means exactly one root in (0, 1)
        return v
    return dup.sturm_count(dup.sqf_part(g), 0, 1)


def _point(x):
    if isinstance(x, SamplePoint):
        return x
    r, p = x
    return SamplePoint(Fraction(r), Fraction(p))


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True


class _Stack:
    """Cells of the vertical line ``r = r0``: sub-gaps between root intervals."""

    def __init__(self, curve, r0):
        self.r = Fraction(r0)
        g = curve.at_r(self.r)
        ivs = _roots(g)
        if ivs:
            a = dup.sqf_part(g)
            ivs = [iv if iv.exact else dup.refine(a, iv, min(iv.hi - iv.lo, 1) / 1024)
                   for iv in ivs]
        self.roots = ivs
        bounds = [None] + [x for iv in ivs for x in (iv.lo, iv.hi)] + [None]
        self.gaps = [(bounds[2 * k], bounds[2 * k + 1]) for k in range(len(ivs) + 1)]

    def cell_of(self, p):
        k = 0
        for iv in self.roots:
            if iv.hi <= p and not (iv.exact and iv.lo == p):
                k += 1
        return k


def _overlap(a, b):
    lo = a[0] if b[0] is None else b[0] if a[0] is None else max(a[0], b[0])
    hi = a[1] if b[1] is None else b[1] if a[1] is None else min(a[1], b[1])
    if lo is not None and hi is not None and not lo < hi:
        return None
    return lo, hi


def _bridge_abscissae(crit, depth):
    """Rational abscissae hugging each critical interval from both sides.

    Returns, per critical interval, a list of (left, right) pairs from far to
    near.
    """
    out = []
    for i, c in enumerate(crit):
        left_end = crit[i - 1].hi if i > 0 else c.lo - 2
        right_end = crit[i + 1].lo if i + 1 < len(crit) else c.hi + 2
        pairs = []
        for level in range(1, depth + 1):
            f = Fraction(1, 8 ** level)
            lo = simplest_rational_in(c.lo - (c.lo - left_end) * f, c.lo)
            hi = simplest_rational_in(c.hi, c.hi + (right_end - c.hi) * f)
            pairs.append((lo, hi))
        out.append(pairs)
    return out


def _tight_critical(curve, width):
    """Critical intervals refined below ``width`` (relative to their gaps)."""
    proj = _projection(curve)
    crit = _roots(proj)
    if not crit:
        return proj, crit
    a = dup.sqf_part(proj)
    out = []
    for i, c in enumerate(crit):
        if c.exact:
            out.append(c)
            continue
        gaps = []
        if i > 0:
            gaps.append(c.lo - crit[i - 1].hi)
        if i + 1 < len(crit):
            gaps.append(crit[i + 1].lo - c.hi)
        target = min(gaps + [c.hi - c.lo, Fraction(1)]) * width
        out.append(dup.refine(a, c, target))
    return a, out


def count_regions(h, cloud, depth=2):
    """Partition ``cloud`` into regions of the complement of ``h = 0``.

    Two cells are merged only on an exact certificate: either they are the
    same band of a delineable strip (equal cell index over an interval free
    of critical abscissae), or a segment joining them meets the curve nowhere.
    """
    curve = _sqf_curve(h)
    pts = sorted(cloud)
    if any(curve.sign_at(x.r, x.p) == 0 for x in pts):
        raise DomainError("a sample point lies on the curve")
    if curve.D <= 0:
        return RegionPartition(pts, {x: 0 for x in pts}, 1 if pts else 0, 0)

    proj, crit = _tight_critical(curve, Fraction(1, 16))

    def strip_of(r0):
        # index of the open strip containing r0; None when r0 is not
        # separated from every critical value by the isolating intervals
        if dup.sign_at(proj, r0) == 0:
            return None
        k = 0
        for c in crit:
            if c.hi < r0:
                k += 1
            elif c.lo <= r0:
                return None
        return k

    stacks = {}

    def stack(r0):
        st = stacks.get(r0)
        if st is None:
            st = stacks[r0] = _Stack(curve, r0)
        return st

    nodes = {}
    reps = []

    def node(r0, k):
        key = (r0, k)
        if key not in nodes:
            nodes[key] = len(reps)
            lo, hi = stack(r0).gaps[k]
            reps.append(SamplePoint(r0, simplest_rational_in(lo, hi)))
        return nodes[key]

    strips = {}
    loose = []
    for x in pts:
        st = stack(x.r)
        s = strip_of(x.r)
        if s is None:
            loose.append(x)
        else:
            strips.setdefault(s, set()).add(x.r)
    bridges = _bridge_abscissae(crit, depth)
    for i, pairs in enumerate(bridges):
        for lo, hi in pairs:
            strips.setdefault(i, set()).add(lo)
            strips.setdefault(i + 1, set()).add(hi)

    for rs in strips.values():
        for r0 in rs:
            for k in range(len(stack(r0).gaps)):
                node(r0, k)
    point_node = {}
    for x in pts:
        if strip_of(x.r) is not None:
            point_node[x] = node(x.r, stack(x.r).cell_of(x.p))
        else:
            point_node[x] = len(reps)
            nodes[(x.r, x.p, "loose")] = len(reps)
            reps.append(x)

    dsu = _DSU(len(reps))
    tested = 0

    # delineability: equal cell index inside one strip is one band
    for rs in strips.values():
        rs = sorted(rs)
        ncell = len(stack(rs[0]).gaps)
        for r0 in rs[1:]:
            if len(stack(r0).gaps) != ncell:
                raise ArithmeticError("stacks of one strip disagree: projection incomplete")
            for k in range(ncell):
                dsu.union(nodes[(rs[0], k)], nodes[(r0, k)])

    def try_segment(a, b):
        nonlocal tested
        tested += 1
        try:
            return segment_crossings(curve, a, b) == 0
        except DegenerateSegmentError:
            return False

    # across each critical interval: horizontal segments between bridge cells
    for pairs in bridges:
        for lo, hi in pairs:
            A, B = stack(lo), stack(hi)
            for ka, ga in enumerate(A.gaps):
                for kb, gb in enumerate(B.gaps):
                    na, nb = nodes[(lo, ka)], nodes[(hi, kb)]
                    if dsu.find(na) == dsu.find(nb):
                        continue
                    ov = _overlap(ga, gb)
                    if ov is None:
                        continue
                    for y in _candidates(ov):
                        if try_segment(SamplePoint(lo, y), SamplePoint(hi, y)):
                            dsu.union(na, nb)
                            break

    # points on critical abscissae: straight segments to every other cell
    for x in loose:
        nx = point_node[x]
        sx = curve.sign_at(x.r, x.p)
        for j, rep in enumerate(reps):
            if j == nx or dsu.find(j) == dsu.find(nx):
                continue
            if curve.sign_at(rep.r, rep.p) != sx:
                continue
            if try_segment(x, rep):
                dsu.union(nx, j)

    ids = {}
    region_of = {}
    for x in pts:
        root = dsu.find(point_node[x])
        region_of[x] = ids.setdefault(root, len(ids))
    return RegionPartition(pts, region_of, len(ids), tested)


def _candidates(ov):
    # the simplest ordinate, one on each side of it (in case it runs through
    # a singular point) and the midpoint
    lo, hi = ov
    y0 = simplest_rational_in(lo, hi)
    ys = [y0, simplest_rational_in(lo, y0), simplest_rational_in(y0, hi)]
    if lo is not None and hi is not None:
        ys.append((lo + hi) / 2)
    out = []
    for y in ys:
        if y not in out:
            out.append(y)
    return out
