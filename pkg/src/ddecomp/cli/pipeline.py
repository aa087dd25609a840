"""Problem -> border curve -> sample cloud -> classified region report."""

from dataclasses import dataclass, field

from ..bounds import (curve_complement_bound, matrix_planar_bound,
                      matrix_warren_bound, planar_bound, warren_bound)
from ..border import border_curve
from ..cad2d import count_regions, sample_cloud, segment_crossings
from ..errors import BoundViolationError, DegenerateSegmentError
from ..stability import classify_point


@dataclass(frozen=True)
class PointReport:
    r: object
    p: object
    stable: int
    unstable: int
    region: int


@dataclass(frozen=True)
class ComponentReport:
    source: str
    poly: str
    degree: int
    separating: bool


@dataclass
class RegionReport:
    border: str
    degree: int
    bounds: dict
    points: list
    region_count: int
    has_stable_region: bool
    components: list = field(default_factory=list)
    family: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    curve: object = field(default=None, compare=False, repr=False)


def bounds_block(pr, f, degree):
    """Bounds keyed by the result they come from, in report order."""
    t, d = f.t, f.d
    out = {"lemma1": curve_complement_bound(degree)}
    if t >= 1:
        out["theorem2"] = planar_bound(t, d)
        out["theorem1"] = warren_bound(t, d, 2)
    if pr.kind == "matrix":
        mf = pr.matrix_family()
        out["corollary1"] = matrix_planar_bound(mf.size, mf.d, pr.time_domain)
        out["corollary2"] = matrix_warren_bound(mf.size, mf.d, 2, pr.time_domain)
    return out


def _separating(components, pts, counts):
    """Which components have different classifications on their two sides.

    Candidate pairs are consecutive cells of a stack and points of adjacent
    stacks.  When a pair with different counts is joined by a segment that
    meets the border exactly once, the component it meets is separating.
    """
    flags = [False] * len(components)
    polys = [c for _, c in components]
    stacks = {}
    for x in pts:
        stacks.setdefault(x.r, []).append(x)
    cols = [sorted(stacks[r0], key=lambda x: x.p) for r0 in sorted(stacks)]
    pairs = [(a, b) for col in cols for a, b in zip(col, col[1:])]
    pairs += [(a, b) for c1, c2 in zip(cols, cols[1:]) for a in c1 for b in c2]
    for a, b in pairs:
        if all(flags):
            break
        if counts[a] == counts[b]:
            continue
        try:
            hits = [segment_crossings(c, a, b) for c in polys]
        except DegenerateSegmentError:
            continue
        if sum(hits) == 1:
            flags[hits.index(1)] = True
    return flags


def run_pipeline(pr):
    """Exact D-decomposition report for a parsed problem."""
    f = pr.family()
    border = border_curve(f)
    h = border.h
    degree = border.degree
    warnings = []

    cap = 2 * f.t * f.d + 2 * f.d
    if degree > cap:
        warnings.append(f"border degree {degree} exceeds 2td + 2d = {cap}")

    cloud = sample_cloud(h)
    part = count_regions(h, cloud)
    bound = curve_complement_bound(degree)
    if part.region_count > bound:
        raise BoundViolationError(
            f"{part.region_count} regions exceed the bound {bound} for a degree-{degree} curve")

    counts = {x: classify_point(f, x) for x in part.points}
    seen = {}
    for x in part.points:
        rid = part.region_of[x]
        c = counts[x]
        key = (c.stable, c.unstable)
        if seen.setdefault(rid, key) != key:
            warnings.append(f"region {rid} holds points with different root counts")

    points = [PointReport(x.r, x.p, counts[x].stable, counts[x].unstable, part.region_of[x])
              for x in part.points]
    flags = _separating(border.components, part.points,
                        {x: (counts[x].stable, counts[x].unstable) for x in part.points})
    components = [ComponentReport(src, str(poly), poly.degree(), flag)
                  for (src, poly), flag in zip(border.components, flags)]
    return RegionReport(
        border=str(h),
        degree=degree,
        bounds=bounds_block(pr, f, degree),
        points=points,
        region_count=part.region_count,
        has_stable_region=any(pt.unstable == 0 for pt in points),
        components=components,
        family={"t": f.t, "d": f.d, "time": pr.time_domain},
        warnings=warnings,
        curve=h,
    )
