"""JSON serialization of :class:`RegionReport` (fixed key order)."""

import json
from fractions import Fraction

from ..arith import rat_to_str
from .pipeline import ComponentReport, PointReport, RegionReport


def _float(x):
    s = format(float(x), ".17g")
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def _dump(obj, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return _float(obj)
    if isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_dump(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, dict) for v in obj) and level >= 0:
            items = [pad + _dump(v, indent, level + 1) for v in obj]
            return "[\n" + ",\n".join(items) + "\n" + end + "]"
        return "[" + ", ".join(_dump(v, indent, level + 1) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def report_to_dict(report):
    return {
        "border": report.border,
        "degree": report.degree,
        "bounds": dict(report.bounds),
        "points": [{
            "r": rat_to_str(pt.r),
            "p": rat_to_str(pt.p),
            "r_approx": float(pt.r),
            "p_approx": float(pt.p),
            "stable": pt.stable,
            "unstable": pt.unstable,
            "region": pt.region,
        } for pt in report.points],
        "region_count": report.region_count,
        "has_stable_region": report.has_stable_region,
        "components": [{
            "source": c.source,
            "poly": c.poly,
            "degree": c.degree,
            "separating": c.separating,
        } for c in report.components],
        "family": dict(report.family),
        "warnings": list(report.warnings),
    }


def emit_json(report, indent=2):
    return _dump(report_to_dict(report), indent, 0) + "\n"


def parse_report(text):
    """Inverse of :func:`emit_json`."""
    d = json.loads(text)
    points = [PointReport(Fraction(x["r"]), Fraction(x["p"]), x["stable"], x["unstable"],
                          x["region"]) for x in d["points"]]
    comps = [ComponentReport(c["source"], c["poly"], c["degree"], c["separating"])
             for c in d.get("components", [])]
    return RegionReport(d["border"], d["degree"], d["bounds"], points, d["region_count"],
                        d["has_stable_region"], comps, d.get("family", {}),
                        d.get("warnings", []))
