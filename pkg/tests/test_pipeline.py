import json
from fractions import Fraction

import pytest

from ddecomp.cli.parser import parse_input
from ddecomp.cli.pipeline import run_pipeline
from ddecomp.cli.report import emit_json
from ddecomp.errors import CommonFactorError, DegenerateFamilyError


def run(text):
    return run_pipeline(parse_input(text))


def test_first_order_family():
    rep = run("poly: s + r\n")
    assert rep.border == "r"
    assert rep.degree == 1
    assert rep.region_count == 2
    by_side = {pt.r > 0: (pt.stable, pt.unstable) for pt in rep.points}
    # root s = -r is stable for r > 0
    assert by_side == {True: (1, 0), False: (0, 1)}
    assert rep.has_stable_region
    assert rep.bounds["lemma1"] == 2


def test_empty_border():
    rep = run("poly: s + 1\n")
    assert rep.region_count == 1 and len(rep.points) == 1
    assert rep.degree == 0
    pt = rep.points[0]
    assert (pt.r, pt.p, pt.stable) == (0, 0, 1)
    assert json.loads(emit_json(rep))["region_count"] == 1


def test_points_sorted_and_consistent():
    rep = run("poly: s^2 + r*s + p\n")
    keys = [(pt.r, pt.p) for pt in rep.points]
    assert keys == sorted(keys)
    seen = {}
    for pt in rep.points:
        assert seen.setdefault(pt.region, (pt.stable, pt.unstable)) == (pt.stable, pt.unstable)
    assert not rep.warnings
    # Hurwitz exactly on r > 0, p > 0
    stable = {pt.stable == 2 for pt in rep.points if pt.r > 0 and pt.p > 0}
    assert stable == {True}


def test_discrete_family():
    rep = run("time: discrete\npoly: s - r - i*p\n")
    # unit circle: inside stable, outside unstable
    assert rep.region_count == 2
    inside = [pt for pt in rep.points if pt.r ** 2 + pt.p ** 2 < 1]
    assert inside and all(pt.stable == 1 for pt in inside)
    assert rep.family == {"t": 1, "d": 1, "time": "discrete"}


def test_leading_component_reported():
    rep = run("poly: r*s^2 + s + 1\n")
    srcs = {c.source: c for c in rep.components}
    assert set(srcs) == {"resultant", "leading"} or set(srcs) == {"leading"}
    assert srcs["leading"].separating


def test_determinism():
    text = "poly: s^2 + (r + i*p)*s + 1\n"
    assert emit_json(run(text)) == emit_json(run(text))


def test_errors_carry_hypothesis_text():
    with pytest.raises(CommonFactorError, match="coprimality"):
        run("poly: (s^2 + 1)*(s + r)\n")
    with pytest.raises(DegenerateFamilyError):
        run("time: discrete\npoly: (s - 1)*(s + r)\n")


def test_degree_warning():
    # Res has degree <= 2td + 2d in general; a plain family stays within it
    rep = run("poly: s^3 + r*s + p\n")
    assert not any("exceeds" in w for w in rep.warnings)
