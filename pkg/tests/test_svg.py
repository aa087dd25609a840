import re
import xml.etree.ElementTree as ET
from fractions import Fraction

import numpy as np
import pytest

from ddecomp.cad2d import sample_cloud
from ddecomp.cli.svg import emit_svg, marching_squares
from ddecomp.errors import DomainError
from ddecomp.mpoly import MPoly
from oracles import curve

NS = "{http://www.w3.org/2000/svg}"


def parse(text):
    root = ET.fromstring(text.encode())
    assert root.tag == NS + "svg" and root.get("version") == "1.1"
    return root


def test_circle():
    h = curve("r^2 + p^2 - 1")
    cloud = sample_cloud(h)
    root = parse(emit_svg(h, cloud, (-2, 2, -2, 2), 128, [1, 0, 1, 0, 1]))
    lines = root.findall(f".//{NS}polyline")
    assert len(lines) == 1 and lines[0].get("class") == "closed"
    points = root.find(f".//{NS}g[@class='points']").findall(f"{NS}circle")
    assert len(points) == 5
    legend = [t.text for t in root.iter(NS + "text") if t.text.endswith("stable")]
    assert legend == ["0 stable", "1 stable"]


def test_constant_curve():
    h = MPoly.const(1, ("r", "p"))
    root = parse(emit_svg(h, [(0, 0)], (-1, 1, -1, 1), 16, [2]))
    assert root.findall(f".//{NS}polyline") == []
    assert len(root.find(f".//{NS}g[@class='points']").findall(f"{NS}circle")) == 1


def test_deterministic():
    h = curve("(r^2 + p^2 - 1)*(r^2/4 + p^2/9 - 1)")
    cloud = sample_cloud(h)
    a = emit_svg(h, cloud, (-4, 4, -4, 4), 64)
    b = emit_svg(h, cloud, (-4, 4, -4, 4), 64)
    assert a == b
    assert len(parse(a).findall(f".//{NS}polyline")) == 2


def test_open_curves_and_points_outside():
    h = curve("r*p")
    root = parse(emit_svg(h, [(Fraction(100), 1)], (-1, 1, -1, 1), 33))
    lines = root.findall(f".//{NS}polyline")
    assert lines and all(x.get("class") == "open" for x in lines)
    assert root.find(f".//{NS}g[@class='points']").findall(f"{NS}circle") == []


@pytest.mark.parametrize("box, grid", [((0, 0, -1, 1), 32), ((1, 0, 0, 1), 32),
                                       ((0, 1, 0, float("inf")), 32), ((0, 1, 0, 1), 8)])
def test_bad_arguments(box, grid):
    with pytest.raises(DomainError):
        emit_svg(curve("r"), [], box, grid)


def test_marching_squares_saddle():
    # four corners alternating sign: two separate segments, never a cross
    Z = np.array([[1.0, -1.0], [-1.0, 1.0]])
    lines = marching_squares(Z, np.array([0.0, 1.0]), np.array([0.0, 1.0]))
    assert len(lines) == 2 and all(len(pts) == 2 for _, pts in lines)


def test_coordinates_inside_canvas():
    h = curve("r^2 + p^2 - 1")
    text = emit_svg(h, sample_cloud(h), (-2, 2, -2, 2), 64)
    nums = [float(x) for x in re.findall(r'points="([^"]*)"', text)[0].replace(",", " ").split()]
    assert min(nums) >= 40 and max(nums) <= 600
