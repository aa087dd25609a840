from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, settings, strategies as st

from ddecomp.arith import gauss
from ddecomp.errors import DegenerateFamilyError, ShapeError
from ddecomp.family import (CONTINUOUS, DISCRETE, MatrixFamily, PolyFamily, berkowitz, bilinear,
                            charpoly, closed_loop, continuous_form, leading_component,
                            split_re_im, to_continuous)
from ddecomp.mpoly import MPoly
from oracles import curve, poly, to_sympy

V = ("s", "r", "p")
S, R, P = sp.symbols(V)
small = st.integers(-3, 3)


@st.composite
def families(draw, max_t=4):
    t = draw(st.integers(1, max_t))
    terms = {}
    for k in range(t + 1):
        for _ in range(draw(st.integers(0, 2))):
            e = (k, draw(st.integers(0, 1)), draw(st.integers(0, 1)))
            terms[e] = gauss(draw(small), draw(small))
    terms[(t, 0, 0)] = gauss(draw(st.integers(1, 3)), draw(small))
    return MPoly(V, terms)


def test_degrees():
    f = PolyFamily(poly("s^6 + (r + i*p)*s^5 + 3/2"), DISCRETE)
    assert (f.t, f.d) == (6, 1)
    assert PolyFamily(poly("s*r^2*p + 1")).d == 3


def test_family_validation():
    with pytest.raises(ValueError):
        PolyFamily(poly("s + r"), "hybrid")
    with pytest.raises(DegenerateFamilyError):
        PolyFamily(poly("r + p"))
    with pytest.raises(ValueError):
        PolyFamily(MPoly.var("q", ("s", "q")))


def test_specialize():
    f = PolyFamily(poly("s^2 + r*s + p"))
    assert f.specialize(2, Fraction(1, 2)) == poly("s^2 + 2*s + 1/2")


def test_bilinear_simple():
    # z - 1/2 -> (s + 1) - (s - 1)/2 = s/2 + 3/2
    f = PolyFamily(poly("s - 1/2"), DISCRETE)
    assert to_continuous(f).poly == poly("s/2 + 3/2")
    assert continuous_form(PolyFamily(poly("s + r"))).poly == poly("s + r")


def test_bilinear_pinned_root():
    with pytest.raises(DegenerateFamilyError):
        to_continuous(PolyFamily(poly("(s - 1)*(s + r)"), DISCRETE))
    with pytest.raises(ValueError):
        to_continuous(PolyFamily(poly("s + r")))


@settings(max_examples=40)
@given(families())
def test_bilinear_matches_sympy(f):
    n = f.degree("s")
    expect = sp.expand(sp.cancel((S - 1) ** n * to_sympy(f).subs(S, (S + 1) / (S - 1))))
    assert sp.expand(to_sympy(bilinear(f)) - expect) == 0


def test_split_re_im_first_order():
    # s + r  ->  R = r, I = w
    sp_ = split_re_im(PolyFamily(poly("s + r")))
    assert sp_.R == MPoly.var("r", ("w", "r", "p"))
    assert sp_.I == MPoly.var("w", ("w", "r", "p"))
    with pytest.raises(ValueError):
        split_re_im(PolyFamily(poly("s + r"), DISCRETE))


@settings(max_examples=40)
@given(families())
def test_split_re_im_matches_sympy(f):
    parts = split_re_im(PolyFamily(f))
    w = sp.Symbol("w", real=True)
    r, p = sp.symbols("r p", real=True)
    e = to_sympy(f).subs({S: sp.I * w, R: r, P: p})
    e = sp.expand(e)
    re, im = sp.expand(sp.re(e)), sp.expand(sp.im(e))
    W = sp.Symbol("w")
    got_re = to_sympy(parts.R).subs({W: w, R: r, P: p})
    got_im = to_sympy(parts.I).subs({W: w, R: r, P: p})
    assert sp.expand(got_re - re) == 0
    assert sp.expand(got_im - im) == 0


def test_leading_component():
    assert leading_component(PolyFamily(poly("s^2 + 1"))) == 1
    assert leading_component(PolyFamily(poly("r*s^2 + 1"))) == curve("r")
    lc = leading_component(PolyFamily(poly("(r + 23/20 + i*p)*s + 1")))
    assert 400 * lc == curve("400*r^2 + 920*r + 400*p^2 + 529")


def test_closed_loop_shapes():
    A = [[0, 1], [-2, -3]]
    B = [[0], [1]]
    C = [[1, 0]]
    K = [[MPoly.var("r", ("r", "p"))]]
    mf = closed_loop(A, B, C, K)
    f = charpoly(mf)
    # s^2 + 3 s + 2 - r
    assert f.poly == poly("s^2 + 3*s + 2 - r")
    with pytest.raises(ShapeError):
        closed_loop(A, B, [[1, 0, 0]], K)
    with pytest.raises(ShapeError):
        MatrixFamily(((1, 2),))


@settings(max_examples=25)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(st.tuples(small, small, small), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_charpoly_matches_sympy(rows):
    vars = ("r", "p")
    r, p = MPoly.var("r", vars), MPoly.var("p", vars)
    m = [[a + b * r + c * p for a, b, c in row] for row in rows]
    f = charpoly(MatrixFamily(tuple(map(tuple, m))))
    M = sp.Matrix([[a + b * R + c * P for a, b, c in row] for row in rows])
    expect = sp.expand((S * sp.eye(len(rows)) - M).det())
    assert to_sympy(f.poly) == expect
    assert f.t == len(rows)


def test_berkowitz_numeric():
    assert berkowitz([[2]]) == [1, -2]
    assert berkowitz([[1, 2], [3, 4]]) == [1, -5, -2]
