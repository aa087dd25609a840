from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, settings, strategies as st

from ddecomp.arith import GaussianRational, gauss
from ddecomp.errors import DomainError
from ddecomp.mpoly import (MPoly, bareiss_det, content, derivative, divexact, evaluate, gcd,
                           isolate_real_roots, resultant, squarefree_part, sturm_count,
                           sylvester_matrix)
from oracles import curve, from_sympy, poly, proportional, sylvester_resultant, to_sympy

V = ("s", "r", "p")
small = st.integers(-4, 4)
gcoef = st.builds(gauss, small, small)


def mpolys(vars=V, max_deg=2, complex_=True, max_terms=5):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in vars])
    coef = gcoef if complex_ else small
    return st.dictionaries(exps, coef, max_size=max_terms).map(lambda t: MPoly(vars, t))


def test_construction_and_structure():
    s, r = MPoly.var("s", V), MPoly.var("r", V)
    f = s ** 2 * r + 3
    assert f.degree() == 3 and f.degree("s") == 2 and f.degree("p") == 0
    assert f.depends_on("r") and not f.depends_on("p")
    assert f.used_vars() == ("s", "r")
    assert MPoly.const(0, V).degree() == -1
    assert MPoly.const(5, V).is_constant()
    with pytest.raises(ValueError):
        MPoly(("x", "x"))
    with pytest.raises(ValueError):
        MPoly(("x",), {(1, 2): 1})
    with pytest.raises(DomainError):
        f.constant_value()


def test_equality_ignores_unused_variables():
    a = MPoly.var("r", ("r", "p"))
    b = MPoly.var("r", ("s", "r"))
    assert a == b and hash(a) == hash(b)
    assert MPoly.const(3, V) == 3


def test_string_round_trip():
    f = poly("(4 - 22*i)*s^2 + (30 - 20*i)*r*s - 5/2*p + 1")
    assert poly(str(f)) == f


def test_division():
    f = curve("(r + p)*(r - 2*p)")
    assert divexact(f, curve("r + p")) == curve("r - 2*p")
    assert f / 2 == curve("(r + p)*(r - 2*p)/2")
    with pytest.raises(ZeroDivisionError):
        f / 0
    with pytest.raises(ArithmeticError):
        divexact(f, curve("r + 1"))


def test_normalize():
    assert curve("-6*r^2 + 4*p").normalize() == curve("3*r^2 - 2*p")
    assert curve("r/2 + p/3").normalize() == curve("3*r + 2*p")
    g = poly("(2*i)*r + (2*i)").with_vars(("r", "p"))
    assert g.normalize() == curve("r + 1")


def test_content_and_squarefree_keep_zero_set():
    # r*(r^2 + p^2 - 1)^2: the content factor r is a vertical line
    f = curve("r*(r^2 + p^2 - 1)^2")
    assert content(f, "p") == curve("r")
    assert squarefree_part(f, "p") == curve("r*(r^2 + p^2 - 1)").normalize()
    assert squarefree_part(curve("r^3*(r - 1)^2"), "p") == curve("r*(r - 1)").normalize()
    with pytest.raises(DomainError):
        squarefree_part(MPoly.const(0, ("r", "p")))


def test_resultant_degree_cases():
    s = MPoly.var("s", V)
    r = MPoly.var("r", V)
    # one side free of s: Res = other^deg
    assert resultant(r, s ** 3 + 1, "s") == r ** 3
    assert resultant(s - r, s + r, "s") == 2 * r
    with pytest.raises(DomainError):
        resultant(r, r + 1, "s")
    with pytest.raises(DomainError):
        resultant(MPoly.const(0, V), s, "s")


def test_sylvester_and_bareiss():
    f, g = poly("s^2 + r"), poly("s - p")
    m = sylvester_matrix(f, g, "s")
    assert len(m) == 3 and all(len(row) == 3 for row in m)
    assert bareiss_det(m) == poly("p^2 + r")


def test_univariate_roots():
    f = curve("r^3 - 2*r")
    ivs = isolate_real_roots(f)
    assert len(ivs) == 3
    assert sturm_count(f, 1, None) == 1
    with pytest.raises(DomainError):
        isolate_real_roots(curve("r*p"))


@given(mpolys(), mpolys())
def test_ring_ops_match_sympy(f, g):
    assert to_sympy(f * g) == sp.expand(to_sympy(f) * to_sympy(g))
    assert to_sympy(f - g) == sp.expand(to_sympy(f) - to_sympy(g))
    assert from_sympy(to_sympy(f), V) == f


@given(mpolys(), st.integers(-3, 3), gcoef)
def test_evaluate_and_derivative(f, a, b):
    S, R, P = sp.symbols(V)
    e = to_sympy(f)
    assert to_sympy(evaluate(f, {"r": a})) == sp.expand(e.subs(R, a))
    bs = sp.Rational(b.re) + sp.I * sp.Rational(b.im) if isinstance(b, GaussianRational) else b
    assert to_sympy(f.evaluate({"s": b})) == sp.expand(e.subs(S, bs))
    assert to_sympy(derivative(f, "p")) == sp.diff(e, P)


@settings(max_examples=40)
@given(mpolys(max_deg=2), mpolys(max_deg=2))
def test_resultant_matches_sympy(f, g):
    assume(f.degree("s") >= 1 and g.degree("s") >= 1)
    S = sp.Symbol("s")
    expect = sylvester_resultant(to_sympy(f), to_sympy(g), S)
    assert to_sympy(resultant(f, g, "s")) == expect


@settings(max_examples=40)
@given(mpolys(("r", "p"), 2, False), mpolys(("r", "p"), 2, False),
       mpolys(("r", "p"), 1, False, 3))
def test_gcd_matches_sympy(a, b, c):
    assume(a and b and c)
    f, g = a * c, b * c
    got = gcd(f, g)
    expect = sp.gcd(to_sympy(f), to_sympy(g))
    assert proportional(to_sympy(got), expect)
    assert divexact(f, got) * got == f


@settings(max_examples=40)
@given(mpolys(("r", "p"), 2, False, 4), mpolys(("r", "p"), 1, False, 3))
def test_squarefree_matches_sympy(a, b):
    assume(a and b and not b.is_constant())
    f = a * b ** 2
    got = squarefree_part(f, "p")
    _, factors = sp.factor_list(to_sympy(f))
    expect = sp.Integer(1)
    for fac, _m in factors:
        expect *= fac
    assert proportional(to_sympy(got), expect)


def test_gaussian_resultant_is_exact():
    f = poly("(1 + 2*i)*s^2 + r*s + (3*i)")
    g = poly("s - (1/2)*p")
    res = resultant(f, g, "s")
    S = sp.Symbol("s")
    assert to_sympy(res) == sylvester_resultant(to_sympy(f), to_sympy(g), S)
    assert res.evaluate({"r": 0, "p": 0}) == gauss(0, 3)
