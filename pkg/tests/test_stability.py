from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from ddecomp.arith import conj, gauss
from ddecomp.errors import BorderContactError, DegreeDropError, DomainError
from ddecomp.family import DISCRETE, PolyFamily
from ddecomp.stability import (RootCount, classify_point, count_for_domain, lhp_count,
                               schur_count)
from oracles import numeric_lhp, poly

small = st.integers(-5, 5)
gcoef = st.builds(gauss, small, small)
coeff_lists = st.lists(gcoef, min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


def polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def test_trivial_cases():
    assert lhp_count([1, 1]) == RootCount(1, 0, 1)          # s + 1
    assert lhp_count([-6, -1, 1]) == RootCount(1, 1, 2)     # (s - 3)(s + 2)
    assert lhp_count([1, 0, 1]).marginal                    # s^2 + 1
    assert lhp_count([gauss(1, 1), 1]) == RootCount(1, 0, 1)
    assert lhp_count([5]) == RootCount(0, 0, 0)
    assert schur_count([Fraction(-1, 2), 1]) == RootCount(1, 0, 1)
    assert schur_count([-2, 1]) == RootCount(0, 1, 1)
    assert schur_count([-1, 1]).marginal
    assert schur_count([1, 1]).marginal                     # root at -1
    assert schur_count([gauss(0, -1), 1]).marginal          # root at i


def test_accepts_mpoly():
    assert lhp_count(poly("s^2 + 3*s + 2")) == RootCount(2, 0, 2)
    with pytest.raises(DomainError):
        lhp_count(poly("s + r"))
    with pytest.raises(DomainError):
        lhp_count([0, 0])


def test_root_count_validation():
    with pytest.raises(ValueError):
        RootCount(1, 1, 3)
    with pytest.raises(ValueError):
        RootCount(-1, 2, 1)


def test_mirror_pair_common_factor():
    # (s - (1 + 2i)) (s - (-1 + 2i)) (s + 3): the mirror pair is shared by R and I
    a = gauss(1, 2)
    q = polymul(polymul([-a, 1], [conj(a), 1]), [3, 1])
    assert lhp_count(q) == RootCount(2, 1, 3)


def test_classify_point():
    f = PolyFamily(poly("s + r"))
    assert classify_point(f, (1, 0)) == RootCount(1, 0, 1)
    assert classify_point(f, (-1, 0)) == RootCount(0, 1, 1)
    with pytest.raises(BorderContactError):
        classify_point(f, (0, 0))
    with pytest.raises(DegreeDropError):
        classify_point(PolyFamily(poly("r*s^2 + s + 1")), (0, 5))
    g = PolyFamily(poly("s - r"), DISCRETE)
    assert classify_point(g, (Fraction(1, 2), 0)).stable == 1
    assert count_for_domain([2, 1], DISCRETE).unstable == 1


@given(coeff_lists)
def test_lhp_matches_companion_matrix(cs):
    left, right, roots = numeric_lhp(cs)
    assume(np.all(np.abs(roots.real) > 1e-6))
    rc = lhp_count(cs)
    assert not rc.marginal
    assert (rc.stable, rc.unstable) == (left, right)


@given(coeff_lists, gcoef)
def test_lhp_with_forced_mirror_pairs(cs, a):
    q = polymul(cs, [-a, 1])
    q = polymul(q, [conj(a), 1])
    left, right, roots = numeric_lhp(q)
    assume(np.all(np.abs(roots.real) > 1e-6))
    assert (lhp_count(q).stable, lhp_count(q).unstable) == (left, right)


@given(coeff_lists)
def test_schur_matches_moduli(cs):
    _, _, roots = numeric_lhp(cs)
    assume(np.all(np.abs(np.abs(roots) - 1) > 1e-6))
    rc = schur_count(cs)
    assert rc.stable == int(np.sum(np.abs(roots) < 1))


@given(coeff_lists)
def test_reflection_swaps_counts(cs):
    # q(-s) has the mirrored roots
    refl = [c * (-1) ** k for k, c in enumerate(cs)]
    a, b = lhp_count(cs), lhp_count(refl)
    if a.marginal:
        assert b.marginal
    else:
        assert (a.stable, a.unstable) == (b.unstable, b.stable)
