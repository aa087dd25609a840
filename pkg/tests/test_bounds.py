import pytest
from hypothesis import given, strategies as st

from ddecomp.bounds import (bounds_table, curve_complement_bound, matrix_planar_bound,
                            matrix_warren_bound, planar_bound, warren_bound)
from ddecomp.family import CONTINUOUS, DISCRETE


@pytest.mark.parametrize("args, value", [
    ((1, 1, 1), 48), ((6, 1, 2), 4704), ((3, 0, 2), 0)])
def test_warren(args, value):
    assert warren_bound(*args) == value


@pytest.mark.parametrize("q, value", [(10, 56), (4, 11), (0, 1), (1, 2), (2, 4)])
def test_curve_complement(q, value):
    assert curve_complement_bound(q) == value


@pytest.mark.parametrize("t, d, value", [(6, 1, 106), (2, 2, 79), (1, 0, 1)])
def test_planar(t, d, value):
    assert planar_bound(t, d) == value


@pytest.mark.parametrize("args, value", [
    ((3, 1, CONTINUOUS), 172), ((3, 1, DISCRETE), 301), ((1, 0, CONTINUOUS), 1)])
def test_matrix_planar(args, value):
    assert matrix_planar_bound(*args) == value


@pytest.mark.parametrize("args, value", [
    ((2, 1, 2, CONTINUOUS), 1536), ((2, 1, 2, DISCRETE), 3456),
    ((4, 0, 3, CONTINUOUS), 0), ((4, 0, 3, DISCRETE), 0)])
def test_matrix_warren(args, value):
    assert matrix_warren_bound(*args) == value


@pytest.mark.parametrize("call", [
    lambda: warren_bound(0, 1, 1), lambda: warren_bound(1, -1, 1),
    lambda: warren_bound(1, 1, 0), lambda: curve_complement_bound(-1),
    lambda: planar_bound(1.5, 1), lambda: matrix_planar_bound(1, 1, "hybrid"),
    lambda: warren_bound(True, 1, 1)])
def test_bad_arguments(call):
    with pytest.raises(ValueError):
        call()


def test_table():
    tab = bounds_table(2, 1, 2, matrix=True, time_domain=DISCRETE)
    assert tab == {"theorem1": 6 * 12 ** 2, "theorem2": 22, "corollary1": 79,
                   "corollary2": 3456}
    assert "theorem2" not in bounds_table(2, 1, 3)


@given(st.integers(0, 500))
def test_lemma_bound_is_integer_formula(q):
    assert 2 * curve_complement_bound(q) == q * q + q + 2


@given(st.integers(1, 20), st.integers(0, 20), st.integers(1, 4))
def test_monotone(t, d, n):
    assert warren_bound(t + 1, d, n) >= warren_bound(t, d, n)
    assert warren_bound(t, d + 1, n) >= warren_bound(t, d, n)
    assert planar_bound(t + 1, d) >= planar_bound(t, d)
    assert planar_bound(t, d + 1) >= planar_bound(t, d)
    for td in (CONTINUOUS, DISCRETE):
        assert matrix_planar_bound(t + 1, d, td) >= matrix_planar_bound(t, d, td)
        assert matrix_warren_bound(t, d + 1, n, td) >= matrix_warren_bound(t, d, n, td)
    assert matrix_planar_bound(t, d, DISCRETE) >= matrix_planar_bound(t, d, CONTINUOUS)
