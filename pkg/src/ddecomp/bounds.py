"""Upper bounds on the number of root-invariant regions (exact integers)."""

from .family import CONTINUOUS, DISCRETE


def _check(t=1, d=0, n=1):
    for name, v, lo in (("t", t, 1), ("d", d, 0), ("n", n, 1)):
        if not isinstance(v, int) or isinstance(v, bool) or v < lo:
            raise ValueError(f"{name} must be an integer >= {lo}, got {v!r}")


def _domain(time_domain):
    if time_domain not in (CONTINUOUS, DISCRETE):
        raise ValueError(f"unknown time domain {time_domain!r}")
    return time_domain


def warren_bound(t, d, n):
    """``6 (4td + 4d)^n`` regions for ``n`` parameters."""
    _check(t, d, n)
    return 6 * (4 * t * d + 4 * d) ** n


def curve_complement_bound(q):
    """Connected components of the complement of a degree-``q`` plane curve."""
    if not isinstance(q, int) or q < 0:
        raise ValueError(f"curve degree must be a nonnegative integer, got {q!r}")
    num = q * q + q + 2
    assert num % 2 == 0
    return num // 2


def planar_bound(t, d):
    _check(t, d)
    return curve_complement_bound(2 * t * d + 2 * d)


def matrix_planar_bound(t, d, time_domain=CONTINUOUS):
    _check(t, d)
    q = 2 * t * t * d
    if _domain(time_domain) == DISCRETE:
        q += 2 * t * d
    return curve_complement_bound(q)


def matrix_warren_bound(t, d, n, time_domain=CONTINUOUS):
    _check(t, d, n)
    base = 4 * t * t * d
    if _domain(time_domain) == DISCRETE:
        base += 4 * t * d
    return 6 * base ** n


def bounds_table(t, d, n=2, matrix=False, time_domain=CONTINUOUS):
    """All applicable bounds keyed by the result they come from."""
    out = {
        "theorem1": warren_bound(t, d, n),
    }
    if n == 2:
        out["theorem2"] = planar_bound(t, d)
    if matrix:
        if n == 2:
            out["corollary1"] = matrix_planar_bound(t, d, time_domain)
        out["corollary2"] = matrix_warren_bound(t, d, n, time_domain)
    return out
