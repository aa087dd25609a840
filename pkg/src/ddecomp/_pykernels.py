"""Pure-Python big-integer polynomial kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` is a line-for-line
Cython twin.  Polynomials are lists of ``int`` coefficients, lowest degree
first, with no trailing zeros (``[]`` is the zero polynomial) unless noted.
"""

BACKEND = "python"


def strip(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return a[:n] if n != len(a) else a


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def taylor_shift1(a):
    """Coefficients of ``a(x + 1)``."""
    c = list(a)
    n = len(c)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            c[k] += c[k + 1]
    return c


def sign_variations(a):
    v = 0
    last = 0
    for x in a:
        if x:
            if (x > 0) != (last > 0) and last:
                v += 1
            last = x
    return v


def descartes_01(a):
    """Descartes bound for the number of roots of ``a`` in (0, 1).

    Counts sign variations of ``(x+1)^n a(1/(x+1))``.
    """
    return sign_variations(taylor_shift1(a[::-1]))


def halve(a):
    """Coefficients of ``2^n a(x/2)`` where ``n = deg a``."""
    n = len(a) - 1
    return [x << (n - i) for i, x in enumerate(a)]


def eval_hom(a, num, den):
    """``den^n * a(num/den)`` for ``n = deg a`` (an exact integer)."""
    n = len(a)
    if not n:
        return 0
    acc = a[n - 1]
    dpow = 1
    for i in range(n - 2, -1, -1):
        dpow *= den
        acc = acc * num + a[i] * dpow
    return acc


def prem(a, b):
    """Pseudo-remainder ``lc(b)^(deg a - deg b + 1) * a mod b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[db]
    steps = len(r) - db
    if steps <= 0:
        return r
    for k in range(len(r) - 1, db - 1, -1):
        q = r[k]
        for i in range(k):
            r[i] *= lb
        r[k] = 0
        if q:
            off = k - db
            for i in range(db):
                r[off + i] -= q * b[i]
    return strip(r[:db])


def bareiss_det(m):
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def line_restrict(grid, ar, ap, dr, dp, den):
    """Restrict a bivariate integer polynomial to a rational line.

    ``grid[i][j]`` is the coefficient of ``r^i p^j``; total degree ``D`` is
    ``len(grid) - 1``.  Returns the coefficients of
    ``den^D * h((ar + dr*t)/den, (ap + dp*t)/den)`` as a polynomial in ``t``.
    """
    deg = len(grid) - 1
    if deg < 0:
        return []
    lpow = [1] * (deg + 1)
    for k in range(1, deg + 1):
        lpow[k] = lpow[k - 1] * den
    ypow = [[1]]
    for j in range(deg):
        prev = ypow[-1]
        nxt = [0] * (len(prev) + 1)
        for k, x in enumerate(prev):
            nxt[k] += x * ap
            nxt[k + 1] += x * dp
        ypow.append(nxt)
    out = [0] * (deg + 1)
    xpow = [1]
    for i in range(deg + 1):
        row = grid[i]
        inner = [0] * (deg - i + 1)
        for j in range(len(row)):
            c = row[j]
            if c:
                if i + j > deg:
                    raise ValueError("grid entry above the total degree")
                c *= lpow[deg - i - j]
                for k, y in enumerate(ypow[j]):
                    inner[k] += c * y
        for a_idx, x in enumerate(xpow):
            if x:
                for k, y in enumerate(inner):
                    if y:
                        out[a_idx + k] += x * y
        nxt = [0] * (len(xpow) + 1)
        for k, x in enumerate(xpow):
            nxt[k] += x * ar
            nxt[k + 1] += x * dr
        xpow = nxt
    return strip(out)
