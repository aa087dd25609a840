# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled big-integer polynomial kernels.

Same contracts as ``_pykernels``; coefficients stay Python ints (arbitrary
precision), the gain comes from typed loop indices and direct list access.
"""

BACKEND = "cython"


cpdef list strip(list a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return a[:n] if n != len(a) else a


cpdef list mul(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef object x
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if x:
            for j in range(lb):
                out[i + j] = out[i + j] + x * b[j]
    return out


cpdef list taylor_shift1(list a):
    cdef list c = list(a)
    cdef Py_ssize_t n = len(c), i, k
    for i in range(n - 1):
        k = n - 2
        while k >= i:
            c[k] = c[k] + c[k + 1]
            k -= 1
    return c


cpdef int sign_variations(list a):
    cdef int v = 0
    cdef int last = 0, s
    cdef object x
    for x in a:
        if x:
            s = 1 if x > 0 else -1
            if last and s != last:
                v += 1
            last = s
    return v


cpdef int descartes_01(list a):
    return sign_variations(taylor_shift1(a[::-1]))


cpdef list halve(list a):
    cdef Py_ssize_t n = len(a) - 1, i
    cdef list out = [0] * len(a)
    for i in range(n + 1):
        out[i] = a[i] << (n - i)
    return out


cpdef object eval_hom(list a, object num, object den):
    cdef Py_ssize_t n = len(a), i
    if n == 0:
        return 0
    cdef object acc = a[n - 1]
    cdef object dpow = 1
    i = n - 2
    while i >= 0:
        dpow = dpow * den
        acc = acc * num + a[i] * dpow
        i -= 1
    return acc


cpdef list prem(list a, list b):
    cdef list r = list(a)
    cdef Py_ssize_t db = len(b) - 1, k, i, off
    cdef object lb = b[db], q
    if len(r) - db <= 0:
        return r
    k = len(r) - 1
    while k >= db:
        q = r[k]
        for i in range(k):
            r[i] = r[i] * lb
        r[k] = 0
        if q:
            off = k - db
            for i in range(db):
                r[off + i] = r[off + i] - q * b[i]
        k -= 1
    return strip(r[:db])


cpdef object bareiss_det(list m):
    cdef Py_ssize_t n = len(m), k, i, j
    if n == 0:
        return 1
    cdef list a = [list(row) for row in m]
    cdef int sign = 1
    cdef object prev = 1, akk, aik
    cdef list rowk, rowi
    cdef bint found
    for k in range(n - 1):
        if not a[k][k]:
            found = False
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    found = True
                    break
            if not found:
                return 0
        rowk = a[k]
        akk = rowk[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


cpdef list line_restrict(list grid, object ar, object ap, object dr, object dp, object den):
    cdef Py_ssize_t deg = len(grid) - 1, i, j, k, t
    if deg < 0:
        return []
    cdef list lpow = [1] * (deg + 1)
    for k in range(1, deg + 1):
        lpow[k] = lpow[k - 1] * den
    cdef list ypow = [[1]]
    cdef list prev, nxt, row, inner, yj
    cdef object c, x, y
    for j in range(deg):
        prev = ypow[j]
        nxt = [0] * (len(prev) + 1)
        for k in range(len(prev)):
            x = prev[k]
            nxt[k] = nxt[k] + x * ap
            nxt[k + 1] = nxt[k + 1] + x * dp
        ypow.append(nxt)
    cdef list out = [0] * (deg + 1)
    cdef list xpow = [1]
    for i in range(deg + 1):
        row = grid[i]
        inner = [0] * (deg - i + 1)
        for j in range(len(row)):
            c = row[j]
            if c:
                if i + j > deg:
                    raise ValueError("grid entry above the total degree")
                c = c * lpow[deg - i - j]
                yj = ypow[j]
                for k in range(len(yj)):
                    inner[k] = inner[k] + c * yj[k]
        for t in range(len(xpow)):
            x = xpow[t]
            if x:
                for k in range(len(inner)):
                    y = inner[k]
                    if y:
                        out[t + k] = out[t + k] + x * y
        nxt = [0] * (len(xpow) + 1)
        for k in range(len(xpow)):
            x = xpow[k]
            nxt[k] = nxt[k] + x * ar
            nxt[k + 1] = nxt[k + 1] + x * dr
        xpow = nxt
    return strip(out)
