# cython: boundscheck=False, wraparound=False
"""Compiled twin of pykernels; same three functions, same semantics.

Entries are arbitrary-precision Python ints, so the arithmetic itself
still goes through PyNumber calls; the win comes from typed loop
indices and the removal of interpreter dispatch around them.
"""

from math import gcd


def content(v):
    cdef Py_ssize_t i, n = len(v)
    g = 0
    for i in range(n):
        x = v[i]
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


def mat_mul(list a, list b, Py_ssize_t n, Py_ssize_t m, Py_ssize_t p):
    cdef Py_ssize_t i, j, k, ia, ic, kb
    cdef list out = [0] * (n * p)
    for i in range(n):
        ia = i * m
        ic = i * p
        for k in range(m):
            aik = a[ia + k]
            if aik:
                kb = k * p
                for j in range(p):
                    bkj = b[kb + j]
                    if bkj:
                        out[ic + j] = out[ic + j] + aik * bkj
    return out


def rref(a, Py_ssize_t rows, Py_ssize_t cols):
    cdef Py_ssize_t r, c, i, j, pr
    cdef list m = [list(a[r * cols:(r + 1) * cols]) for r in range(rows)]
    cdef list pivots = []
    cdef list row, prow

    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if m[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        m[r], m[pr] = m[pr], m[r]
        prow = m[r]
        pv = prow[c]
        for i in range(rows):
            if i == r:
                continue
            row = m[i]
            q = row[c]
            if not q:
                continue
            for j in range(cols):
                row[j] = row[j] * pv - prow[j] * q
            g = 0
            for j in range(cols):
                x = row[j]
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g > 1:
                for j in range(cols):
                    row[j] = row[j] // g
        pivots.append(c)
        r += 1

    cdef list dens = []
    for i in range(r):
        row = m[i]
        g = 0
        for j in range(cols):
            x = row[j]
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if row[pivots[i]] < 0:
            g = -g
        if g != 0 and g != 1:
            for j in range(cols):
                row[j] = row[j] // g
        dens.append(row[pivots[i]])

    den = 1
    for i in range(r):
        d = dens[i]
        den = den * d // gcd(den, d)
    cdef list out = []
    for i in range(rows):
        if i < r:
            s = den // dens[i]
            row = m[i]
            if s == 1:
                out.extend(row)
            else:
                for j in range(cols):
                    out.append(row[j] * s)
        else:
            out.extend([0] * cols)
    return out, den, tuple(pivots)
