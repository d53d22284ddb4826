# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free elimination kernels.

Entries stay Python integers (arbitrary precision); the speedup comes
from typed loop indices and direct list access.
"""


def bareiss_det(m):
    cdef Py_ssize_t n = len(m)
    cdef Py_ssize_t i, j, k, p
    cdef list a = [list(row) for row in m]
    cdef list rowk, rowi
    cdef int sign = 1
    cdef object prev = 1, akk, aik, q, r
    cdef list pivots = []
    for k in range(n):
        p = k
        while p < n and (<list>a[p])[k] == 0:
            p += 1
        if p == n:
            return 0, pivots
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        rowk = <list>a[k]
        akk = rowk[k]
        pivots.append(akk)
        for i in range(k + 1, n):
            rowi = <list>a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                q, r = divmod(akk * rowi[j] - aik * rowk[j], prev)
                if r:
                    raise ArithmeticError("Bareiss step left a nonzero remainder")
                rowi[j] = q
            rowi[k] = 0
        prev = akk
    return (sign * prev if n else 1), pivots


def bareiss_adjugate(m):
    cdef Py_ssize_t n = len(m)
    cdef Py_ssize_t width = 2 * n
    cdef Py_ssize_t i, j, k, p, c, r_
    cdef list a = []
    cdef list rowk, rowi, yrow
    cdef int sign = 1
    cdef object prev = 1, akk, aik, q, r, d, s, uii
    cdef list pivots = []
    for r_ in range(n):
        a.append(list(m[r_]) + [1 if c == r_ else 0 for c in range(n)])
    for k in range(n):
        p = k
        while p < n and (<list>a[p])[k] == 0:
            p += 1
        if p == n:
            return 0, None, pivots
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        rowk = <list>a[k]
        akk = rowk[k]
        pivots.append(akk)
        for i in range(k + 1, n):
            rowi = <list>a[i]
            aik = rowi[k]
            for j in range(k + 1, width):
                q, r = divmod(akk * rowi[j] - aik * rowk[j], prev)
                if r:
                    raise ArithmeticError("Bareiss step left a nonzero remainder")
                rowi[j] = q
            rowi[k] = 0
        prev = akk
    if n == 0:
        return 1, [], pivots
    d = prev
    cdef list y = [[0] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        rowi = <list>a[i]
        uii = rowi[i]
        yrow = <list>y[i]
        for c in range(n):
            s = d * rowi[n + c]
            for j in range(i + 1, n):
                s -= rowi[j] * (<list>y[j])[c]
            q, r = divmod(s, uii)
            if r:
                raise ArithmeticError("back substitution left a nonzero remainder")
            yrow[c] = q
    if sign < 0:
        y = [[-v for v in row] for row in y]
    return sign * d, y, pivots


def matmul(a, b):
    cdef Py_ssize_t inner = len(b)
    cdef Py_ssize_t cols = len(b[0]) if inner else 0
    cdef Py_ssize_t c, k
    cdef list out = [], out_row, row
    cdef object s
    for row_obj in a:
        row = list(row_obj)
        if len(row) != inner:
            raise ValueError("dimension mismatch in matrix product")
        out_row = []
        for c in range(cols):
            s = 0
            for k in range(inner):
                s += row[k] * b[k][c]
            out_row.append(s)
        out.append(out_row)
    return out
