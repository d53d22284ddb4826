"""Pure-Python fraction-free elimination kernels.

``_bareiss_core`` (Cython) implements the same three functions; see
:mod:`filbert.linalg` for the selection logic.
"""


def bareiss_det(m):
    """Determinant of an integer matrix by Bareiss elimination.

    Returns ``(det, pivots)``. ``m`` is copied, never mutated.
    """
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    pivots = []
    for k in range(n):
        p = k
        while p < n and a[p][k] == 0:
            p += 1
        if p == n:
            return 0, pivots
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        pivots.append(akk)
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                q, r = divmod(akk * rowi[j] - aik * rowk[j], prev)
                if r:
                    raise ArithmeticError("Bareiss step left a nonzero remainder")
                rowi[j] = q
            rowi[k] = 0
        prev = akk
    return sign * prev if n else 1, pivots


def bareiss_adjugate(m):
    """Integer ``(det, adj, pivots)`` with ``adj = det * m^-1``.

    Forward Bareiss on ``[m | I]`` followed by fraction-free back
    substitution. ``adj`` is None when ``m`` is singular.
    """
    n = len(m)
    width = 2 * n
    a = [list(row) + [1 if c == r else 0 for c in range(n)] for r, row in enumerate(m)]
    sign = 1
    prev = 1
    pivots = []
    for k in range(n):
        p = k
        while p < n and a[p][k] == 0:
            p += 1
        if p == n:
            return 0, None, pivots
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        pivots.append(akk)
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
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
    y = [[0] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        rowi = a[i]
        uii = rowi[i]
        for c in range(n):
            s = d * rowi[n + c]
            for j in range(i + 1, n):
                s -= rowi[j] * y[j][c]
            q, r = divmod(s, uii)
            if r:
                raise ArithmeticError("back substitution left a nonzero remainder")
            y[i][c] = q
    if sign < 0:
        y = [[-v for v in row] for row in y]
    return sign * d, y, pivots


def matmul(a, b):
    """Product of two integer (or any exact scalar) matrices given as lists of rows."""
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = []
    for row in a:
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
