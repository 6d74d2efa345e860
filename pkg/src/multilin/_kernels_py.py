"""Pure-Python kernels.

Reference implementation of the hot loops; the compiled ``_kernels`` module
mirrors this API.  Values are plain Python ints (entries pre-scaled to a
common denominator by the caller), but any exact numeric type works.
"""

BACKEND = "python"


def contract(rows, cols, a, a_cols, b, b_cols, out_rows, out_cols):
    """Separable bilinear contraction.

    ``rows`` and ``cols`` are ``(out, a, b, weight)`` index plans; every pair of
    a row term and a column term adds ``rw * cw * a[ra, ca] * b[rb, cb]`` to
    ``out[ro, co]``.  Returns the flat row-major output list.
    """
    out = [0] * (out_rows * out_cols)
    col_terms = list(zip(*cols))
    for ro, ra, rb, rw in zip(*rows):
        o = ro * out_cols
        ao = ra * a_cols
        bo = rb * b_cols
        for co, ca, cb, cw in col_terms:
            x = a[ao + ca]
            if x:
                y = b[bo + cb]
                if y:
                    out[o + co] += rw * cw * x * y
    return out


def matmul(a, b, n, m, k):
    """Flat ``n x m`` times ``m x k``."""
    out = [0] * (n * k)
    for i in range(n):
        row = a[i * m:(i + 1) * m]
        o = i * k
        for t, x in enumerate(row):
            if x:
                bo = t * k
                for j in range(k):
                    out[o + j] += x * b[bo + j]
    return out


def bareiss_det(vals, n):
    """Determinant of a flat ``n x n`` integer matrix by fraction-free elimination."""
    if n == 0:
        return 1
    m = [list(vals[i * n:(i + 1) * n]) for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            rowi, rowk = m[i], m[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - mik * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]
