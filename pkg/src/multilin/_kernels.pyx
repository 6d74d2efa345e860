# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels; same API as ``_kernels_py``.

Each kernel first runs on int64 with checked arithmetic and falls back to
Python-object arithmetic (arbitrary precision) on the first overflow.
"""
from array import array

cimport cython

BACKEND = "cython"

cdef extern from *:
    """
    static inline int ml_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int ml_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int ml_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int ml_mul_ovf(long long a, long long b, long long *r) nogil
    int ml_add_ovf(long long a, long long b, long long *r) nogil
    int ml_sub_ovf(long long a, long long b, long long *r) nogil


cdef object _as_i64(values):
    try:
        return array("q", values)
    except (OverflowError, TypeError):
        return None


cdef bint _contract_i64(const long long[:] ro, const long long[:] ra,
                        const long long[:] rb, const long long[:] rw,
                        const long long[:] co, const long long[:] ca,
                        const long long[:] cb, const long long[:] cw,
                        const long long[:] a, Py_ssize_t a_cols,
                        const long long[:] b, Py_ssize_t b_cols,
                        long long[:] out, Py_ssize_t out_cols) noexcept nogil:
    cdef Py_ssize_t i, j, o, ao, bo
    cdef long long x, y, w, t
    for i in range(ro.shape[0]):
        o = ro[i] * out_cols
        ao = ra[i] * a_cols
        bo = rb[i] * b_cols
        w = rw[i]
        for j in range(co.shape[0]):
            x = a[ao + ca[j]]
            if x == 0:
                continue
            y = b[bo + cb[j]]
            if y == 0:
                continue
            if ml_mul_ovf(w, cw[j], &t):
                return False
            if ml_mul_ovf(t, x, &t):
                return False
            if ml_mul_ovf(t, y, &t):
                return False
            if ml_add_ovf(out[o + co[j]], t, &out[o + co[j]]):
                return False
    return True


def contract(rows, cols, a, a_cols, b, b_cols, out_rows, out_cols):
    cdef Py_ssize_t n_out = out_rows * out_cols
    a64 = _as_i64(a)
    b64 = _as_i64(b)
    if a64 is not None and b64 is not None:
        out64 = array("q", bytes(8 * n_out))
        if _contract_i64(rows[0], rows[1], rows[2], rows[3],
                         cols[0], cols[1], cols[2], cols[3],
                         a64, a_cols, b64, b_cols, out64, out_cols):
            return out64.tolist()
    return _contract_obj(rows, cols, list(a), a_cols, list(b), b_cols, n_out, out_cols)


cdef list _contract_obj(rows, cols, list a, Py_ssize_t a_cols, list b, Py_ssize_t b_cols,
                        Py_ssize_t n_out, Py_ssize_t out_cols):
    cdef const long long[:] ro = rows[0]
    cdef const long long[:] ra = rows[1]
    cdef const long long[:] rb = rows[2]
    cdef const long long[:] rw = rows[3]
    cdef const long long[:] co = cols[0]
    cdef const long long[:] ca = cols[1]
    cdef const long long[:] cb = cols[2]
    cdef const long long[:] cw = cols[3]
    cdef list out = [0] * n_out
    cdef Py_ssize_t i, j, o, ao, bo, k
    cdef object x, y, w
    for i in range(ro.shape[0]):
        o = ro[i] * out_cols
        ao = ra[i] * a_cols
        bo = rb[i] * b_cols
        w = rw[i]
        for j in range(co.shape[0]):
            x = a[ao + ca[j]]
            if not x:
                continue
            y = b[bo + cb[j]]
            if not y:
                continue
            k = o + co[j]
            out[k] = out[k] + (w * cw[j]) * x * y
    return out


cdef bint _matmul_i64(const long long[:] a, const long long[:] b, long long[:] out,
                      Py_ssize_t n, Py_ssize_t m, Py_ssize_t k) noexcept nogil:
    cdef Py_ssize_t i, j, t
    cdef long long x, p
    for i in range(n):
        for t in range(m):
            x = a[i * m + t]
            if x == 0:
                continue
            for j in range(k):
                if ml_mul_ovf(x, b[t * k + j], &p):
                    return False
                if ml_add_ovf(out[i * k + j], p, &out[i * k + j]):
                    return False
    return True


def matmul(a, b, n, m, k):
    a64 = _as_i64(a)
    b64 = _as_i64(b)
    if a64 is not None and b64 is not None:
        out64 = array("q", bytes(8 * n * k))
        if _matmul_i64(a64, b64, out64, n, m, k):
            return out64.tolist()
    cdef list la = list(a), lb = list(b)
    cdef list out = [0] * (n * k)
    cdef Py_ssize_t i, j, t, nn = n, mm = m, kk = k
    for i in range(nn):
        for t in range(mm):
            x = la[i * mm + t]
            if not x:
                continue
            for j in range(kk):
                out[i * kk + j] = out[i * kk + j] + x * lb[t * kk + j]
    return out


@cython.cdivision(True)
cdef int _bareiss_i64(long long[:] m, Py_ssize_t n, long long *result) noexcept nogil:
    """0 on success, 1 on overflow."""
    cdef Py_ssize_t i, j, k, s
    cdef long long prev = 1, pivot, t1, t2, tmp
    cdef int sign = 1
    for k in range(n - 1):
        if m[k * n + k] == 0:
            s = -1
            for i in range(k + 1, n):
                if m[i * n + k] != 0:
                    s = i
                    break
            if s < 0:
                result[0] = 0
                return 0
            for j in range(n):
                tmp = m[k * n + j]
                m[k * n + j] = m[s * n + j]
                m[s * n + j] = tmp
            sign = -sign
        pivot = m[k * n + k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                if ml_mul_ovf(m[i * n + j], pivot, &t1):
                    return 1
                if ml_mul_ovf(m[i * n + k], m[k * n + j], &t2):
                    return 1
                if ml_sub_ovf(t1, t2, &t1):
                    return 1
                m[i * n + j] = t1 // prev
            m[i * n + k] = 0
        prev = pivot
    tmp = m[(n - 1) * n + (n - 1)]
    if sign < 0:
        if ml_sub_ovf(0, tmp, &tmp):
            return 1
    result[0] = tmp
    return 0


def bareiss_det(vals, n):
    if n == 0:
        return 1
    cdef long long res = 0
    m64 = _as_i64(vals)
    if m64 is not None:
        if _bareiss_i64(m64, n, &res) == 0:
            return res
    from multilin._kernels_py import bareiss_det as _py_det
    return _py_det(vals, n)
