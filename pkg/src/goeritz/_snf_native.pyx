# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 diagonalization kernel with overflow detection.

Same pivoting as ``goeritz._snf_py``; raises ``OverflowError`` the moment any
intermediate leaves the int64 range so the caller can redo the work with
Python integers.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

ctypedef long long i64

cdef extern from *:
    """
    static inline int snf_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int snf_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint snf_mul_ovf(i64 a, i64 b, i64 *r) nogil
    bint snf_sub_ovf(i64 a, i64 b, i64 *r) nogil


cdef inline i64 iabs(i64 x) nogil:
    return -x if x < 0 else x


cdef inline i64 floordiv(i64 x, i64 p) nogil:
    cdef i64 q = x / p
    if (x % p != 0) and ((x < 0) != (p < 0)):
        q -= 1
    return q


cdef int _diagonalize(i64 *a, Py_ssize_t nrows, Py_ssize_t ncols, i64 *diag) nogil:
    """Returns 0 on success, 1 on overflow."""
    cdef Py_ssize_t n = nrows if nrows < ncols else ncols
    cdef Py_ssize_t t, i, j, bi, bj, si, sj
    cdef i64 best, ax, x, y, p, f, small, prod, tmp
    cdef i64 *tmprow = <i64 *> malloc(ncols * sizeof(i64))
    if tmprow == NULL:
        return 2
    for t in range(n):
        best = 0
        bi = -1
        bj = -1
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = a[i * ncols + j]
                if x != 0:
                    ax = iabs(x)
                    if ax < 0:  # INT64_MIN
                        free(tmprow)
                        return 1
                    if best == 0 or ax < best:
                        best = ax
                        bi = i
                        bj = j
                        if ax == 1:
                            break
            if best == 1:
                break
        if best == 0:
            break
        if bi != t:
            memcpy(tmprow, &a[t * ncols], ncols * sizeof(i64))
            memcpy(&a[t * ncols], &a[bi * ncols], ncols * sizeof(i64))
            memcpy(&a[bi * ncols], tmprow, ncols * sizeof(i64))
        if bj != t:
            for i in range(nrows):
                tmp = a[i * ncols + t]
                a[i * ncols + t] = a[i * ncols + bj]
                a[i * ncols + bj] = tmp

        while True:
            p = a[t * ncols + t]
            small = 0
            si = -1
            for i in range(t + 1, nrows):
                x = a[i * ncols + t]
                if x != 0:
                    f = floordiv(x, p)
                    if f != 0:
                        for j in range(t, ncols):
                            y = a[t * ncols + j]
                            if y != 0:
                                if snf_mul_ovf(f, y, &prod) or snf_sub_ovf(a[i * ncols + j], prod, &a[i * ncols + j]):
                                    free(tmprow)
                                    return 1
                    x = a[i * ncols + t]
                    if x != 0:
                        ax = iabs(x)
                        if ax < 0:
                            free(tmprow)
                            return 1
                        if small == 0 or ax < small:
                            small = ax
                            si = i
            if small != 0:
                memcpy(tmprow, &a[t * ncols], ncols * sizeof(i64))
                memcpy(&a[t * ncols], &a[si * ncols], ncols * sizeof(i64))
                memcpy(&a[si * ncols], tmprow, ncols * sizeof(i64))
                continue
            sj = -1
            for j in range(t + 1, ncols):
                x = a[t * ncols + j]
                if x != 0:
                    x = x % p
                    if x != 0 and ((x < 0) != (p < 0)):
                        x += p
                    a[t * ncols + j] = x
                    if x != 0:
                        ax = iabs(x)
                        if small == 0 or ax < small:
                            small = ax
                            sj = j
            if small != 0:
                for i in range(nrows):
                    tmp = a[i * ncols + t]
                    a[i * ncols + t] = a[i * ncols + sj]
                    a[i * ncols + sj] = tmp
                continue
            break
        diag[t] = iabs(a[t * ncols + t])
    free(tmprow)
    return 0


def snf_diagonal(rows, Py_ssize_t nrows, Py_ssize_t ncols):
    """Native counterpart of ``goeritz._snf_py.snf_diagonal``.

    Raises ``OverflowError`` if an entry does not fit in int64 or if the
    elimination would overflow.
    """
    cdef Py_ssize_t n = nrows if nrows < ncols else ncols
    cdef Py_ssize_t i, j
    cdef i64 *a = <i64 *> malloc(nrows * ncols * sizeof(i64))
    cdef i64 *diag = <i64 *> malloc((n if n > 0 else 1) * sizeof(i64))
    cdef int status
    if a == NULL or diag == NULL:
        free(a)
        free(diag)
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                a[i * ncols + j] = row[j]
        for i in range(n):
            diag[i] = 0
        with nogil:
            status = _diagonalize(a, nrows, ncols, diag)
        if status == 1:
            raise OverflowError("int64 overflow during elimination")
        if status == 2:
            raise MemoryError()
        return [diag[i] for i in range(n)]
    finally:
        free(a)
        free(diag)
