# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the two hot loops: per-labeling degree-condition
checks and exact int64 characteristic polynomials.

The API mirrors _kernels_py exactly; lapsep._backend picks whichever
imports.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

import numpy as np

BACKEND = "cython"


def degree_condition_batch(eu, ev, pos, int p, int q):
    """Per-labeling degree-condition test over a batch of position rows."""
    cdef long[::1] eu_v = np.ascontiguousarray(eu, dtype=np.int64)
    cdef long[::1] ev_v = np.ascontiguousarray(ev, dtype=np.int64)
    pos_arr = np.ascontiguousarray(pos, dtype=np.int64)
    if pos_arr.ndim != 2 or pos_arr.shape[1] != p * q:
        raise ValueError("pos must have shape (B, p*q)")
    cdef long[:, ::1] pos_v = pos_arr
    cdef Py_ssize_t nb = pos_v.shape[0]
    cdef Py_ssize_t n = pos_v.shape[1]
    cdef Py_ssize_t ne = eu_v.shape[0]
    out_arr = np.zeros(nb, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr

    cdef long *gdeg = <long *> malloc(n * sizeof(long))
    cdef long *pdeg = <long *> malloc(n * sizeof(long))
    if gdeg == NULL or pdeg == NULL:
        free(gdeg)
        free(pdeg)
        raise MemoryError()

    cdef Py_ssize_t b, e, idx
    cdef long i, j, u, v, w, y
    cdef int ok
    try:
        for b in range(nb):
            memset(gdeg, 0, n * sizeof(long))
            memset(pdeg, 0, n * sizeof(long))
            for e in range(ne):
                i = pos_v[b, eu_v[e]]
                j = pos_v[b, ev_v[e]]
                u = i / q
                v = i - u * q
                w = j / q
                y = j - w * q
                gdeg[i] += 1
                gdeg[j] += 1
                pdeg[u * q + y] += 1
                pdeg[w * q + v] += 1
            ok = 1
            for idx in range(n):
                if gdeg[idx] != pdeg[idx]:
                    ok = 0
                    break
            out[b] = ok
    finally:
        free(gdeg)
        free(pdeg)
    return out_arr.astype(bool)


def charpoly_int64(m):
    """Exact Faddeev-LeVerrier characteristic polynomial in int64.

    Caller guarantees intermediates fit (see density._int64_safe).
    Returns c with det(xI - M) = sum_k c[k] x^k, c[n] = 1.
    """
    m_arr = np.ascontiguousarray(m, dtype=np.int64)
    cdef Py_ssize_t n = m_arr.shape[0]
    if m_arr.ndim != 2 or m_arr.shape[1] != n:
        raise ValueError("matrix must be square")
    coeffs_arr = np.zeros(n + 1, dtype=np.int64)
    cdef long[::1] coeffs = coeffs_arr
    coeffs[n] = 1
    if n == 0:
        return coeffs_arr
    cdef long[:, ::1] mv = m_arr
    work = np.array(m_arr)  # current M_k
    tmp = np.zeros((n, n), dtype=np.int64)
    cdef long[:, ::1] a = work
    cdef long[:, ::1] t = tmp
    cdef Py_ssize_t k, r, c, s
    cdef long tr, acc, add

    tr = 0
    for r in range(n):
        tr += a[r, r]
    coeffs[n - 1] = -tr
    for k in range(2, n + 1):
        add = coeffs[n - k + 1]
        # t = m @ (a + add*I)
        for r in range(n):
            for c in range(n):
                acc = 0
                for s in range(n):
                    if s == c:
                        acc += mv[r, s] * (a[s, c] + add)
                    else:
                        acc += mv[r, s] * a[s, c]
                t[r, c] = acc
        a[:, :] = t
        tr = 0
        for r in range(n):
            tr += a[r, r]
        coeffs[n - k] = -(tr / k)
    return coeffs_arr
