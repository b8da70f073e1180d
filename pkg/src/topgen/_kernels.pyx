# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: the torus sweep and Kac-coordinate zero counts."""

import numpy as np
cimport numpy as cnp

from libc.stdlib cimport malloc, free

cnp.import_array()


def torus_sweep(const cnp.int64_t[:, ::1] coeffs, long r):
    """Sweep x in (Z/r)^n \\ {0} in lexicographic order.

    Returns ``(min_zero_count, witness, n_at_min)`` where the zero count of x
    is the number of rows c of ``coeffs`` with sum(c_i x_i) = 0 mod r and the
    witness is the lexicographically least x attaining the minimum.
    """
    cdef Py_ssize_t m = coeffs.shape[0], n = coeffs.shape[1]
    cdef Py_ssize_t a, k, j
    cdef long *val = <long *> malloc(m * sizeof(long))
    cdef long *step = <long *> malloc(n * m * sizeof(long))
    cdef long *x = <long *> malloc(n * sizeof(long))
    cdef long acc, v, zeros, best = m + 1, n_best = 0
    cdef long *wit = <long *> malloc(n * sizeof(long))
    if not val or not step or not x or not wit:
        raise MemoryError()
    try:
        # advancing coordinate k by one resets coordinates k+1.. from r-1 to 0,
        # which shifts each value by c_k + sum_{j>k} c_j (mod r)
        for a in range(m):
            val[a] = 0
            acc = 0
            for k in range(n - 1, -1, -1):
                acc += coeffs[a, k]
                step[k * m + a] = ((acc % r) + r) % r
        for k in range(n):
            x[k] = 0
            wit[k] = 0
        while True:
            k = n - 1
            while k >= 0 and x[k] == r - 1:
                x[k] = 0
                k -= 1
            if k < 0:
                break
            x[k] += 1
            zeros = 0
            for a in range(m):
                v = val[a] + step[k * m + a]
                if v >= r:
                    v -= r
                val[a] = v
                if v == 0:
                    zeros += 1
            if zeros < best:
                best = zeros
                n_best = 1
                for j in range(n):
                    wit[j] = x[j]
            elif zeros == best:
                n_best += 1
        witness = tuple(wit[j] for j in range(n))
    finally:
        free(val)
        free(step)
        free(x)
        free(wit)
    if best > m:
        return None, None, 0
    return best, witness, n_best


def kac_zero_counts(const cnp.int64_t[:, ::1] svec,
                    const cnp.int64_t[:, ::1] coeffs, long r):
    """For each row s of ``svec`` count rows c of ``coeffs`` with c.s = 0 mod r."""
    cdef Py_ssize_t ns = svec.shape[0], m = coeffs.shape[0], n = coeffs.shape[1]
    cdef Py_ssize_t i, a, j
    cdef long acc, cnt
    out = np.zeros(ns, dtype=np.int64)
    cdef cnp.int64_t[::1] res = out
    for i in range(ns):
        cnt = 0
        for a in range(m):
            acc = 0
            for j in range(n):
                acc += coeffs[a, j] * svec[i, j]
            if acc % r == 0:
                cnt += 1
        res[i] = cnt
    return out
