# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the inner loops of max-min products and thresholds."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def maxmin_matmul(a, b):
    """Max-min product of two 2-D float arrays, with 0 as the empty max."""
    cdef const double[:, ::1] A = np.ascontiguousarray(a, dtype=np.float64)
    cdef const double[:, ::1] B = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t m = A.shape[0], k = A.shape[1], n = B.shape[1]
    out = np.zeros((m, n), dtype=np.float64)
    cdef double[:, ::1] O = out
    cdef Py_ssize_t i, j, c
    cdef double aij, v
    with nogil:
        for i in range(m):
            for j in range(k):
                aij = A[i, j]
                # min(aij, .) <= aij <= 0 can never beat the zero start
                if aij <= 0.0:
                    continue
                for c in range(n):
                    v = B[j, c]
                    if v > aij:
                        v = aij
                    if v > O[i, c]:
                        O[i, c] = v
    return out


def threshold_update(raw, clamp):
    """1 where ``raw > 0`` or ``clamp`` is set, else 0."""
    cdef const double[::1] R = np.ascontiguousarray(raw, dtype=np.float64).ravel()
    cdef const unsigned char[::1] C = np.ascontiguousarray(clamp, dtype=bool).ravel().view(np.uint8)
    cdef Py_ssize_t i, n = R.shape[0]
    out = np.zeros(n, dtype=np.float64)
    cdef double[::1] O = out
    with nogil:
        for i in range(n):
            # branchless: random on/off patterns defeat the predictor
            O[i] = <double>((R[i] > 0.0) | (C[i] != 0))
    return out


def bam_signal(raw, previous, thresholds):
    """Three-branch binary signal: above 1, equal keeps previous, below 0."""
    cdef const double[::1] R = np.ascontiguousarray(raw, dtype=np.float64).ravel()
    cdef const double[::1] P = np.ascontiguousarray(previous, dtype=np.float64).ravel()
    cdef const double[::1] U = np.ascontiguousarray(thresholds, dtype=np.float64).ravel()
    cdef Py_ssize_t i, n = R.shape[0]
    out = np.zeros(n, dtype=np.float64)
    cdef double[::1] O = out
    with nogil:
        for i in range(n):
            if R[i] > U[i]:
                O[i] = 1.0
            elif R[i] == U[i]:
                O[i] = P[i]
    return out
