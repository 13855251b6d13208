# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels: weight histograms over full codeword spans."""

import numpy as np

BACKEND_NAME = "cython"

cdef extern from *:
    """
    static inline int qcsst_popcount64(unsigned long long x)
        { return __builtin_popcountll(x); }
    static inline int qcsst_ctz64(unsigned long long x)
        { return __builtin_ctzll(x); }
    """
    int qcsst_popcount64(unsigned long long x) nogil
    int qcsst_ctz64(unsigned long long x) nogil


def gf2_weight_hist(unsigned long long[:, ::1] packed, int n):
    """Histogram of Hamming weights over the 2^k span of packed GF(2) rows."""
    cdef int k = packed.shape[0]
    cdef int nwords = packed.shape[1]
    hist = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] h = hist
    if k == 0:
        h[0] += 1
        return hist
    buf = np.zeros(nwords, dtype=np.uint64)
    cdef unsigned long long[::1] cw = buf
    cdef unsigned long long total = (<unsigned long long> 1 << k) - 1
    cdef unsigned long long i
    cdef int j, t, w
    h[0] += 1
    with nogil:
        for i in range(1, total + 1):
            j = qcsst_ctz64(i)
            w = 0
            for t in range(nwords):
                cw[t] ^= packed[j, t]
                w += qcsst_popcount64(cw[t])
            h[w] += 1
    return hist


def gfq_weight_hist(const unsigned char[:, :, ::1] scaled, int q, int n,
                    const unsigned char[:, ::1] add):
    """Histogram of weights over the q^k span; scaled[i, c, :] = c * row_i."""
    cdef int k = scaled.shape[0]
    hist = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] h = hist
    if k == 0:
        h[0] += 1
        return hist
    partial_arr = np.zeros((k + 1, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] P = partial_arr
    digits_arr = np.zeros(k, dtype=np.int32)
    cdef int[::1] dg = digits_arr
    cdef int i, t, c, w
    with nogil:
        # partial[t] = sum of scaled[j][digit_j] over j >= t; digits start at 0
        while True:
            w = 0
            for c in range(n):
                if P[0, c] != 0:
                    w += 1
            h[w] += 1
            i = 0
            while i < k and dg[i] == q - 1:
                dg[i] = 0
                i += 1
            if i == k:
                break
            dg[i] += 1
            for t in range(i, -1, -1):
                for c in range(n):
                    P[t, c] = add[P[t + 1, c], scaled[t, dg[t], c]]
    return hist
