# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Both kernels walk every nonzero F_p-combination of the basis rows in
modular Gray-code order (step t adds row v_p(t)), so each step costs one
row update instead of a full re-encoding.
"""

from libc.stdint cimport uint8_t, uint64_t
from libc.stdlib cimport calloc, free

import numpy as np
cimport numpy as cnp

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _slot_weight(uint64_t x, int block, int covered, uint64_t startmask) nogil:
    cdef uint64_t y = x
    cdef int s = 1
    while s < covered:
        y |= y >> s
        s <<= 1
    if block > covered:
        y |= y >> (block - covered)
    return __builtin_popcountll(y & startmask)


def gf2_min_block_weight(const uint64_t[:, ::1] rows, int block, uint64_t startmask, int stop):
    """Minimum number of nonzero slots over all nonzero combinations.

    ``rows`` holds the basis in slot layout: each 64-bit word carries
    ``64 // block`` aligned slots and ``startmask`` marks slot starts.
    """
    cdef Py_ssize_t k = rows.shape[0]
    cdef Py_ssize_t nw = rows.shape[1]
    cdef uint64_t total = (<uint64_t>1) << k
    cdef uint64_t t
    cdef int i, w, wt
    cdef int best = 1 << 30
    cdef int covered = 1
    while covered * 2 <= block:
        covered *= 2
    cdef uint64_t *cw = <uint64_t *>calloc(nw if nw > 0 else 1, sizeof(uint64_t))
    if cw == NULL:
        raise MemoryError()
    try:
        with nogil:
            t = 1
            while t < total:
                i = __builtin_ctzll(t)
                wt = 0
                for w in range(nw):
                    cw[w] ^= rows[i, w]
                    wt += _slot_weight(cw[w], block, covered, startmask)
                if wt < best:
                    best = wt
                    if best <= stop:
                        break
                t += 1
    finally:
        free(cw)
    return best


def gfp_min_block_weight(const uint8_t[:, ::1] rows, int p, int block, int stop):
    """Same walk for odd (or any) prime p with byte-per-symbol rows."""
    cdef Py_ssize_t k = rows.shape[0]
    cdef Py_ssize_t length = rows.shape[1]
    cdef Py_ssize_t nblocks = length // block
    cdef Py_ssize_t i, j, idx
    cdef int best = 1 << 30
    cdef int weight = 0
    cdef int old, new
    cdef Py_ssize_t b

    # sparse row structure
    nnz_np = np.zeros(k + 1, dtype=np.intp)
    for i in range(k):
        nnz_np[i + 1] = nnz_np[i] + np.count_nonzero(np.asarray(rows[i]))
    cols_np = np.zeros(max(int(nnz_np[k]), 1), dtype=np.intp)
    vals_np = np.zeros(max(int(nnz_np[k]), 1), dtype=np.uint8)
    for i in range(k):
        nz = np.flatnonzero(np.asarray(rows[i]))
        cols_np[nnz_np[i]:nnz_np[i + 1]] = nz
        vals_np[nnz_np[i]:nnz_np[i + 1]] = np.asarray(rows[i])[nz]
    cdef Py_ssize_t[::1] start = nnz_np
    cdef Py_ssize_t[::1] cols = cols_np
    cdef uint8_t[::1] vals = vals_np

    cw_np = np.zeros(max(length, 1), dtype=np.uint8)
    cnt_np = np.zeros(max(nblocks, 1), dtype=np.intc)
    digits_np = np.zeros(k + 1, dtype=np.intc)
    cdef uint8_t[::1] cw = cw_np
    cdef int[::1] cnt = cnt_np
    cdef int[::1] digits = digits_np

    with nogil:
        while True:
            i = 0
            while i < k and digits[i] == p - 1:
                digits[i] = 0
                i += 1
            if i == k:
                break
            digits[i] += 1
            for idx in range(start[i], start[i + 1]):
                j = cols[idx]
                old = cw[j]
                new = (old + vals[idx]) % p
                cw[j] = <uint8_t>new
                b = j // block
                if old == 0 and new != 0:
                    if cnt[b] == 0:
                        weight += 1
                    cnt[b] += 1
                elif old != 0 and new == 0:
                    cnt[b] -= 1
                    if cnt[b] == 0:
                        weight -= 1
            if weight < best:
                best = weight
                if best <= stop:
                    break
    return best
