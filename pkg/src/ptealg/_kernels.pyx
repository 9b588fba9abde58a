# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled equal-power-sum bucketing for PTE brute force.

All arithmetic is exact 64-bit integer arithmetic; the Python dispatcher
only routes here when every power sum provably fits.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t
from math import comb

cnp.import_array()


def equal_power_sum_classes(int size, int degree, int64_t lo, int64_t hi):
    cdef Py_ssize_t count = comb(hi - lo + size, size)
    if count == 0 or size == 0:
        return []
    tuples = np.empty((count, size), dtype=np.int64)
    sigs = np.empty((count, degree), dtype=np.int64)
    cdef int64_t[:, ::1] tv = tuples
    cdef int64_t[:, ::1] sv = sigs
    cdef int64_t[64] cur
    cdef Py_ssize_t row = 0
    cdef int i, j, pos
    cdef int64_t x, pw, acc
    for i in range(size):
        cur[i] = lo
    while True:
        for i in range(size):
            tv[row, i] = cur[i]
        for j in range(degree):
            sv[row, j] = 0
        for i in range(size):
            x = cur[i]
            pw = 1
            for j in range(degree):
                pw = pw * x
                sv[row, j] += pw
        row += 1
        # odometer over nondecreasing tuples
        pos = size - 1
        while pos >= 0 and cur[pos] == hi:
            pos -= 1
        if pos < 0:
            break
        cur[pos] += 1
        for i in range(pos + 1, size):
            cur[i] = cur[pos]
    order = np.lexsort(sigs.T[::-1])
    cdef int64_t[::1] ov = order.astype(np.int64)
    groups = []
    cdef Py_ssize_t start = 0, a, b
    cdef bint same
    for a in range(1, count + 1):
        same = a < count
        if same:
            for j in range(degree):
                if sv[ov[a], j] != sv[ov[start], j]:
                    same = False
                    break
        if not same:
            if a - start > 1:
                groups.append(
                    [tuple(int(tv[ov[b], i]) for i in range(size)) for b in range(start, a)]
                )
            start = a
    return groups
