# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled LR tableau counter.  Same contract as ``schurkit._lr_py.count_lr``."""
from libc.stdlib cimport malloc, free

from ._lr_layout import reading_layout


cdef long long _rec(int k, int ncells, int nlab, const int* right, const int* above,
                    int* vals, int* counts, const int* cap) noexcept nogil:
    if k == ncells:
        return 1
    cdef int hi = nlab if right[k] < 0 else vals[right[k]]
    cdef int lo = 1 if above[k] < 0 else vals[above[k]] + 1
    cdef long long total = 0
    cdef int v, cv
    for v in range(lo, hi + 1):
        cv = counts[v]
        if cv >= cap[v] or cv >= counts[v - 1]:
            continue
        counts[v] = cv + 1
        vals[k] = v
        total += _rec(k + 1, ncells, nlab, right, above, vals, counts, cap)
        counts[v] = cv
    return total


def count_lr(tuple outer, tuple inner, tuple content):
    right_l, above_l, _ = reading_layout(outer, inner)
    cdef int ncells = len(right_l)
    cdef int nlab = len(content)
    if ncells == 0:
        return 1
    cdef int* buf = <int*> malloc((3 * ncells + 2 * (nlab + 1)) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* right = buf
    cdef int* above = buf + ncells
    cdef int* vals = buf + 2 * ncells
    cdef int* counts = buf + 3 * ncells
    cdef int* cap = counts + nlab + 1
    cdef int i
    cdef long long result
    try:
        for i in range(ncells):
            right[i] = right_l[i]
            above[i] = above_l[i]
            vals[i] = 0
        counts[0] = ncells + 1
        cap[0] = ncells + 1
        for i in range(nlab):
            counts[i + 1] = 0
            cap[i + 1] = content[i]
        with nogil:
            result = _rec(0, ncells, nlab, right, above, vals, counts, cap)
        return int(result)
    finally:
        free(buf)
