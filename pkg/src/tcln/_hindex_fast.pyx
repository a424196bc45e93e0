# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled h-index scan: copy, sort descending, find the break rank."""

from libc.stdlib cimport malloc, free, qsort


cdef int _cmp_desc(const void *a, const void *b) noexcept nogil:
    cdef long long x = (<const long long *> a)[0]
    cdef long long y = (<const long long *> b)[0]
    if x < y:
        return 1
    if x > y:
        return -1
    return 0


def h_index(counts):
    """Largest k such that at least k entries of ``counts`` are >= k."""
    cdef Py_ssize_t n = len(counts)
    if n == 0:
        return 0
    cdef long long *buf = <long long *> malloc(n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef int h = 0
    try:
        for i in range(n):
            buf[i] = counts[i]
        qsort(buf, n, sizeof(long long), _cmp_desc)
        for i in range(n):
            if buf[i] < i + 1:
                break
            h = i + 1
        return h
    finally:
        free(buf)
