# cython: boundscheck=False, wraparound=False
"""Compiled string kernels: Levenshtein distance and normalized similarity.

Hot loop of the fuzzy localization scan; a pure-Python twin lives in
``_pure.py`` and both must stay behaviour-identical.
"""

from libc.stdlib cimport free, malloc


cpdef int levenshtein(unicode a, unicode b):
    """Edit distance (insert/delete/substitute, unit costs)."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    if la == 0:
        return <int> lb
    if lb == 0:
        return <int> la

    cdef int *prev = <int *> malloc((lb + 1) * sizeof(int))
    cdef int *curr = <int *> malloc((lb + 1) * sizeof(int))
    if prev == NULL or curr == NULL:
        if prev != NULL:
            free(prev)
        if curr != NULL:
            free(curr)
        raise MemoryError()

    cdef Py_ssize_t i, j
    cdef int best, cand
    cdef int *tmp
    cdef Py_UCS4 ca
    try:
        for j in range(lb + 1):
            prev[j] = <int> j
        for i in range(la):
            ca = a[i]
            curr[0] = <int> i + 1
            for j in range(lb):
                best = prev[j] + (0 if ca == b[j] else 1)
                cand = curr[j] + 1
                if cand < best:
                    best = cand
                cand = prev[j + 1] + 1
                if cand < best:
                    best = cand
                curr[j + 1] = best
            tmp = prev
            prev = curr
            curr = tmp
        return prev[lb]
    finally:
        free(prev)
        free(curr)


cpdef double similarity(unicode a, unicode b):
    """Normalized similarity: 1 - lev(a, b) / max(len); 1.0 for two empties."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t longest = la if la > lb else lb
    if longest == 0:
        return 1.0
    return 1.0 - (<double> levenshtein(a, b)) / (<double> longest)
