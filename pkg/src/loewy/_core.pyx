# cython: language_level=3, boundscheck=False, wraparound=False
"""Exact integer row-reduction primitives (compiled backend).

Mirror of ``_core_py``: same functions, same semantics. Entries are Python
ints (arbitrary precision); the speedup comes from compiled index loops and
call overhead, not from machine arithmetic.
"""

from math import gcd

BACKEND = "cython"


cpdef list make_primitive(list row):
    cdef Py_ssize_t i, n = len(row)
    cdef object g = 0
    cdef object x, first
    for i in range(n):
        x = row[i]
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g == 0:
        return row
    first = 0
    for i in range(n):
        x = row[i]
        if x:
            first = x
            break
    if first < 0:
        g = -g
    if g != 1:
        for i in range(n):
            row[i] = row[i] // g
    return row


cpdef Py_ssize_t first_nonzero(list row, Py_ssize_t limit):
    cdef Py_ssize_t i
    for i in range(limit):
        if row[i]:
            return i
    return -1


cpdef list reduce_row(list row, list rows, list pivots, Py_ssize_t limit):
    cdef list out = list(row)
    cdef Py_ssize_t i, j, p, n = len(out)
    cdef Py_ssize_t m = len(pivots)
    cdef object c, a
    cdef list r
    for j in range(m):
        p = <Py_ssize_t> pivots[j]
        c = out[p]
        if c:
            r = <list> rows[j]
            a = r[p]
            for i in range(n):
                out[i] = a * out[i] - c * r[i]
    make_primitive(out)
    return out


cpdef Py_ssize_t insert_row(list rows, list pivots, list row, Py_ssize_t limit):
    cdef list red = reduce_row(row, rows, pivots, limit)
    cdef Py_ssize_t p = first_nonzero(red, limit)
    if p < 0:
        return -1
    cdef object a = red[p]
    cdef object c
    cdef Py_ssize_t i, j, n = len(red)
    cdef list r
    for j in range(len(rows)):
        r = <list> rows[j]
        c = r[p]
        if c:
            for i in range(n):
                r[i] = a * r[i] - c * red[i]
            make_primitive(r)
    cdef Py_ssize_t lo = 0, hi = len(pivots), mid
    while lo < hi:
        mid = (lo + hi) // 2
        if <Py_ssize_t> pivots[mid] < p:
            lo = mid + 1
        else:
            hi = mid
    rows.insert(lo, red)
    pivots.insert(lo, p)
    return p
