"""Exact integer row-reduction primitives (pure-Python backend).

Rows are dense lists of Python ints; arithmetic never leaves the integers
(cross-multiplication elimination, gcd normalisation), so results are exact at
any size. A stored basis is kept fully inter-reduced: every row has zeros at
all other rows' pivot columns, which makes a single elimination pass correct
regardless of processing order.

Rows may carry extra bookkeeping columns past ``limit``; pivots are only ever
chosen among columns < limit, but eliminations act on the whole row.
"""

from math import gcd

BACKEND = "python"


def make_primitive(row):
    """Divide a row by the gcd of its entries, in place; sign-normalise so the
    first nonzero entry is positive. Returns the row."""
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g == 0:
        return row
    first = 0
    for x in row:
        if x:
            first = x
            break
    if first < 0:
        g = -g
    if g != 1:
        n = len(row)
        for i in range(n):
            row[i] //= g
    return row


def first_nonzero(row, limit):
    """Index of the first nonzero entry among columns [0, limit), or -1."""
    for i in range(limit):
        if row[i]:
            return i
    return -1


def reduce_row(row, rows, pivots, limit):
    """Reduce ``row`` modulo an inter-reduced basis; returns a new primitive row.

    ``rows[j]`` has pivot column ``pivots[j]`` (< limit). The input list is not
    modified.
    """
    out = list(row)
    n = len(out)
    for j in range(len(pivots)):
        p = pivots[j]
        c = out[p]
        if c:
            r = rows[j]
            a = r[p]
            for i in range(n):
                out[i] = a * out[i] - c * r[i]
    make_primitive(out)
    return out


def insert_row(rows, pivots, row, limit):
    """Reduce ``row`` and, if independent, add it to the basis.

    Keeps the basis inter-reduced and pivot-sorted. Returns the new pivot
    column, or -1 when the row was already in the span.
    """
    red = reduce_row(row, rows, pivots, limit)
    p = first_nonzero(red, limit)
    if p < 0:
        return -1
    a = red[p]
    n = len(red)
    for j in range(len(rows)):
        r = rows[j]
        c = r[p]
        if c:
            for i in range(n):
                r[i] = a * r[i] - c * red[i]
            make_primitive(r)
    lo = 0
    hi = len(pivots)
    while lo < hi:
        mid = (lo + hi) // 2
        if pivots[mid] < p:
            lo = mid + 1
        else:
            hi = mid
    rows.insert(lo, red)
    pivots.insert(lo, p)
    return p
