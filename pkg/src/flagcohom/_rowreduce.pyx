# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse exact row reduction over the integers.

Same contract as _rowreduce_py.rref: rows are sorted lists of
(column, value) pairs with nonzero Python-int values (arbitrary
precision), and the result is the primitive reduced row echelon form.
The arithmetic stays on Python ints; the win is in the merge loops.
"""

from math import gcd

BACKEND = "c"


cdef list _primitive(list row):
    cdef Py_ssize_t i, n = len(row)
    if n == 0:
        return row
    g = 0
    for i in range(n):
        g = gcd(g, (<tuple>row[i])[1])
        if g == 1:
            break
    if (<tuple>row[0])[1] < 0:
        g = -g
    if g == 0 or g == 1:
        return row
    cdef list out = []
    for i in range(n):
        entry = <tuple>row[i]
        out.append((entry[0], entry[1] // g))
    return out


cdef list _combine(list row, object v, list pivot):
    """lead(pivot)*row - v*pivot, merged by column and made primitive."""
    lead = (<tuple>pivot[0])[1]
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, nr = len(row), np = len(pivot)
    cdef long ci, cj
    while i < nr and j < np:
        ri = <tuple>row[i]
        pj = <tuple>pivot[j]
        ci = ri[0]
        cj = pj[0]
        if ci < cj:
            out.append((ri[0], lead * ri[1]))
            i += 1
        elif ci > cj:
            out.append((pj[0], -v * pj[1]))
            j += 1
        else:
            val = lead * ri[1] - v * pj[1]
            if val:
                out.append((ri[0], val))
            i += 1
            j += 1
    while i < nr:
        ri = <tuple>row[i]
        out.append((ri[0], lead * ri[1]))
        i += 1
    while j < np:
        pj = <tuple>pivot[j]
        out.append((pj[0], -v * pj[1]))
        j += 1
    return _primitive(out)


def rref(rows):
    """Reduce sparse integer rows to (primitive) reduced row echelon form."""
    cdef dict pivots = {}
    cdef list row, p
    cdef Py_ssize_t i
    for r in rows:
        row = list(r)
        while len(row) > 0:
            head = <tuple>row[0]
            p = pivots.get(head[0])
            if p is None:
                break
            row = _combine(row, head[1], p)
        if len(row) > 0:
            pivots[(<tuple>row[0])[0]] = _primitive(row)

    for col in sorted(pivots, reverse=True):
        row = pivots[col]
        while True:
            hit_col = None
            hit_val = None
            for i in range(1, len(row)):
                entry = <tuple>row[i]
                if entry[0] in pivots:
                    hit_col = entry[0]
                    hit_val = entry[1]
                    break
            if hit_col is None:
                break
            row = _combine(row, hit_val, pivots[hit_col])
        pivots[col] = row

    return [pivots[c] for c in sorted(pivots)]
