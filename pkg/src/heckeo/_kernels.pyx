# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``; keep the two in sync."""
from fractions import Fraction
from math import gcd, lcm


cdef dict _integer_row(dict row):
    cdef dict out = {}
    cdef object den = 1
    cdef object v, c
    for v in row.values():
        if v:
            den = lcm(den, Fraction(v).denominator)
    for c, v in row.items():
        if v:
            v = Fraction(v) * den
            out[c] = v.numerator
    return _primitive(out)


cdef dict _primitive(dict row):
    cdef object g = 0
    cdef object v, c
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for c in row:
            row[c] //= g
    return row


cdef dict _eliminate(dict row, object col, dict prow):
    cdef object a = prow[col]
    cdef object b = row[col]
    cdef object g = gcd(a, b)
    cdef object c, v, w
    a //= g
    b //= g
    if a != 1:
        for c in row:
            row[c] *= a
    for c, v in prow.items():
        w = row.get(c, 0) - b * v
        if w:
            row[c] = w
        elif c in row:
            del row[c]
    return _primitive(row)


def echelon(rows, priority=None):
    """Reduced row echelon form of sparse rational rows (see ``_kernels_py``)."""
    cdef dict piv = {}
    cdef dict row, other
    cdef object p, q, c
    cdef Py_ssize_t big
    if priority is None:
        key = None
    else:
        big = len(priority)

        def key(c):
            k = priority.get(c)
            return (0, k) if k is not None else (1, big + c)

    for raw in rows:
        row = _integer_row(raw)
        if not row:
            continue
        for p in [c for c in row if c in piv]:
            if p in row:
                row = _eliminate(row, p, piv[p])
        if not row:
            continue
        p = min(row) if key is None else min(row, key=key)
        if row[p] < 0:
            for c in row:
                row[c] = -row[c]
        for q, other in piv.items():
            if p in other:
                other = _eliminate(other, p, row)
                if other[q] < 0:
                    for c in other:
                        other[c] = -other[c]
                piv[q] = other
        piv[p] = row
    out = {}
    for p, row in piv.items():
        d = row[p]
        out[p] = {c: Fraction(v, d) for c, v in row.items()}
    return out


def reduce_vector(dict pivots, vec):
    cdef dict out = {c: Fraction(v) for c, v in vec.items() if v}
    cdef object p, f, c, v, w
    for p in [c for c in out if c in pivots]:
        f = out.get(p)
        if not f:
            continue
        for c, v in (<dict>pivots[p]).items():
            w = out.get(c, 0) - f * v
            if w:
                out[c] = w
            else:
                out.pop(c, None)
    return out


def mul_truncated(dict a, dict b, int trunc):
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef object ca, cb, v
    cdef int da, db, k, n
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb in b.items():
            db = sum(eb)
            if da + db > trunc:
                continue
            n = len(ea)
            e = tuple([ea[k] + eb[k] for k in range(n)])
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out
