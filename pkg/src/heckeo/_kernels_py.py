"""Pure-Python kernels: sparse exact elimination and truncated series products.

``_kernels.pyx`` is a line-for-line typed twin of this file; the two must stay
in sync.  Rows are sparse ``{column: value}`` dicts.  Elimination runs
fraction-free on integer rows (each row is rescaled by the lcm of its
denominators and divided by its content), which avoids a gcd per Fraction
operation.
"""
from fractions import Fraction
from math import gcd, lcm


def _integer_row(row):
    out = {}
    den = 1
    for v in row.values():
        if v:
            den = lcm(den, Fraction(v).denominator)
    for c, v in row.items():
        if v:
            v = Fraction(v) * den
            out[c] = v.numerator
    return _primitive(out)


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for c in row:
            row[c] //= g
    return row


def _eliminate(row, col, prow):
    # row <- a*row - b*prow, clearing ``col``; prow[col] is nonzero
    a = prow[col]
    b = row[col]
    g = gcd(a, b)
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
    """Reduced row echelon form of sparse rational rows.

    ``priority`` maps columns to sort keys; the pivot of a new row is its
    column with the smallest key (columns missing from ``priority`` come
    last, by index).  Returns ``{pivot_column: row}`` with the pivot entry
    equal to 1 and no pivot column appearing in any other row.
    """
    if priority is None:
        def key(c):
            return c
    else:
        big = len(priority)

        def key(c):
            k = priority.get(c)
            return (0, k) if k is not None else (1, big + c)

    piv = {}
    for raw in rows:
        row = _integer_row(raw)
        if not row:
            continue
        for p in [c for c in row if c in piv]:
            if p in row:
                row = _eliminate(row, p, piv[p])
        if not row:
            continue
        p = min(row, key=key)
        if row[p] < 0:
            for c in row:
                row[c] = -row[c]
        for q, other in piv.items():
            if p in other:
                piv[q] = _eliminate(other, p, row)
                if piv[q][q] < 0:
                    for c in piv[q]:
                        piv[q][c] = -piv[q][c]
        piv[p] = row
    out = {}
    for p, row in piv.items():
        d = row[p]
        out[p] = {c: Fraction(v, d) for c, v in row.items()}
    return out


def reduce_vector(pivots, vec):
    """Reduce ``vec`` modulo the row space given by ``echelon`` output."""
    vec = {c: Fraction(v) for c, v in vec.items() if v}
    for p in [c for c in vec if c in pivots]:
        f = vec.get(p)
        if not f:
            continue
        for c, v in pivots[p].items():
            w = vec.get(c, 0) - f * v
            if w:
                vec[c] = w
            else:
                vec.pop(c, None)
    return vec


def mul_truncated(a, b, trunc):
    """Product of ``{exponent tuple: coeff}`` maps, dropping degree > trunc."""
    out = {}
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb in b.items():
            if da + sum(eb) > trunc:
                continue
            e = tuple([x + y for x, y in zip(ea, eb)])
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out
