"""Exact linear algebra over Q and over the truncated series ring.

Dense rational matrices are lists of lists of Fractions.  Larger systems go
through the sparse echelon kernel in :mod:`heckeo._backend`.  Matrices over
a :class:`~heckeo.scalars.SeriesRing` are :class:`SeriesMatrix` objects,
stored column-sparse.
"""
from __future__ import annotations

from fractions import Fraction

from ._backend import echelon, reduce_vector
from .scalars import NonUnitError, SeriesRing, TruncatedSeries

__all__ = [
    "echelon",
    "reduce_vector",
    "rank",
    "nullspace",
    "dense_nullspace",
    "dense_rank",
    "dense_inverse",
    "dense_det",
    "dense_mul",
    "dense_identity",
    "solve_in_span",
    "SeriesMatrix",
]


def _rows_of(dense):
    return [{j: v for j, v in enumerate(row) if v} for row in dense]


def rank(rows) -> int:
    return len(echelon(rows))


def nullspace(rows, ncols: int) -> list[dict]:
    """Basis of {v : row . v = 0 for every sparse row}, as sparse dicts."""
    piv = echelon(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = {f: Fraction(1)}
        for p, row in piv.items():
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def dense_rank(dense) -> int:
    return rank(_rows_of(dense))


def dense_nullspace(dense, ncols: int | None = None) -> list[list[Fraction]]:
    if ncols is None:
        ncols = len(dense[0]) if dense else 0
    return [[v.get(j, Fraction(0)) for j in range(ncols)] for v in nullspace(_rows_of(dense), ncols)]


def dense_identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def dense_mul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for l in range(inner):
            v = row[l]
            if v:
                bl = b[l]
                for j in range(cols):
                    if bl[j]:
                        acc[j] += v * bl[j]
        out.append(acc)
    return out


def dense_inverse(dense):
    """Inverse of a square rational matrix, or None if singular."""
    n = len(dense)
    rows = [
        {**{j: v for j, v in enumerate(row) if v}, **{n + i: Fraction(1)}}
        for i, row in enumerate(dense)
    ]
    piv = echelon(rows)
    if any(p >= n for p in piv) or len(piv) < n:
        return None
    return [[piv[i].get(n + j, Fraction(0)) for j in range(n)] for i in range(n)]


def dense_det(dense) -> Fraction:
    """Determinant by exact Gaussian elimination."""
    a = [list(map(Fraction, row)) for row in dense]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                for j in range(c, n):
                    a[r][j] -= f * a[c][j]
    return det


def solve_in_span(columns, target):
    """Coefficients x with sum_i x_i columns[i] = target, or None.

    ``columns`` and ``target`` are sparse dicts over the same index set.
    """
    # unknowns are indexed 0..k-1; equations one per coordinate
    coords = set(target)
    for col in columns:
        coords.update(col)
    k = len(columns)
    rows = []
    for c in sorted(coords, key=repr):
        row = {i: col[c] for i, col in enumerate(columns) if col.get(c)}
        t = target.get(c)
        if t:
            row[k] = -Fraction(t)
        if row:
            rows.append(row)
    # solve sum x_i col_i - target = 0 with the last unknown pinned to 1
    piv = echelon(rows)
    if k in piv:
        return None
    x = [Fraction(0)] * k
    for p, row in piv.items():
        x[p] = -row.get(k, Fraction(0))
    return x


class SeriesMatrix:
    """A matrix over a truncated series ring, stored as sparse columns."""

    __slots__ = ("ring", "nrows", "ncols", "cols")

    def __init__(self, ring: SeriesRing, nrows: int, ncols: int, cols=None):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        if cols is None:
            cols = [{} for _ in range(ncols)]
        self.cols = cols

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, ring, nrows, ncols):
        return cls(ring, nrows, ncols)

    @classmethod
    def identity(cls, ring, n):
        one = ring.one()
        return cls(ring, n, n, [{j: one} for j in range(n)])

    @classmethod
    def scalar(cls, ring, n, value):
        value = ring.coerce(value)
        if value.is_zero():
            return cls(ring, n, n)
        return cls(ring, n, n, [{j: value} for j in range(n)])

    @classmethod
    def from_entries(cls, ring, nrows, ncols, entries):
        """Build from ``{(i, j): value}`` with values series or rationals."""
        m = cls(ring, nrows, ncols)
        for (i, j), v in entries.items():
            v = ring.coerce(v)
            if v:
                m.cols[j][i] = m.cols[j].get(i, ring.zero()) + v
        for col in m.cols:
            for i in [i for i, v in col.items() if not v]:
                del col[i]
        return m

    @classmethod
    def from_dense(cls, ring, dense):
        nrows = len(dense)
        ncols = len(dense[0]) if dense else 0
        return cls.from_entries(
            ring, nrows, ncols,
            {(i, j): v for i, row in enumerate(dense) for j, v in enumerate(row) if v},
        )

    # -- access -----------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i, j) -> TruncatedSeries:
        return self.cols[j].get(i) or self.ring.zero()

    def entries(self):
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                yield (i, j), v

    def column(self, j) -> dict:
        return dict(self.cols[j])

    def apply(self, vec: dict) -> dict:
        """Multiply a sparse column vector ``{index: series}``."""
        out = {}
        for j, x in vec.items():
            for i, v in self.cols[j].items():
                w = out.get(i)
                out[i] = v * x if w is None else w + v * x
        return {i: v for i, v in out.items() if v}

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, SeriesMatrix):
            raise TypeError("expected SeriesMatrix")
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch {self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            for i, v in b.items():
                w = c.get(i)
                w = v if w is None else w + v
                if w:
                    c[i] = w
                else:
                    c.pop(i, None)
            cols.append(c)
        return SeriesMatrix(self.ring, self.nrows, self.ncols, cols)

    def __neg__(self):
        return SeriesMatrix(
            self.ring, self.nrows, self.ncols, [{i: -v for i, v in c.items()} for c in self.cols]
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = self.ring.coerce(s)
        cols = []
        for c in self.cols:
            cols.append({i: w for i, v in c.items() if (w := v * s)})
        return SeriesMatrix(self.ring, self.nrows, self.ncols, cols)

    def __matmul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return SeriesMatrix(
            self.ring, self.nrows, other.ncols, [self.apply(c) for c in other.cols]
        )

    def transpose(self):
        cols = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                cols[i][j] = v
        return SeriesMatrix(self.ring, self.ncols, self.nrows, cols)

    @property
    def T(self):
        return self.transpose()

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def order(self):
        """Lowest degree of a nonzero entry coefficient; None for the zero matrix."""
        orders = [v.order() for c in self.cols for v in c.values()]
        return min(orders) if orders else None

    def __eq__(self, other):
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.cols == other.cols

    def __repr__(self):
        return f"SeriesMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()}, {self.ring})"

    # -- ring maps --------------------------------------------------------
    def constant_term(self):
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries():
            out[i][j] = v.constant_term
        return out

    def coefficient(self, exps):
        exps = tuple(exps)
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries():
            out[i][j] = v.coeff(exps)
        return out

    def truncate(self, trunc: int):
        ring = self.ring.truncated(trunc)
        cols = []
        for c in self.cols:
            cols.append({i: w for i, v in c.items() if (w := v.truncate(trunc))})
        return SeriesMatrix(ring, self.nrows, self.ncols, cols)

    def specialize(self):
        return self.truncate(0)

    def block_diag(self, other):
        self._check(other)
        cols = [dict(c) for c in self.cols]
        for c in other.cols:
            cols.append({i + self.nrows: v for i, v in c.items()})
        return SeriesMatrix(self.ring, self.nrows + other.nrows, self.ncols + other.ncols, cols)

    def invert(self):
        """Inverse over the local ring; requires an invertible constant term."""
        if self.nrows != self.ncols:
            raise ValueError("non-square matrix")
        inv0 = dense_inverse(self.constant_term())
        if inv0 is None:
            raise NonUnitError("constant term is singular")
        a0inv = SeriesMatrix.from_dense(self.ring, inv0)
        n = self.nrows
        # self = a0 (1 + t) with t nilpotent modulo the truncation
        t = a0inv @ self - SeriesMatrix.identity(self.ring, n)
        out = SeriesMatrix.identity(self.ring, n)
        power = SeriesMatrix.identity(self.ring, n)
        for _ in range(self.ring.trunc_degree):
            power = -(power @ t)
            if power.is_zero():
                break
            out = out + power
        return out @ a0inv

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [
                {"row": i, "col": j, "value": v.to_json()}
                for (i, j), v in sorted(self.entries())
            ],
        }

    @classmethod
    def from_json(cls, ring, data):
        return cls.from_entries(
            ring, data["rows"], data["cols"],
            {(e["row"], e["col"]): TruncatedSeries.from_json(ring, e["value"]) for e in data["entries"]},
        )
