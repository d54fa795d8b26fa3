"""Finite-rank modules over the degenerate affine Hecke algebra.

An :class:`HModule` stores one matrix per generator over a truncated series
ring.  Standard modules are induced from a rank-one module of a parabolic
subalgebra; their basis is indexed by minimal left coset representatives.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .daha import DahaElement, Permutation, multiply
from .kostant import KostantPartition
from .linalg import (
    SeriesMatrix,
    dense_det,
    dense_identity,
    dense_mul,
    dense_nullspace,
    dense_rank,
    nullspace,
    solve_in_span,
)
from .report import Report
from .scalars import DEFAULT_TRUNC, NonUnitError, SeriesRing, TruncatedSeries

MAX_RANK = 5040


class HModuleError(ValueError):
    pass


@dataclass
class HModule:
    n: int
    ring: SeriesRing
    s: list  # s[i-1] is the matrix of s_i
    x: list  # x[j-1] is the matrix of x_j
    labels: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        if len(self.s) != max(self.n - 1, 0) or len(self.x) != self.n:
            raise HModuleError("wrong number of generator matrices")
        r = self.rank
        for g in self.s + self.x:
            if g.shape != (r, r) or g.ring != self.ring:
                raise HModuleError("generator matrices must be square over the module ring")

    @property
    def rank(self) -> int:
        if self.x:
            return self.x[0].nrows
        return len(self.labels)

    def generators(self):
        out = [(f"s{i}", g) for i, g in enumerate(self.s, 1)]
        out += [(f"x{j}", g) for j, g in enumerate(self.x, 1)]
        return out

    def identity(self):
        return SeriesMatrix.identity(self.ring, self.rank)

    def truncate(self, trunc: int) -> "HModule":
        return HModule(
            self.n, self.ring.truncated(trunc),
            [g.truncate(trunc) for g in self.s], [g.truncate(trunc) for g in self.x],
            list(self.labels), list(self.flags), self.name,
        )

    def specialize(self) -> "HModule":
        return self.truncate(0)

    def act_element(self, elem: DahaElement) -> SeriesMatrix:
        """The matrix of an algebra element (PBW terms w x^a)."""
        if elem.n != self.n:
            raise HModuleError("algebra rank mismatch")
        out = SeriesMatrix.zero(self.ring, self.rank, self.rank)
        for (w, a), c in elem.terms.items():
            m = self.identity()
            for i in w.reduced_word():
                m = m @ self.s[i - 1]
            for j, e in enumerate(a):
                for _ in range(e):
                    m = m @ self.x[j]
            out = out + m.scale(c)
        return out

    def relation_residuals(self):
        """``(family, instance, residual matrix)`` for every defining relation."""
        n = self.n
        s, x = self.s, self.x
        one = self.identity()
        out = []
        for i in range(1, n):
            out.append(("involution", f"s{i}^2=1", s[i - 1] @ s[i - 1] - one))
        for i in range(1, n):
            for j in range(i + 2, n):
                out.append(("far commutation", f"s{i}s{j}=s{j}s{i}",
                            s[i - 1] @ s[j - 1] - s[j - 1] @ s[i - 1]))
        for i in range(1, n - 1):
            a, b = s[i - 1], s[i]
            out.append(("braid", f"s{i}s{i+1}s{i}=s{i+1}s{i}s{i+1}", a @ b @ a - b @ a @ b))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out.append(("polynomial commutation", f"x{i}x{j}=x{j}x{i}",
                            x[i - 1] @ x[j - 1] - x[j - 1] @ x[i - 1]))
        for i in range(1, n):
            out.append(("cross", f"x{i+1}s{i}=s{i}x{i}+1",
                        x[i] @ s[i - 1] - s[i - 1] @ x[i - 1] - one))
        for i in range(1, n):
            for j in range(1, n + 1):
                if j not in (i, i + 1):
                    out.append(("mixed commutation", f"x{j}s{i}=s{i}x{j}",
                                x[j - 1] @ s[i - 1] - s[i - 1] @ x[j - 1]))
        return out

    def check_relations(self, name=None) -> Report:
        rep = Report(name or f"relations {self.name}".strip())
        fams = {}
        for fam, inst, res in self.relation_residuals():
            fams.setdefault(fam, []).append((inst, res))
        for fam in RELATION_FAMILIES:
            items = fams.get(fam, [])
            bad = [(inst, res.order()) for inst, res in items if not res.is_zero()]
            rep.add(
                fam,
                not bad,
                witness={"instances": len(items), "failing": [b[0] for b in bad]},
                residual_degree=min(b[1] for b in bad) if bad else None,
            )
        return rep

    def relations_hold(self) -> bool:
        return all(res.is_zero() for _, _, res in self.relation_residuals())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rank": self.rank,
            "num_vars": self.ring.num_vars,
            "trunc_degree": self.ring.trunc_degree,
            "name": self.name,
            "flags": list(self.flags),
            "s_matrices": [g.to_json() for g in self.s],
            "x_matrices": [g.to_json() for g in self.x],
        }

    @classmethod
    def from_json(cls, data) -> "HModule":
        try:
            ring = SeriesRing(int(data["num_vars"]), int(data["trunc_degree"]))
            s = [SeriesMatrix.from_json(ring, g) for g in data["s_matrices"]]
            x = [SeriesMatrix.from_json(ring, g) for g in data["x_matrices"]]
            return cls(int(data["n"]), ring, s, x, [], list(data.get("flags", [])), data.get("name", ""))
        except (KeyError, TypeError) as exc:
            raise HModuleError(f"malformed module JSON: {exc}") from exc


RELATION_FAMILIES = (
    "involution",
    "far commutation",
    "braid",
    "polynomial commutation",
    "cross",
    "mixed commutation",
)


# -- standard modules --------------------------------------------------------

def ordered_parts(pi) -> tuple[list, bool]:
    """Parts sorted decreasingly in the root order; flag repeated parts."""
    parts = sorted(KostantPartition(pi), reverse=True)
    repeated = len(set(parts)) != len(parts)
    return parts, repeated


def block_starts(sizes):
    """1-based first positions a_k of consecutive blocks of the given sizes."""
    out = []
    a = 1
    for s in sizes:
        out.append(a)
        a += s
    return out


def coset_representatives(sizes) -> list[Permutation]:
    """Permutations increasing on each position block: the minimal-length
    representatives of S_n / (S_{n_1} x ... x S_{n_k})."""
    n = sum(sizes)
    labels = [k for k, s in enumerate(sizes) for _ in range(s)]
    starts = block_starts(sizes)
    reps = []
    for lab in sorted(set(permutations(labels))):
        images = [0] * n
        nxt = [a - 1 for a in starts]
        for value, k in enumerate(lab, 1):
            images[nxt[k]] = value
            nxt[k] += 1
        reps.append(Permutation(images))
    return sorted(reps)


def coset_factor(w: Permutation, sizes) -> tuple[Permutation, Permutation]:
    """w = w_min * w_par with w_min block-increasing and w_par parabolic."""
    images = list(w)
    a = 0
    for s in sizes:
        images[a:a + s] = sorted(images[a:a + s])
        a += s
    w_min = Permutation(images)
    return w_min, w_min.inverse() * w


def standard_module(pi, trunc=None, ring=None) -> HModule:
    """The module induced from R_k (k parts) on which x_l acts in block k by
    i_k + (l - a_k) + z_k and the parabolic subgroup acts trivially."""
    parts, repeated = ordered_parts(pi)
    k = len(parts)
    if ring is None:
        ring = SeriesRing(k, DEFAULT_TRUNC if trunc is None else trunc)
    if ring.num_vars != k:
        raise HModuleError(f"need one variable per part ({k})")
    sizes = [j - i for i, j in parts]
    n = sum(sizes)
    reps = coset_representatives(sizes)
    if len(reps) > MAX_RANK:
        raise HModuleError(f"rank {len(reps)} exceeds {MAX_RANK}")
    index = {w: c for c, w in enumerate(reps)}
    starts = block_starts(sizes)
    scalar = [None] * (n + 1)
    for blk, ((i, _), a) in enumerate(zip(parts, starts)):
        for l in range(a, a + sizes[blk]):
            scalar[l] = ring.var(blk + 1) + (i + l - a)

    def image(elem: DahaElement):
        col = {}
        for (w2, a), c in elem.terms.items():
            w_min, _ = coset_factor(w2, sizes)
            v = ring.const(c)
            for l, e in enumerate(a, 1):
                if e:
                    v = v * scalar[l] ** e
            t = index[w_min]
            col[t] = col[t] + v if t in col else v
        return {t: v for t, v in col.items() if v}

    s_mats, x_mats = [], []
    for i in range(1, n):
        t = Permutation.transposition(n, i)
        cols = [{index[coset_factor(t * w, sizes)[0]]: ring.one()} for w in reps]
        s_mats.append(SeriesMatrix(ring, len(reps), len(reps), cols))
    for j in range(1, n + 1):
        xj = DahaElement.x(n, j)
        cols = [image(multiply(xj, DahaElement.from_permutation(w))) for w in reps]
        x_mats.append(SeriesMatrix(ring, len(reps), len(reps), cols))
    flags = ["repeated parts ordered by a stable sort"] if repeated else []
    name = "Std{" + ",".join(f"({i},{j})" for i, j in parts) + "}"
    return HModule(n, ring, s_mats, x_mats, [list(w) for w in reps], flags, name)


def proper_standard(pi) -> HModule:
    m = standard_module(pi, trunc=0)
    m.name = "P" + m.name
    return m


def circledast_dual(mod: HModule) -> HModule:
    """Linear dual twisted by the anti-involution fixing the generators: the
    transposed matrices."""
    if mod.ring.trunc_degree != 0:
        raise HModuleError("the dual is taken at z = 0 (trunc degree 0)")
    return HModule(
        mod.n, mod.ring, [g.T for g in mod.s], [g.T for g in mod.x],
        list(mod.labels), list(mod.flags), f"({mod.name})*",
    )


def proper_costandard(pi) -> HModule:
    return circledast_dual(proper_standard(pi))


# -- fingerprints --------------------------------------------------------------

@dataclass(frozen=True)
class ModuleFingerprint:
    rank: int
    spectrum: tuple  # sorted ((eigenvalue tuple), multiplicity) pairs

    def to_json(self):
        return {
            "rank": self.rank,
            "spectrum": [{"eigenvalues": [str(v) for v in t], "multiplicity": k} for t, k in self.spectrum],
        }


def _restrict(X, basis):
    """Matrix of X on the invariant subspace spanned by ``basis`` (dense rows)."""
    cols = [{i: v for i, v in enumerate(b) if v} for b in basis]
    out_cols = []
    for b in basis:
        img = [sum(X[r][c] * b[c] for c in range(len(b)) if b[c]) for r in range(len(X))]
        coeffs = solve_in_span(cols, {i: v for i, v in enumerate(img) if v})
        if coeffs is None:
            raise HModuleError("subspace is not invariant (operators do not commute)")
        out_cols.append(coeffs)
    d = len(basis)
    return [[out_cols[j][i] for j in range(d)] for i in range(d)]


def _generalized_eigenspaces(Y):
    """``[(c, basis)]`` for integer eigenvalues c of Y; fails on any other."""
    d = len(Y)
    bound = max((sum(abs(v) for v in row) for row in Y), default=0)
    bound = int(bound) + 1
    found = []
    total = 0
    for c in range(-bound, bound + 1):
        shifted = [[Y[i][j] - (c if i == j else 0) for j in range(d)] for i in range(d)]
        if dense_rank(shifted) == d:
            continue
        power = shifted
        for _ in range(d - 1):
            power = dense_mul(power, shifted)
        ker = dense_nullspace(power, d)
        found.append((Fraction(c), ker))
        total += len(ker)
    if total != d:
        raise HModuleError("x-spectrum is not integral")
    return found


def joint_spectrum(mats) -> Counter:
    """Joint generalized spectrum of commuting rational matrices."""
    if not mats:
        return Counter()
    d = len(mats[0])
    spaces = [(dense_identity(d), ())]
    for X in mats:
        nxt = []
        for basis, prefix in spaces:
            Y = _restrict(X, basis)
            for c, sub in _generalized_eigenspaces(Y):
                lifted = [
                    [sum(v[t] * basis[t][r] for t in range(len(basis))) for r in range(d)]
                    for v in sub
                ]
                nxt.append((lifted, prefix + (c,)))
        spaces = nxt
    out = Counter()
    for basis, tup in spaces:
        out[tup] += len(basis)
    return out


def fingerprint(mod: HModule) -> ModuleFingerprint:
    xs = [g.constant_term() for g in mod.x]
    for a in range(len(xs)):
        for b in range(a + 1, len(xs)):
            if dense_mul(xs[a], xs[b]) != dense_mul(xs[b], xs[a]):
                raise HModuleError(f"x{a+1} and x{b+1} do not commute")
    spectrum = joint_spectrum(xs) if xs else Counter({(): mod.rank})
    return ModuleFingerprint(mod.rank, tuple(sorted(spectrum.items())))


# -- intertwiners --------------------------------------------------------------

def intertwiner_space(A: HModule, B: HModule) -> list[SeriesMatrix]:
    """A Q-basis of {T : T rho_A(g) = rho_B(g) T for all generators g}."""
    if A.n != B.n or A.ring != B.ring:
        raise HModuleError("modules must share n and ring")
    ring = A.ring
    ra, rb = A.rank, B.rank
    D = ring.dim
    mons = ring.monomials
    idx = ring.monomial_index
    N = ring.trunc_degree

    def var(i, l, a):
        return (i * ra + l) * D + a

    rows = {}

    def bump(key, col, c):
        row = rows.setdefault(key, {})
        v = row.get(col, 0) + c
        if v:
            row[col] = v
        else:
            row.pop(col, None)

    for g, (ga, gb) in enumerate(zip(A.s + A.x, B.s + B.x)):
        # (T A_g)[i, j] = sum_l T[i, l] A_g[l, j]
        for (l, j), v in ga.entries():
            for be, bc in v.items():
                db = sum(be)
                for ai, ae in enumerate(mons):
                    if sum(ae) + db > N:
                        continue
                    c = idx[tuple(x + y for x, y in zip(ae, be))]
                    for i in range(rb):
                        bump((g, i, j, c), var(i, l, ai), bc)
        # (B_g T)[i, j] = sum_l B_g[i, l] T[l, j]
        for (i, l), v in gb.entries():
            for be, bc in v.items():
                db = sum(be)
                for ai, ae in enumerate(mons):
                    if sum(ae) + db > N:
                        continue
                    c = idx[tuple(x + y for x, y in zip(ae, be))]
                    for j in range(ra):
                        bump((g, i, j, c), var(l, j, ai), -bc)
    kernel = nullspace([r for r in rows.values() if r], rb * ra * D)
    out = []
    for vec in kernel:
        entries = {}
        for col, c in vec.items():
            il, a = divmod(col, D)
            i, l = divmod(il, ra)
            entries.setdefault((i, l), {})[mons[a]] = c
        out.append(
            SeriesMatrix.from_entries(
                ring, rb, ra, {k: TruncatedSeries(ring, v) for k, v in entries.items()}
            )
        )
    return out


def find_intertwiner(A: HModule, B: HModule, seed: int = 0, tries: int = 16):
    """An intertwiner A -> B with invertible constant term, or None.

    Invertibility over the local ring is decided by the constant term.  A
    random combination of the solution basis is invertible unless the
    determinant polynomial vanishes there, so a few seeded draws suffice.
    """
    if A.n != B.n or A.ring != B.ring or A.rank != B.rank:
        return None
    basis = intertwiner_space(A, B)
    if not basis:
        return None
    rng = random.Random(seed)
    consts = [b.constant_term() for b in basis]
    r = A.rank
    for attempt in range(tries):
        if attempt == 0 and len(basis) == 1:
            coeffs = [1]
        else:
            coeffs = [rng.randint(-1000, 1000) for _ in basis]
        c0 = [[sum(c * m[i][j] for c, m in zip(coeffs, consts)) for j in range(r)] for i in range(r)]
        if dense_det(c0) != 0:
            T = SeriesMatrix.zero(A.ring, r, r)
            for c, b in zip(coeffs, basis):
                if c:
                    T = T + b.scale(c)
            return T
    return None


def is_intertwiner(T: SeriesMatrix, A: HModule, B: HModule) -> bool:
    return all((T @ ga - gb @ T).is_zero() for ga, gb in zip(A.s + A.x, B.s + B.x))


def inverse_intertwiner(T: SeriesMatrix):
    try:
        return T.invert()
    except NonUnitError:
        return None
