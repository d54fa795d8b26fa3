"""The functor from deformed category O to Hecke modules, on the coinvariant model.

For a gl_m-module M the functor is realised as the weight-0 part of
``(Vbar^{(x)n} (x) M) / n_-``.  Tensor factors ``0..n-1`` are copies of the
dual vector representation and factor ``n`` is M.  The Hecke generators act by

    s_i = Omega^(i-1, i),        x_i = -sum_{j=i..n} Omega^(i-1, j) - m,

which preserve weight and the n_- image, so they descend to the quotient.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial

from .glm import (
    CoinvariantError,
    SupportError,
    TensorModule,
    _add,
    _add_vec,
    character_module,
    deformed_verma,
    dual_vector_rep,
    dual_verma,
    gl2_simple,
    nminus_coinvariants_weight0,
    phi_support,
    shift,
    tensor,
    vector_rep,
    verma,
)
from .hmodules import (
    HModule,
    circledast_dual,
    find_intertwiner,
    fingerprint,
    inverse_intertwiner,
    is_intertwiner,
    intertwiner_space,
    proper_standard,
    standard_module,
)
from .kostant import (
    _check_lambda,
    is_dominant,
    kp_of_weight,
    orbit,
    rho as standard_rho,
    verify_orbit_embedding,
)
from .linalg import SeriesMatrix, dense_det, nullspace
from .report import Report
from .scalars import DEFAULT_TRUNC, SeriesRing


class FunctorError(ValueError):
    pass


@dataclass(frozen=True)
class FunctorContext:
    """Parameters shared by one orbit: rank m, dominant lambda, n and N.

    ``rho`` defaults to (0, -1, ..., -m+1).  Another regular dominant choice
    only relabels weights: the highest weight used for mu is mu - rho and the
    Kostant partition is read off from mu - rho + rho_standard.
    """

    m: int
    lam: tuple
    N: int = DEFAULT_TRUNC
    rho: tuple | None = None

    def __post_init__(self):
        lam = tuple(int(v) for v in self.lam)
        if len(lam) != self.m:
            raise FunctorError(f"lambda {lam} has length {len(lam)}, expected m={self.m}")
        if self.rho is None:
            object.__setattr__(self, "rho", standard_rho(self.m))
            _check_lambda(lam)
        else:
            r = tuple(int(v) for v in self.rho)
            if len(r) != self.m or len(set(r)) != self.m or not is_dominant(r):
                raise FunctorError(f"rho {r} must be regular dominant of length {self.m}")
            object.__setattr__(self, "rho", r)
            _check_lambda(self.standard_weight(lam))
        object.__setattr__(self, "lam", lam)
        if self.N < 0:
            raise FunctorError("trunc degree must be non-negative")

    @property
    def n(self) -> int:
        return sum(l - r for l, r in zip(self.lam, self.rho))

    @property
    def ring(self) -> SeriesRing:
        return SeriesRing(self.m, self.N)

    def standard_weight(self, mu) -> tuple:
        return tuple(a - r + s for a, r, s in zip(mu, self.rho, standard_rho(self.m)))

    def orbit(self) -> list:
        return orbit(self.lam)

    def check_mu(self, mu) -> tuple:
        mu = tuple(int(v) for v in mu)
        if sorted(mu) != sorted(self.lam):
            raise FunctorError(f"{mu} is not in the orbit of {self.lam}")
        return mu

    def highest(self, mu) -> tuple:
        """mu - rho: the highest weight of the Verma module attached to mu."""
        return tuple(a - r for a, r in zip(self.check_mu(mu), self.rho))

    def block_sizes(self, mu) -> tuple:
        """n_k = mu_k + k - 1 (the content of the distinguished vector)."""
        return self.highest(mu)

    def kp(self, mu):
        return kp_of_weight(self.standard_weight(self.check_mu(mu)))

    def multinomial(self, mu) -> int:
        out = factorial(self.n)
        for k in self.block_sizes(mu):
            out //= factorial(k)
        return out

    def to_json(self):
        return {"m": self.m, "lambda": list(self.lam), "n": self.n, "trunc": self.N, "rho": list(self.rho)}


def omega(T: TensorModule, a: int, b: int, vec: dict) -> dict:
    """Omega^(a,b) on a tensor product (module-level so it can be swapped in
    negative-control tests)."""
    return T.omega(a, b, vec)


def hecke_operators(T: TensorModule, n: int):
    """``{name: function}`` for s_1..s_{n-1}, x_1..x_n on Vbar^n (x) M."""
    m = T.m

    def s_op(i):
        return lambda vec: omega(T, i - 1, i, vec)

    def x_op(i):
        def f(vec):
            out = {}
            # factors n.. form the M block
            for j in range(i, len(T.factors)):
                _add_vec(out, omega(T, i - 1, j, vec), -1)
            _add_vec(out, vec, -m)
            return out

        return f

    ops = {f"s{i}": s_op(i) for i in range(1, n)}
    ops.update({f"x{i}": x_op(i) for i in range(1, n + 1)})
    return ops


def phi_with_diagnostics(M, ctx: FunctorContext):
    """``(HModule, {operator: descends?})`` without raising on bad descent."""
    n = ctx.n
    if M.m != ctx.m:
        raise FunctorError("module rank differs from the context")
    Vb = dual_vector_rep(M.m, M.ring)
    T = tensor(*([Vb] * n + [M]))
    coinv = nminus_coinvariants_weight0(T)
    ops = hecke_operators(T, n)
    descends = {name: coinv.preserved_by(op) for name, op in ops.items()}
    s = [coinv.descend(ops[f"s{i}"]) for i in range(1, n)]
    x = [coinv.descend(ops[f"x{i}"]) for i in range(1, n + 1)]
    H = HModule(n, M.ring, s, x, [list(k) for k in coinv.complement], [], f"Phi({getattr(M, 'name', '')})")
    return H, descends


def phi(M, ctx: FunctorContext, check: bool = True) -> HModule:
    """The Hecke module attached to M, with every relation checked on return."""
    H, descends = phi_with_diagnostics(M, ctx)
    if check:
        bad = [k for k, ok in descends.items() if not ok]
        if bad:
            raise FunctorError(f"operators {bad} do not preserve the n_- image")
        if not H.relations_hold():
            raise FunctorError("Hecke relations fail on the functor image")
    return H


# -- modules fed to the functor ---------------------------------------------------

def functor_ring(ctx, trunc=None):
    return SeriesRing(ctx.m, ctx.N if trunc is None else trunc)


def deformed_verma_for(mu, ctx, trunc=None):
    h = ctx.highest(mu)
    return deformed_verma(h, phi_support(h, ctx.n), ring=functor_ring(ctx, trunc), name=f"Mtilde{h}")


def verma_for(mu, ctx):
    h = ctx.highest(mu)
    return verma(h, phi_support(h, ctx.n), ctx.m)


def dual_verma_for(mu, ctx):
    h = ctx.highest(mu)
    return dual_verma(h, phi_support(h, ctx.n), ctx.m)


# -- fast model ---------------------------------------------------------------

def _vbar_move(i, j, letter):
    """e_ij on ebar_letter: (new letter, coefficient) or None."""
    if letter != i:
        return None
    return j, -1


def phi_deformed_verma_fast(mu, ctx: FunctorContext, trunc=None) -> HModule:
    """The image of the deformed Verma module computed on (Vbar^n)_(-h) (x) R.

    Mod n_- the lowering part of M acts through the Vbar factors, so the
    pairing of factor a with M reduces to

        sum_i (h_i + z_i) e_ii^(a) - sum_{i<j} e_ji^(Vbar^n) e_ij^(a).

    Basis vectors are words w (letter k = ebar_k) with content h, in
    lexicographic order; the first is the distinguished vector u.
    """
    h = ctx.highest(mu)
    m, n = ctx.m, ctx.n
    ring = functor_ring(ctx, trunc)
    letters = [k for k in range(1, m + 1) for _ in range(h[k - 1])]
    words = sorted(set(permutations(letters)))
    index = {w: t for t, w in enumerate(words)}
    z = [ring.var(k) for k in range(1, m + 1)]

    def swap(a, b, vec):
        out = {}
        for w, c in vec.items():
            for i in range(1, m + 1):
                for j in range(1, m + 1):
                    step = _vbar_move(j, i, w[b])
                    if step is None:
                        continue
                    w1 = w[:b] + (step[0],) + w[b + 1:]
                    step2 = _vbar_move(i, j, w1[a])
                    if step2 is None:
                        continue
                    w2 = w1[:a] + (step2[0],) + w1[a + 1:]
                    _add(out, w2, c * (step[1] * step2[1]))
        return out

    def reduced(a, vec):
        out = {}
        for w, c in vec.items():
            k = w[a]
            # diagonal part: e_kk ebar_k = -ebar_k
            _add(out, w, -(z[k - 1] + h[k - 1]) * c)
            for j in range(k + 1, m + 1):
                # e_kj^(a): ebar_k -> -ebar_j, then e_jk on every factor
                w1 = w[:a] + (j,) + w[a + 1:]
                for b in range(n):
                    if w1[b] == j:
                        w2 = w1[:b] + (k,) + w1[b + 1:]
                        _add(out, w2, -c)
        return out

    def s_op(i):
        return lambda vec: swap(i - 1, i, vec)

    def x_op(i):
        def f(vec):
            out = {}
            for j in range(i, n):
                _add_vec(out, swap(i - 1, j, vec), -1)
            _add_vec(out, reduced(i - 1, vec), -1)
            _add_vec(out, vec, -m)
            return out

        return f

    def matrix(op):
        one = ring.one()
        cols = []
        for w in words:
            img = op({w: one})
            cols.append({index[w2]: v for w2, v in img.items()})
        return SeriesMatrix(ring, len(words), len(words), cols)

    s = [matrix(s_op(i)) for i in range(1, n)]
    x = [matrix(x_op(i)) for i in range(1, n + 1)]
    return HModule(n, ring, s, x, [list(w) for w in words], [], f"PhiFast{h}")


def expected_u_eigenvalues(mu, ctx, ring=None):
    """Scalars by which x_1..x_n should act on u: -k+1+(l-a_k)+z_k on block k."""
    ring = ring or ctx.ring
    out = []
    for k, size in enumerate(ctx.block_sizes(mu), 1):
        for off in range(size):
            out.append(ring.var(k) + (-k + 1 + off))
    return out


def check_u_eigenvalues(mu, ctx, H=None) -> Report:
    H = H or phi_deformed_verma_fast(mu, ctx)
    rep = Report(f"eigenvalues on u for mu={tuple(mu)}")
    expected = expected_u_eigenvalues(mu, ctx, H.ring)
    starts = []
    a = 1
    for size in ctx.block_sizes(mu):
        starts.append(a)
        a += size
    for l, (X, val) in enumerate(zip(H.x, expected), 1):
        got = X.apply({0: H.ring.one()})
        ok = got == ({0: val} if val else {})
        k = max(t for t, s in enumerate(starts, 1) if s <= l)
        label = "block start" if l == starts[k - 1] else "block interior"
        rep.add(f"x{l} u ({label}, k={k})", ok, witness={"expected": str(val), "got": {str(i): str(v) for i, v in got.items()}})
    return rep


# -- verification drivers --------------------------------------------------------

def _det_witness(T, space_dim):
    return {"intertwiner_space_dim": space_dim, "constant_det": str(dense_det(T.constant_term()))}


def _intertwine(rep, label, A, B, seed):
    if A.rank != B.rank:
        rep.add(label, False, detail=f"ranks differ: {A.rank} vs {B.rank}")
        return None
    T = find_intertwiner(A, B, seed=seed)
    if T is None:
        rep.add(label, False, detail="no invertible intertwiner", witness={"intertwiner_space_dim": len(intertwiner_space(A, B))})
        return None
    inv = inverse_intertwiner(T)
    ok = is_intertwiner(T, A, B) and inv is not None and is_intertwiner(inv, B, A)
    rep.add(label, ok, witness=_det_witness(T, len(intertwiner_space(A, B))))
    return T


def verify_hecke_relations(M, ctx: FunctorContext, name=None) -> Report:
    """Relation sweep on the functor image; failures are reported, not raised."""
    rep = Report(name or f"hecke relations on Phi({getattr(M, 'name', '')})")
    try:
        H, descends = phi_with_diagnostics(M, ctx)
    except (CoinvariantError, SupportError) as exc:
        rep.add("coinvariant quotient", False, detail=str(exc))
        return rep
    bad = sorted(k for k, ok in descends.items() if not ok)
    rep.add("operators preserve the n_- image", not bad, witness={"failing": bad})
    rep.extend(H.check_relations())
    return rep


def verify_standard_correspondence(mu, ctx: FunctorContext, seed: int = 0) -> Report:
    """Deformed Verma images are standard modules; ordinary Verma images are
    proper standard modules; ranks are multinomial."""
    mu = ctx.check_mu(mu)
    rep = Report(f"standard correspondence mu={mu}")
    pi = ctx.kp(mu)
    expected = ctx.multinomial(mu)
    try:
        A = phi(deformed_verma_for(mu, ctx), ctx)
        A0 = phi(verma_for(mu, ctx), ctx)
    except (FunctorError, CoinvariantError, SupportError) as exc:
        rep.add("functor image", False, detail=str(exc))
        return rep
    B = standard_module(pi, ring=ctx.ring)
    B0 = proper_standard(pi)
    rep.add("rank of deformed image", A.rank == expected, witness={"rank": A.rank, "expected": expected})
    rep.add("rank of ordinary image", A0.rank == expected, witness={"rank": A0.rank, "expected": expected})
    _intertwine(rep, "deformed image ~ standard module", A, B, seed)
    _intertwine(rep, "ordinary image ~ proper standard module", A0, B0, seed)
    fast = phi_deformed_verma_fast(mu, ctx)
    _intertwine(rep, "fast model ~ deformed image", fast, A, seed)
    return rep


def verify_duality_correspondence(mu, ctx: FunctorContext, seed: int = 0) -> Report:
    """Dual Verma images are proper costandard modules."""
    mu = ctx.check_mu(mu)
    rep = Report(f"duality correspondence mu={mu}")
    pi = ctx.kp(mu)
    try:
        D = phi(dual_verma_for(mu, ctx), ctx)
        A0 = phi(verma_for(mu, ctx), ctx)
    except (FunctorError, CoinvariantError, SupportError) as exc:
        rep.add("functor image", False, detail=str(exc))
        return rep
    costd = circledast_dual(proper_standard(pi))
    rep.add("rank matches ordinary image", D.rank == A0.rank, witness={"rank": D.rank})
    fd, fc = fingerprint(D), fingerprint(costd)
    rep.add("fingerprints agree", fd == fc, witness=fd.to_json())
    _intertwine(rep, "dual image ~ proper costandard module", D, costd, seed)
    _intertwine(rep, "dual image ~ dual of ordinary image", D, circledast_dual(A0), seed)
    return rep


def verify_exactness(ctx: FunctorContext) -> Report:
    """Ranks are additive on 0 -> M(s.h) -> M(h) -> L(h) -> 0 for gl_2, with
    h = lambda - rho dominant."""
    rep = Report("exactness on a Verma sequence")
    if ctx.m != 2:
        rep.add("sequence available", True, detail="only built for m = 2")
        return rep
    h = ctx.highest(ctx.lam)
    if h[0] < h[1]:
        rep.add("sequence available", True, detail=f"{h} is not dominant; M(h) is simple")
        return rep
    r = ctx.rho
    # s.h = s(h + rho) - rho
    sh = (h[1] + r[1] - r[0], h[0] + r[0] - r[1])
    n = ctx.n
    big = phi(verma(h, phi_support(h, n), 2), ctx)
    sub = phi(verma(sh, phi_support(sh, n), 2), ctx)
    quo = phi(gl2_simple(h), ctx)
    rep.add(
        "rank additivity",
        big.rank == sub.rank + quo.rank,
        witness={"verma": big.rank, "sub": sub.rank, "quotient": quo.rank, "h": list(h), "s.h": list(sh)},
    )
    return rep


# -- Casimir adjunction ------------------------------------------------------------

def _basis_by_weight(mod):
    return {nu: list(mod.weight_basis(nu)) for nu in mod.weights() if mod.weight_basis(nu)}


def hom_space(A, B) -> list[dict]:
    """A Q-basis of gl_m-homomorphisms A -> B between finite weight modules
    over the z = 0 ring, as ``{key_A: {key_B: Fraction}}`` maps."""
    ba, bb = _basis_by_weight(A), _basis_by_weight(B)
    unknowns = {}
    for nu, keys in ba.items():
        for ka in keys:
            for kb in bb.get(nu, ()):
                unknowns[(ka, kb)] = len(unknowns)
    rows = {}
    m = A.m
    one = A.ring.one()
    for nu, keys in ba.items():
        for p in range(1, m + 1):
            for q in range(1, m + 1):
                if p == q:
                    continue
                for ka in keys:
                    # f(e_pq a) - e_pq f(a) = 0, one equation per target coordinate
                    for k2, v in A.act(p, q, {ka: one}).items():
                        for kb in bb.get(shift(nu, p, q), ()):
                            row = rows.setdefault((ka, p, q, kb), {})
                            idx = unknowns[(k2, kb)]
                            row[idx] = row.get(idx, 0) + v.constant_term
                    for kb in bb.get(nu, ()):
                        for kb2, v in B.act(p, q, {kb: one}).items():
                            row = rows.setdefault((ka, p, q, kb2), {})
                            idx = unknowns[(ka, kb)]
                            row[idx] = row.get(idx, 0) - v.constant_term
    kernel = nullspace([{k: v for k, v in r.items() if v} for r in rows.values()], len(unknowns))
    inv = {i: key for key, i in unknowns.items()}
    out = []
    for vec in kernel:
        f = {}
        for i, c in vec.items():
            ka, kb = inv[i]
            f.setdefault(ka, {})[kb] = Fraction(c)
        out.append(f)
    return out


def _apply_map(f, vec):
    out = {}
    for k, c in vec.items():
        for k2, v in f.get(k, {}).items():
            c0 = c.constant_term if hasattr(c, "constant_term") else Fraction(c)
            out[k2] = out.get(k2, 0) + v * c0
    return {k: v for k, v in out.items() if v}


def _const_vec(vec):
    return {k: (v.constant_term if hasattr(v, "constant_term") else Fraction(v)) for k, v in vec.items() if v}


def _series_vec(ring, vec):
    return {k: ring.const(v) for k, v in vec.items() if v}


def _key(mod, k) -> tuple:
    return tuple(k) if isinstance(mod, TensorModule) else (k,)


def _nfactors(mod) -> int:
    return len(mod.factors) if isinstance(mod, TensorModule) else 1


class _Adjunction:
    """Hom(M (x) V^n, N) ~ Hom(M, Vbar^n (x) N) with
    adj(f)(x) = sum ebar_{k1} (x) ... (x) ebar_{kn} (x) f(x (x) v_{k1} (x) ... (x) v_{kn}).

    ``left`` is M (x) V^n with M occupying factors 0..p-1; ``right`` is
    Vbar^n (x) N with N occupying factors n.. .
    """

    def __init__(self, M, N, n):
        m = M.m
        ring = SeriesRing(m, 0)
        if M.ring != ring or N.ring != ring:
            raise FunctorError("adjunction checks run over the z = 0 ring")
        self.M, self.N, self.n, self.m, self.ring = M, N, n, m, ring
        V, Vb = vector_rep(m, ring), dual_vector_rep(m, ring)
        self.left = tensor(M, *([V] * n))
        self.right = tensor(*([Vb] * n), N)
        self.p = _nfactors(M)
        self.homs = hom_space(self.left, N)
        self.vbasis = [(nu, key) for nu in V.weights() for key in V.weight_basis(nu)]
        self.vbar_key = {tuple(-x for x in nu): key for nu in Vb.weights() for key in Vb.weight_basis(nu)}
        self.left_keys = [k for nu in self.left.weights() for k in self.left.weight_basis(nu)]

    def adj(self, f) -> dict:
        g = {}
        for nu in self.M.weights():
            for km in self.M.weight_basis(nu):
                img = {}
                for combo in product(self.vbasis, repeat=self.n):
                    src = _key(self.M, km) + tuple(kv for _, kv in combo)
                    pre = tuple(self.vbar_key[vnu] for vnu, _ in combo)
                    for kn, c in f.get(src, {}).items():
                        key = pre + _key(self.N, kn)
                        img[key] = img.get(key, 0) + c
                img = {k: v for k, v in img.items() if v}
                if img:
                    g[km] = img
        return g

    def right_ops(self) -> dict:
        """s_i = Omega^(i,i+1), x_i = sum_{0<=j<i} Omega^(i,j) on M (x) V^n,
        factor 0 standing for the whole M block."""
        L, p = self.left, self.p
        mblock = range(p)

        def pos(i):
            return p - 1 + i

        ops = {}
        for i in range(1, self.n):
            ops[f"s{i}"] = (lambda i: lambda v: omega(L, pos(i), pos(i + 1), v))(i)
        for i in range(1, self.n + 1):
            def xi(v, i=i):
                out = {}
                for a in mblock:
                    _add_vec(out, omega(L, pos(i), a, v))
                for j in range(1, i):
                    _add_vec(out, omega(L, pos(i), pos(j), v))
                return out

            ops[f"x{i}"] = xi
        return ops

    def right_act(self, f, op) -> dict:
        one = self.ring.one()
        g = {}
        for key in self.left_keys:
            img = _apply_map(f, _const_vec(op({key: one})))
            if img:
                g[key] = img
        return g

    def failing(self, names=None) -> list:
        rops = self.right_ops()
        lops = hecke_operators(self.right, self.n)
        bad = []
        for name in names or list(rops):
            for f in self.homs:
                lhs = self.adj(self.right_act(f, rops[name]))
                rhs = {}
                for km, img in self.adj(f).items():
                    res = _const_vec(lops[name](_series_vec(self.ring, img)))
                    if res:
                        rhs[km] = res
                if lhs != rhs:
                    bad.append(name)
                    break
        return bad


def verify_casimir_adjunction(M, N, name=None) -> Report:
    """Under Hom(M (x) V, N) ~ Hom(M, Vbar (x) N), f o Omega_{M,V} corresponds
    to (-Omega_{Vbar,N} - m) o adj(f)."""
    rep = Report(name or f"Casimir adjunction M={getattr(M, 'name', '?')} N={getattr(N, 'name', '?')}")
    adj = _Adjunction(M, N, 1)
    dual_dim = len(hom_space(M, adj.right))
    rep.add("Hom spaces have equal dimension", len(adj.homs) == dual_dim,
            witness={"dim": len(adj.homs), "dim_adjoint": dual_dim})
    # with n = 1 the right x_1 is Omega_{M,V} and the left x_1 is -Omega_{Vbar,N} - m
    bad = adj.failing(["x1"])
    rep.add("square commutes", not bad, witness={"homs_checked": len(adj.homs)})
    return rep


def verify_action_adjunction(n: int = 2, m: int = 2, M=None, N=None) -> Report:
    """The n-fold adjunction turns the right action on Hom(M (x) V^n, N)
    (s_i = Omega^(i,i+1), x_i = sum_{j<i} Omega^(i,j)) into the left action
    on Vbar^n (x) N used by the functor."""
    ring = SeriesRing(m, 0)
    M = M if M is not None else character_module(m, 0, ring)
    if N is None:
        N = tensor(*([vector_rep(m, ring)] * n))
    rep = Report(f"right/left action adjunction n={n}")
    adj = _Adjunction(M, N, n)
    rep.add("Hom space is nonzero", bool(adj.homs), witness={"dim": len(adj.homs)})
    bad = adj.failing()
    rep.add("adjunction intertwines the actions", not bad, witness={"failing": bad})
    return rep


def casimir_instances(m: int = 2):
    """Small (M, N) pairs for the adjunction square."""
    ring = SeriesRing(m, 0)
    V = vector_rep(m, ring)
    triv = character_module(m, 0, ring)
    return [
        ("V, V(x)V", V, tensor(V, V)),
        ("trivial, V", triv, V),
        ("V, V", V, V),
    ]


def verify_casimir_suite(m: int = 2) -> Report:
    rep = Report("Casimir suite")
    ring = SeriesRing(m, 0)
    V, Vb = vector_rep(m, ring), dual_vector_rep(m, ring)
    T = tensor(V, V)
    one = ring.one()
    swap_ok = all(
        T.omega(0, 1, {(a, b): one}) == {(b, a): one}
        for nu in T.weights() for (a, b) in T.weight_basis(nu)
    )
    rep.add("Omega on V(x)V is the swap", swap_ok)
    sym_ok = all(
        T.omega(0, 1, {k: one}) == T.omega(1, 0, {k: one}) for nu in T.weights() for k in T.weight_basis(nu)
    )
    rep.add("Omega^(a,b) = Omega^(b,a)", sym_ok)
    for label, mod in (("V", V), ("Vbar", Vb)):
        ok = all(mod.casimir_element({k: one}) == {k: ring.const(m)} for k in range(mod.dim))
        rep.add(f"C acts on {label} by m", ok)
    for label, A, B in casimir_instances(m):
        sub = verify_casimir_adjunction(A, B)
        rep.extend(sub, prefix=f"[{label}] ")
    rep.extend(verify_action_adjunction(2, m), prefix="")
    return rep


def verify_all(ctx: FunctorContext, seed: int = 0) -> Report:
    rep = Report(f"full suite m={ctx.m} lambda={ctx.lam}")
    orb = verify_orbit_embedding(ctx.standard_weight(ctx.lam))
    rep.add("orbit embedding", orb.ok, witness=orb.to_json())
    for mu in ctx.orbit():
        rep.extend(verify_hecke_relations(deformed_verma_for(mu, ctx), ctx), prefix=f"[mu={mu}] relations: ")
        rep.extend(check_u_eigenvalues(mu, ctx), prefix=f"[mu={mu}] ")
        rep.extend(verify_standard_correspondence(mu, ctx, seed), prefix=f"[mu={mu}] ")
        rep.extend(verify_duality_correspondence(mu, ctx, seed), prefix=f"[mu={mu}] ")
    rep.extend(verify_exactness(ctx))
    rep.extend(verify_casimir_suite(ctx.m))
    return rep
