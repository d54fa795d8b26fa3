"""Weight modules of gl_m over the truncated deformation ring.

Every module exposes the same small interface:

* ``m`` and ``ring`` (a :class:`~heckeo.scalars.SeriesRing` with ``m`` or more
  variables; ``z_i`` is the deformation variable paired with ``e_ii``);
* ``weight_basis(nu)``: the basis keys of the weight space at ``nu``;
* ``act(p, q, vec)``: the matrix unit ``e_pq`` applied to a sparse vector
  ``{key: series}``.

Weight spaces are stored only on a finite *support*.  A generator move that
leaves the support raises :class:`SupportError` when the target could carry a
nonzero weight space, and returns zero when it cannot (for instance above the
highest weight of a Verma module).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .linalg import SeriesMatrix, echelon, reduce_vector
from .scalars import SeriesRing, TruncatedSeries, grlex_key


class SupportError(ValueError):
    """A computation needed a weight space outside the stored support."""


class CoinvariantError(ValueError):
    pass


def unit(m, p):
    e = [0] * m
    e[p - 1] = 1
    return tuple(e)


def shift(nu, p, q):
    """nu + eps_p - eps_q."""
    if p == q:
        return tuple(nu)
    nu = list(nu)
    nu[p - 1] += 1
    nu[q - 1] -= 1
    return tuple(nu)


def simple_root(m, i):
    """alpha_i = eps_i - eps_{i+1}."""
    return shift((0,) * m, i, i + 1)


def root_coordinates(gamma):
    """Coefficients c_i with gamma = sum c_i alpha_i (None if sum(gamma) != 0)."""
    if sum(gamma):
        return None
    out = []
    acc = 0
    for g in gamma[:-1]:
        acc += g
        out.append(acc)
    return tuple(out)


def in_positive_cone(gamma) -> bool:
    c = root_coordinates(gamma)
    return c is not None and all(x >= 0 for x in c)


def _add(acc, key, v):
    w = acc.get(key)
    w = v if w is None else w + v
    if w:
        acc[key] = w
    else:
        acc.pop(key, None)


def _add_vec(acc, vec, scale=None):
    for k, v in vec.items():
        _add(acc, k, v if scale is None else v * scale)


class GlModule:
    m: int
    ring: SeriesRing

    def weight_basis(self, nu) -> list:
        raise NotImplementedError

    def act(self, p, q, vec) -> dict:
        raise NotImplementedError

    def weights(self) -> list:
        raise NotImplementedError

    def matrix(self, p, q, nu) -> SeriesMatrix:
        """e_pq as a matrix from the weight space nu to nu + eps_p - eps_q."""
        src = self.weight_basis(nu)
        tgt = self.weight_basis(shift(nu, p, q))
        pos = {k: i for i, k in enumerate(tgt)}
        cols = []
        for key in src:
            out = self.act(p, q, {key: self.ring.one()})
            cols.append({pos[k]: v for k, v in out.items()})
        return SeriesMatrix(self.ring, len(tgt), len(src), cols)

    def rank_at(self, nu) -> int:
        return len(self.weight_basis(nu))

    def casimir_element(self, vec) -> dict:
        """C = sum_ij e_ij e_ji applied to ``vec``."""
        out = {}
        for i in range(1, self.m + 1):
            for j in range(1, self.m + 1):
                _add_vec(out, self.act(i, j, self.act(j, i, vec)))
        return out


class WeightModule(GlModule):
    """A module with explicitly stored weight spaces and sparse action columns.

    Basis keys are integers.  ``columns[(p, q)][key]`` is the image of a basis
    vector under ``e_pq`` (stored only when the target weight is in support).
    """

    def __init__(self, m, ring, spaces, columns, is_weight=None, name=""):
        self.m = m
        self.ring = ring
        self.name = name
        self.labels = []
        self.weight_of = []
        self._spaces = {}
        for nu in sorted(spaces, reverse=True):
            ids = []
            for label in spaces[nu]:
                ids.append(len(self.labels))
                self.labels.append(label)
                self.weight_of.append(tuple(nu))
            self._spaces[tuple(nu)] = ids
        self.columns = columns
        self._is_weight = is_weight

    @classmethod
    def _from_labelled(cls, m, ring, spaces, action, is_weight=None, name=""):
        """Build from ``action(p, q, nu, label) -> {label': series}``."""
        mod = cls(m, ring, spaces, {}, is_weight, name)
        where = {}
        for nu, ids in mod._spaces.items():
            for key in ids:
                where[(nu, mod.labels[key])] = key
        cols = {}
        for p in range(1, m + 1):
            for q in range(1, m + 1):
                per = {}
                for nu, ids in mod._spaces.items():
                    tgt = shift(nu, p, q)
                    if tgt not in mod._spaces:
                        continue
                    for key in ids:
                        img = action(p, q, nu, mod.labels[key])
                        col = {}
                        for lab, v in img.items():
                            v = ring.coerce(v)
                            if v:
                                col[where[(tgt, lab)]] = v
                        if col:
                            per[key] = col
                cols[(p, q)] = per
        mod.columns = cols
        return mod

    def weights(self):
        return list(self._spaces)

    def weight_basis(self, nu):
        return list(self._spaces.get(tuple(nu), ()))

    def is_weight(self, nu) -> bool:
        """Whether ``nu`` may carry a nonzero weight space (in or out of support)."""
        nu = tuple(nu)
        if nu in self._spaces:
            return True
        return bool(self._is_weight and self._is_weight(nu))

    def column(self, p, q, key) -> dict:
        tgt = shift(self.weight_of[key], p, q)
        if tgt in self._spaces:
            return self.columns.get((p, q), {}).get(key, {})
        if self._is_weight and self._is_weight(tgt):
            raise SupportError(f"e_{p}{q} leaves the support of {self.name or 'module'} at {tgt}")
        return {}

    def act(self, p, q, vec):
        out = {}
        for key, c in vec.items():
            for k2, v in self.column(p, q, key).items():
                _add(out, k2, v * c)
        return out

    @property
    def dim(self):
        return len(self.labels)

    def dense_matrix(self, p, q):
        """e_pq on the whole stored basis as constant-term rationals."""
        n = self.dim
        out = [[Fraction(0)] * n for _ in range(n)]
        for key in range(n):
            for k2, v in self.column(p, q, key).items():
                out[k2][key] = v.constant_term
        return out

    def to_json(self):
        return {
            "m": self.m,
            "num_vars": self.ring.num_vars,
            "trunc_degree": self.ring.trunc_degree,
            "weights": [
                {"weight": list(nu), "rank": len(ids), "labels": [_label_json(self.labels[i]) for i in ids]}
                for nu, ids in self._spaces.items()
            ],
            "actions": [
                {
                    "p": p,
                    "q": q,
                    "entries": [
                        {"row": k2, "col": key, "value": v.to_json()}
                        for key in sorted(per)
                        for k2, v in sorted(per[key].items())
                    ],
                }
                for (p, q), per in sorted(self.columns.items())
                if per
            ],
        }


def _label_json(label):
    if isinstance(label, tuple):
        return [_label_json(x) for x in label]
    return label


# -- small modules ---------------------------------------------------------

def _ring_for(m, ring):
    return ring if ring is not None else SeriesRing(m, 0)


def vector_rep(m, ring=None) -> WeightModule:
    """V = Q^m with e_ij v_k = delta_jk v_i."""
    ring = _ring_for(m, ring)
    spaces = {unit(m, k): [k] for k in range(1, m + 1)}

    def action(p, q, nu, k):
        return {p: 1} if q == k else {}

    return WeightModule._from_labelled(m, ring, spaces, action, None, "V")


def dual_vector_rep(m, ring=None) -> WeightModule:
    """The dual of V with e_ij ebar_k = -delta_ik ebar_j."""
    ring = _ring_for(m, ring)
    spaces = {tuple(-x for x in unit(m, k)): [k] for k in range(1, m + 1)}

    def action(p, q, nu, k):
        return {q: -1} if p == k else {}

    return WeightModule._from_labelled(m, ring, spaces, action, None, "Vbar")


def character_module(m, c=0, ring=None) -> WeightModule:
    """The one-dimensional module det^c (c = 0 is the trivial module)."""
    ring = _ring_for(m, ring)
    spaces = {(c,) * m: [0]}

    def action(p, q, nu, k):
        return {0: c} if p == q else {}

    return WeightModule._from_labelled(m, ring, spaces, action, None, f"det^{c}")


def direct_sum(a: WeightModule, b: WeightModule) -> WeightModule:
    if a.m != b.m or a.ring != b.ring:
        raise ValueError("summands must share m and ring")
    spaces = {}
    for mod, tag in ((a, 0), (b, 1)):
        for nu in mod.weights():
            spaces.setdefault(nu, []).extend((tag, k) for k in mod.weight_basis(nu))
    mods = (a, b)

    def action(p, q, nu, label):
        tag, k = label
        return {(tag, k2): v for k2, v in mods[tag].column(p, q, k).items()}

    def is_weight(nu):
        return a.is_weight(nu) or b.is_weight(nu)

    return WeightModule._from_labelled(a.m, a.ring, spaces, action, is_weight, f"{a.name}+{b.name}")


# -- Verma modules ---------------------------------------------------------

def negative_roots(m):
    """Positive roots eps_p - eps_q (p < q) in lexicographic order; the
    matching lowering operator is e_qp."""
    return [(p, q) for p in range(1, m + 1) for q in range(p + 1, m + 1)]


def kostant_monomials(m, gamma) -> list[tuple]:
    """Exponent vectors k over ``negative_roots(m)`` with sum k_t root_t = gamma.

    Ordered graded-lex.  Their number is the Kostant partition function.
    """
    coords = root_coordinates(gamma)
    if coords is None or any(c < 0 for c in coords):
        return []
    roots = negative_roots(m)
    out = []
    rem = list(coords)

    def rec(t, acc):
        if t == len(roots):
            if not any(rem):
                out.append(tuple(acc))
            return
        p, q = roots[t]
        # root eps_p - eps_q = alpha_p + ... + alpha_{q-1}
        cap = min(rem[p - 1:q - 1])
        for k in range(cap + 1):
            for i in range(p - 1, q - 1):
                rem[i] -= k
            acc.append(k)
            rec(t + 1, acc)
            acc.pop()
            for i in range(p - 1, q - 1):
                rem[i] += k

    rec(0, [])
    return sorted(out, key=grlex_key)


def weights_below(top, depth) -> set:
    """Weights top - gamma with gamma in Q+ of height at most ``depth``."""
    m = len(top)
    out = {tuple(top)}
    frontier = {tuple(top)}
    for _ in range(depth):
        nxt = set()
        for nu in frontier:
            for i in range(1, m):
                nxt.add(shift(nu, i + 1, i))
        out |= nxt
        frontier = nxt
    return out


def upward_closure(top, weights) -> set:
    """Close a set of weights below ``top`` under raising by simple roots."""
    out = set()
    stack = [tuple(w) for w in weights]
    m = len(top)
    while stack:
        nu = stack.pop()
        if nu in out:
            continue
        if not in_positive_cone(tuple(t - x for t, x in zip(top, nu))):
            raise SupportError(f"{nu} is not below {tuple(top)}")
        out.add(nu)
        for i in range(1, m):
            up = shift(nu, i, i + 1)
            if in_positive_cone(tuple(t - x for t, x in zip(top, up))):
                stack.append(up)
    return out


def compositions(n, m):
    """Non-negative integer vectors of length m summing to n."""
    if m == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, m - 1):
            yield (first,) + rest


def phi_support(top, n) -> set:
    """Weights of a module with highest weight ``top`` that meet the functor.

    The weight-0 part of Vbar^n (x) M pairs Vbar-weights -c with M-weights c
    for compositions c of n; the quotient also needs c + alpha_i.  The set is
    closed upward so that the module actions are defined on the nose.
    """
    top = tuple(top)
    m = len(top)
    below = lambda nu: in_positive_cone(tuple(t - x for t, x in zip(top, nu)))
    need = set()
    for c in compositions(n, m):
        for nu in [c] + [shift(c, i, i + 1) for i in range(1, m)]:
            if below(nu):
                need.add(nu)
    if not need:
        raise SupportError(f"no weight of M({top}) meets the functor for n={n}")
    return upward_closure(top, need)


def check_support(top, support):
    support = {tuple(w) for w in support}
    if not support:
        raise SupportError("empty support")
    for nu in support:
        if len(nu) != len(top):
            raise SupportError(f"weight {nu} has wrong length")
    closed = upward_closure(top, support)
    if closed != support:
        missing = sorted(closed - support)
        raise SupportError(f"support is not closed upward; missing {missing[:5]}")
    return support


class _VermaAlgebra:
    """PBW reduction in U(gl_m) acting on a highest weight vector.

    Vectors are ``{word: series}`` with words non-decreasing tuples of indices
    into ``negative_roots(m)`` (the PBW monomial f_{w1} f_{w2} ... v).
    """

    def __init__(self, top, ring):
        self.m = len(top)
        self.top = tuple(top)
        self.ring = ring
        self.roots = negative_roots(self.m)
        self.root_index = {r: t for t, r in enumerate(self.roots)}
        self.z = [ring.var(i) if i <= ring.num_vars else ring.zero() for i in range(1, self.m + 1)]
        self._normalize = lru_cache(maxsize=None)(self._normalize_impl)
        self._apply = lru_cache(maxsize=None)(self._apply_impl)

    def weight(self, word):
        nu = list(self.top)
        for t in word:
            p, q = self.roots[t]
            nu[p - 1] -= 1
            nu[q - 1] += 1
        return tuple(nu)

    def lowering(self, a, b):
        """Root index of e_ab (a > b)."""
        return self.root_index[(b, a)]

    def _bracket_lowering(self, s, t):
        """[f_s, f_t] as ``[(root index, coeff)]``."""
        p1, q1 = self.roots[s]
        p2, q2 = self.roots[t]
        # [e_{q1 p1}, e_{q2 p2}] = d(p1,q2) e_{q1 p2} - d(p2,q1) e_{q2 p1}
        out = []
        if p1 == q2:
            out.append((self.lowering(q1, p2), 1))
        if p2 == q1:
            out.append((self.lowering(q2, p1), -1))
        return out

    def _normalize_impl(self, word):
        """Rewrite an arbitrary word into sorted words; integer coefficients."""
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                break
        else:
            return ((word, 1),)
        acc = {}
        swapped = word[:i] + (word[i + 1], word[i]) + word[i + 2:]
        for w, c in self._normalize(swapped):
            acc[w] = acc.get(w, 0) + c
        for r, c in self._bracket_lowering(word[i], word[i + 1]):
            for w, d in self._normalize(word[:i] + (r,) + word[i + 2:]):
                acc[w] = acc.get(w, 0) + c * d
        return tuple((w, c) for w, c in acc.items() if c)

    def prepend(self, t, vec):
        out = {}
        for w, c in vec.items():
            for w2, d in self._normalize((t,) + w):
                _add(out, w2, c * d)
        return out

    def _apply_impl(self, r, s, word):
        if r > s:
            return dict(self.prepend(self.lowering(r, s), {word: self.ring.one()}))
        if r == s:
            nu = self.weight(word)
            v = self.z[r - 1] + nu[r - 1]
            return {word: v} if v else {}
        if not word:
            return {}
        f1, rest = word[0], word[1:]
        out = self.prepend(f1, self._apply(r, s, rest))
        # [e_rs, e_ab] = d(s,a) e_rb - d(b,r) e_as for f1 = e_ab
        p, q = self.roots[f1]
        a, b = q, p
        if s == a:
            _add_vec(out, self._apply(r, b, rest))
        if b == r:
            _add_vec(out, self._apply(a, s, rest), -1)
        return out

    def apply(self, r, s, word):
        return self._apply(r, s, tuple(word))


def _word_of(k):
    word = []
    for t, e in enumerate(k):
        word.extend([t] * e)
    return tuple(word)


def _exps_of(word, nroots):
    k = [0] * nroots
    for t in word:
        k[t] += 1
    return tuple(k)


def deformed_verma(mu, support, ring=None, trunc=None, name=None) -> WeightModule:
    """U(g) (x)_{U(b)} R_mu restricted to ``support``.

    ``mu`` is the b-character: e_ii acts on the highest vector by mu_i + z_i
    and n_+ kills it.  The basis of the weight space at ``nu`` consists of
    the PBW monomials in the lowering operators of weight ``mu - nu``.
    """
    mu = tuple(int(v) for v in mu)
    m = len(mu)
    if ring is None:
        ring = SeriesRing(m, 2 if trunc is None else trunc)
    elif trunc is not None:
        ring = ring.truncated(trunc)
    if ring.num_vars < m:
        raise ValueError("the ring needs one variable per diagonal generator")
    support = check_support(mu, support)
    alg = _VermaAlgebra(mu, ring)
    nroots = len(alg.roots)
    spaces = {}
    for nu in support:
        gamma = tuple(a - b for a, b in zip(mu, nu))
        spaces[nu] = kostant_monomials(m, gamma)

    def action(p, q, nu, k):
        img = alg.apply(p, q, _word_of(k))
        return {_exps_of(w, nroots): v for w, v in img.items()}

    def is_weight(nu):
        return in_positive_cone(tuple(a - b for a, b in zip(mu, nu)))

    return WeightModule._from_labelled(m, ring, spaces, action, is_weight, name or f"Mtilde{mu}")


def verma(mu, support, m_vars=None, name=None) -> WeightModule:
    """The ordinary Verma module: the deformed one with z set to 0."""
    ring = SeriesRing(m_vars or len(mu), 0)
    return deformed_verma(mu, support, ring=ring, name=name or f"M{tuple(mu)}")


def restricted_dual(mod: WeightModule, name=None) -> WeightModule:
    """Weight-wise linear dual with e_pq acting as the transpose of e_qp."""
    if mod.ring.trunc_degree != 0:
        raise ValueError("the restricted dual is taken at z = 0 (trunc degree 0)")
    spaces = {nu: [mod.labels[k] for k in mod.weight_basis(nu)] for nu in mod.weights()}
    pos = {k: (mod.weight_of[k], mod.labels[k]) for k in range(mod.dim)}

    def action(p, q, nu, label):
        # (e_pq f)(v) = f(e_qp v) for v in weight nu + eps_p - eps_q
        tgt = shift(nu, p, q)
        key = next(k for k in mod.weight_basis(nu) if mod.labels[k] == label)
        out = {}
        for src in mod.weight_basis(tgt):
            v = mod.column(q, p, src).get(key)
            if v:
                out[pos[src][1]] = v
        return out

    return WeightModule._from_labelled(
        mod.m, mod.ring, spaces, action, mod._is_weight, name or f"({mod.name})^dual"
    )


def dual_verma(mu, support, m_vars=None) -> WeightModule:
    """M(mu)^dual on the given support (z acts by zero)."""
    return restricted_dual(verma(mu, support, m_vars), name=f"M{tuple(mu)}^dual")


# -- tensor products ---------------------------------------------------------

class TensorModule(GlModule):
    """Lazy tensor product of modules with the Leibniz action.

    Basis keys are tuples of factor keys.  ``factor_act(a, p, q, vec)`` is
    e_pq acting on the a-th factor only (0-based).
    """

    def __init__(self, factors):
        factors = list(factors)
        if not factors:
            raise ValueError("empty tensor product")
        m = factors[0].m
        ring = factors[0].ring
        for f in factors:
            if f.m != m or f.ring != ring:
                raise ValueError("tensor factors must share m and ring")
        self.m = m
        self.ring = ring
        self.factors = factors
        self._fw = [f.weights() for f in factors]
        self._basis = {}
        self._reach = None

    def _reachable(self):
        # reach[a] = set of weight sums achievable by factors a..end
        if self._reach is None:
            zero = (0,) * self.m
            reach = [None] * (len(self.factors) + 1)
            reach[-1] = {zero}
            for a in range(len(self.factors) - 1, -1, -1):
                reach[a] = {
                    tuple(x + y for x, y in zip(w, r)) for w in self._fw[a] for r in reach[a + 1]
                }
            self._reach = reach
        return self._reach

    def weights(self):
        return sorted(self._reachable()[0], reverse=True)

    def weight_basis(self, nu):
        nu = tuple(nu)
        if nu in self._basis:
            return self._basis[nu]
        reach = self._reachable()
        combos = []

        def rec(a, remaining, chosen):
            if a == len(self.factors):
                if not any(remaining):
                    combos.append(tuple(chosen))
                return
            for w in self._fw[a]:
                rest = tuple(x - y for x, y in zip(remaining, w))
                if rest in reach[a + 1]:
                    chosen.append(w)
                    rec(a + 1, rest, chosen)
                    chosen.pop()

        if nu in reach[0]:
            rec(0, nu, [])
        keys = []
        for ws in sorted(combos, reverse=True):
            keys.extend(product(*(f.weight_basis(w) for f, w in zip(self.factors, ws))))
        self._basis[nu] = keys
        return keys

    def factor_act(self, a, p, q, vec):
        fa = self.factors[a]
        out = {}
        for key, c in vec.items():
            for k2, v in fa.column(p, q, key[a]).items():
                _add(out, key[:a] + (k2,) + key[a + 1:], v * c)
        return out

    def act(self, p, q, vec):
        out = {}
        for a in range(len(self.factors)):
            _add_vec(out, self.factor_act(a, p, q, vec))
        return out

    def omega(self, a, b, vec):
        """Omega^(a,b) = sum_ij e_ij^(a) e_ji^(b) applied to ``vec``."""
        if a == b or not (0 <= a < len(self.factors) and 0 <= b < len(self.factors)):
            raise IndexError(f"bad factor pair ({a}, {b})")
        # the factors commute; acting on ``a`` first lets zero terms vanish
        # before ``b`` can be pushed off its stored support
        out = {}
        for i in range(1, self.m + 1):
            for j in range(1, self.m + 1):
                inner = self.factor_act(a, i, j, vec)
                if inner:
                    _add_vec(out, self.factor_act(b, j, i, inner))
        return out


def tensor(*factors) -> TensorModule:
    flat = []
    for f in factors:
        if isinstance(f, TensorModule):
            flat.extend(f.factors)
        else:
            flat.append(f)
    return TensorModule(flat)


def casimir_pair(modules, a, b, weights=None) -> dict:
    """Omega^(a,b) on the tensor product, as ``{weight: SeriesMatrix}``."""
    T = modules if isinstance(modules, TensorModule) else TensorModule(modules)
    if weights is None:
        weights = T.weights()
    out = {}
    for nu in weights:
        basis = T.weight_basis(nu)
        pos = {k: i for i, k in enumerate(basis)}
        cols = []
        for key in basis:
            img = T.omega(a, b, {key: T.ring.one()})
            cols.append({pos[k]: v for k, v in img.items()})
        out[tuple(nu)] = SeriesMatrix(T.ring, len(basis), len(basis), cols)
    return out


# -- coinvariants -------------------------------------------------------------

@dataclass
class Coinvariants:
    """The weight-0 quotient M_(0) / sum_i e_{i+1,i} M_(alpha_i).

    The quotient is free with basis the classes of ``complement`` (keys of
    M_(0)); ``project`` sends a weight-0 vector to its coordinates in that
    basis.
    """

    module: GlModule
    zero_basis: list
    complement: list
    generators: list = field(repr=False)
    _pivots: dict = field(repr=False)

    @property
    def ring(self):
        return self.module.ring

    @property
    def rank(self):
        return len(self.complement)

    def _coords(self, vec):
        D = self.ring.dim
        idx = self.ring.monomial_index
        pos = self._pos
        out = {}
        for key, s in vec.items():
            t = pos[key]
            for e, c in s.items():
                out[t * D + idx[e]] = c
        return out

    @property
    def _pos(self):
        return {k: i for i, k in enumerate(self.zero_basis)}

    def project(self, vec) -> dict:
        """Coordinates (``{complement index: series}``) of the class of vec."""
        D = self.ring.dim
        mons = self.ring.monomials
        red = reduce_vector(self._pivots, self._coords(vec))
        where = {k: i for i, k in enumerate(self.complement)}
        acc = {}
        for col, c in red.items():
            t, a = divmod(col, D)
            key = self.zero_basis[t]
            if key not in where:
                raise CoinvariantError("reduction left a pivot coordinate behind")
            acc.setdefault(where[key], {})[mons[a]] = c
        return {i: TruncatedSeries(self.ring, c) for i, c in acc.items()}

    def projection_matrix(self) -> SeriesMatrix:
        one = self.ring.one()
        cols = [self.project({k: one}) for k in self.zero_basis]
        return SeriesMatrix(self.ring, self.rank, len(self.zero_basis), cols)

    def descend(self, op) -> SeriesMatrix:
        """Matrix on the quotient of an operator on M_(0) preserving the image."""
        one = self.ring.one()
        cols = [self.project(op({k: one})) for k in self.complement]
        return SeriesMatrix(self.ring, self.rank, self.rank, cols)

    def preserved_by(self, op) -> bool:
        return all(not self.project(op(g)) for g in self.generators)


def nminus_coinvariants_weight0(mod: GlModule) -> Coinvariants:
    """Weight-0 n_- coinvariants; only the simple lowering operators are
    needed since they generate n_- as a Lie algebra."""
    m = mod.m
    ring = mod.ring
    zero = tuple([0] * m)
    zero_basis = list(mod.weight_basis(zero))
    pos = {k: i for i, k in enumerate(zero_basis)}
    one = ring.one()
    gens = []
    for i in range(1, m):
        src = simple_root(m, i)
        for key in mod.weight_basis(src):
            img = mod.act(i + 1, i, {key: one})
            if img:
                gens.append(img)
    for g in gens:
        for k in g:
            if k not in pos:
                raise SupportError("image left the weight-0 space")
    # fibre at z = 0 decides the complement
    const_rows = [{pos[k]: v.constant_term for k, v in g.items() if v.constant_term} for g in gens]
    fib = echelon(const_rows)
    complement = [k for t, k in enumerate(zero_basis) if t not in fib]
    D = ring.dim
    idx = ring.monomial_index
    N = ring.trunc_degree
    rows = []
    for g in gens:
        for a in ring.monomials:
            da = sum(a)
            row = {}
            for k, s in g.items():
                t = pos[k]
                for e, c in s.items():
                    if da + sum(e) <= N:
                        row[t * D + idx[tuple(x + y for x, y in zip(e, a))]] = c
            if row:
                rows.append(row)
    priority = {}
    for t in sorted(fib):
        for ai in range(D):
            priority[t * D + ai] = (ai, t)
    piv = echelon(rows, priority)
    expected = {t * D + ai for t in fib for ai in range(D)}
    if set(piv) != expected:
        raise CoinvariantError("the weight-0 coinvariants are not a free module")
    return Coinvariants(mod, zero_basis, complement, gens, piv)


def gl2_simple(top, ring=None) -> WeightModule:
    """The finite-dimensional simple gl_2-module of highest weight ``top``
    (Sym^d V twisted by det^top_2 with d = top_1 - top_2 >= 0)."""
    h1, h2 = (int(v) for v in top)
    d = h1 - h2
    if d < 0:
        raise ValueError(f"{tuple(top)} is not dominant")
    ring = _ring_for(2, ring)
    spaces = {(h1 - k, h2 + k): [k] for k in range(d + 1)}

    def action(p, q, nu, k):
        if p == q:
            return {k: nu[p - 1]}
        if (p, q) == (2, 1):
            return {k + 1: 1}
        return {k - 1: k * (d - k + 1)}

    return WeightModule._from_labelled(2, ring, spaces, action, None, f"L{(h1, h2)}")
