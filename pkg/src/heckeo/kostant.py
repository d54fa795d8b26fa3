"""Kostant partitions of type A_infinity and the order on them.

A positive root ``alpha(i, j) = alpha_i + ... + alpha_{j-1}`` is the pair
``(i, j)`` with ``i < j``.  An element of Q+ is a :class:`RootElement`; a
Kostant partition is a sorted tuple of root pairs.  Weights of gl_m are
integer tuples.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations


class KostantError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class PositiveRoot:
    i: int
    j: int

    def __post_init__(self):
        if not self.i < self.j:
            raise KostantError(f"alpha({self.i},{self.j}) needs i < j")

    @property
    def height(self) -> int:
        return self.j - self.i

    def __iter__(self):
        return iter((self.i, self.j))

    def __repr__(self):
        return f"a({self.i},{self.j})"


class RootElement(tuple):
    """An element sum n_i alpha_i of Q+, stored as sorted ``(i, n_i)`` pairs."""

    def __new__(cls, mults=()):
        if isinstance(mults, dict):
            mults = mults.items()
        acc = Counter()
        for i, k in mults:
            if k < 0:
                raise KostantError(f"negative multiplicity {k} at alpha_{i}")
            acc[int(i)] += int(k)
        return super().__new__(cls, sorted((i, k) for i, k in acc.items() if k))

    @classmethod
    def of_roots(cls, roots):
        acc = Counter()
        for i, j in roots:
            if not i < j:
                raise KostantError(f"alpha({i},{j}) needs i < j")
            for l in range(i, j):
                acc[l] += 1
        return cls(acc)

    @classmethod
    def parse(cls, text: str) -> "RootElement":
        """Parse ``"-1:1,0:2,1:1"`` (index:multiplicity pairs)."""
        pairs = []
        for chunk in text.replace(" ", "").split(","):
            if not chunk:
                continue
            try:
                i, k = chunk.split(":")
                pairs.append((int(i), int(k)))
            except ValueError as exc:
                raise KostantError(f"bad beta chunk {chunk!r}") from exc
        return cls(pairs)

    def as_dict(self) -> dict:
        return dict(self)

    @property
    def height(self) -> int:
        return sum(k for _, k in self)

    def __repr__(self):
        return " + ".join(f"{k}a{i}" if k > 1 else f"a{i}" for i, k in self) or "0"


def _as_root(r) -> tuple:
    i, j = r
    if not i < j:
        raise KostantError(f"alpha({i},{j}) needs i < j")
    return (int(i), int(j))


class KostantPartition(tuple):
    """A multiset of positive roots, stored sorted by the total order on roots.

    ``alpha(i,j) <= alpha(k,l)`` iff ``i < k`` or ``i == k and j <= l``, which
    is the tuple order on ``(i, j)``.
    """

    def __new__(cls, parts):
        return super().__new__(cls, sorted(_as_root(p) for p in parts))

    @property
    def beta(self) -> RootElement:
        return RootElement.of_roots(self)

    def __repr__(self):
        return "{" + ", ".join(f"a({i},{j})" for i, j in self) + "}"

    def to_json(self):
        return [list(p) for p in self]

    @classmethod
    def parse(cls, text: str) -> "KostantPartition":
        """Parse ``"0,2;-1,1"`` (semicolon-separated ``i,j`` pairs)."""
        parts = []
        for chunk in text.replace(" ", "").split(";"):
            if not chunk:
                continue
            try:
                i, j = chunk.split(",")
                parts.append((int(i), int(j)))
            except ValueError as exc:
                raise KostantError(f"bad part {chunk!r}") from exc
        return cls(parts)


def enumerate_kp(beta) -> list[KostantPartition]:
    """All Kostant partitions of ``beta``, in canonical (lexicographic) order.

    The smallest index still carrying multiplicity must start a part, so the
    recursion picks a part ``alpha(l, j)`` at that index; parts with the same
    start are taken with non-decreasing end to avoid duplicates.
    """
    if not isinstance(beta, RootElement):
        beta = RootElement(beta)
    remaining = dict(beta)
    out = []

    def rec(chosen, last):
        live = [i for i, k in remaining.items() if k]
        if not live:
            out.append(KostantPartition(chosen))
            return
        l = min(live)
        j = l + 1
        while remaining.get(j - 1, 0) > 0:
            if last is None or last[0] != l or j >= last[1]:
                for t in range(l, j):
                    remaining[t] -= 1
                chosen.append((l, j))
                rec(chosen, (l, j))
                chosen.pop()
                for t in range(l, j):
                    remaining[t] += 1
            j += 1

    rec([], None)
    return sorted(out)


def covering_moves(pi: KostantPartition) -> set:
    """Partitions pi' with pi below pi' by one generating move.

    Move 1 splits ``alpha(i,k)`` into ``alpha(i,j), alpha(j,k)``; move 2
    replaces nested ``alpha(i,l), alpha(j,k)`` (i<j<k<l) by the overlapping
    ``alpha(i,k), alpha(j,l)``.
    """
    parts = list(pi)
    out = set()
    for idx, (i, k) in enumerate(parts):
        rest = parts[:idx] + parts[idx + 1:]
        for j in range(i + 1, k):
            out.add(KostantPartition(rest + [(i, j), (j, k)]))
    for a in range(len(parts)):
        for b in range(len(parts)):
            if a == b:
                continue
            i, l = parts[a]
            j, k = parts[b]
            if i < j < k < l:
                rest = [p for t, p in enumerate(parts) if t not in (a, b)]
                out.add(KostantPartition(rest + [(i, k), (j, l)]))
    return out


MAX_POSET = 10_000


@dataclass
class KPPoset:
    """KP(beta) with the reflexive-transitive closure of the generating moves."""

    beta: RootElement
    elements: list
    index: dict = field(repr=False)
    up: list = field(repr=False)  # up[a] = bitset of b with a <= b

    @classmethod
    def build(cls, beta) -> "KPPoset":
        if not isinstance(beta, RootElement):
            beta = RootElement(beta)
        elems = enumerate_kp(beta)
        if len(elems) > MAX_POSET:
            raise KostantError(f"|KP(beta)| = {len(elems)} exceeds {MAX_POSET}")
        index = {p: a for a, p in enumerate(elems)}
        up = []
        for a, p in enumerate(elems):
            bits = 1 << a
            for q in covering_moves(p):
                bits |= 1 << index[q]
            up.append(bits)
        # Warshall closure on bitsets
        for k in range(len(elems)):
            bk = 1 << k
            upk = up[k]
            for a in range(len(elems)):
                if up[a] & bk:
                    up[a] |= upk
        return cls(beta, elems, index, up)

    def leq(self, p, q) -> bool:
        return bool(self.up[self.index[KostantPartition(p)]] >> self.index[KostantPartition(q)] & 1)

    def down_set(self, q) -> set:
        b = self.index[KostantPartition(q)]
        return {p for a, p in enumerate(self.elements) if self.up[a] >> b & 1}

    def covers(self) -> list[tuple]:
        """Covering pairs (p, q): p < q with nothing strictly between."""
        n = len(self.elements)
        edges = []
        for a in range(n):
            strict = self.up[a] & ~(1 << a)
            for b in range(n):
                if not strict >> b & 1:
                    continue
                # any c with a < c < b?
                between = strict & ~(1 << b)
                if not any(between >> c & 1 and self.up[c] >> b & 1 for c in range(n)):
                    edges.append((self.elements[a], self.elements[b]))
        return edges


def kp_leq(p, q) -> bool:
    p, q = KostantPartition(p), KostantPartition(q)
    if p.beta != q.beta:
        raise KostantError(f"{p} and {q} partition different elements")
    return _poset(p.beta).leq(p, q)


_POSETS: dict = {}


def _poset(beta: RootElement) -> KPPoset:
    P = _POSETS.get(beta)
    if P is None:
        P = _POSETS[beta] = KPPoset.build(beta)
    return P


def hasse_diagram(beta) -> tuple[list, list]:
    """(nodes, covering edges) of KP(beta); edges point upward."""
    P = _poset(RootElement(beta) if not isinstance(beta, RootElement) else beta)
    return list(P.elements), P.covers()


def hasse_dot(beta) -> str:
    nodes, edges = hasse_diagram(beta)
    name = {p: f"n{a}" for a, p in enumerate(nodes)}
    lines = ["digraph KP {", "  rankdir=BT;"]
    for p in nodes:
        lines.append(f'  {name[p]} [label="{p!r}"];')
    for p, q in edges:
        lines.append(f"  {name[p]} -> {name[q]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- weights ---------------------------------------------------------------

def is_dominant(w) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def rho(m: int) -> tuple:
    return tuple(-i for i in range(m))


def dominance_leq(a, b) -> bool:
    """a <= b iff b - a is a non-negative combination of e_i - e_{i+1}."""
    if len(a) != len(b):
        raise KostantError("weights of different length")
    partial = 0
    for x, y in zip(a, b):
        partial += y - x
        if partial < 0:
            return False
    return partial == 0


def orbit(lam) -> list[tuple]:
    """Distinct permutations of a weight, sorted decreasingly (dominant first)."""
    return sorted(set(permutations(tuple(lam))), reverse=True)


def _check_lambda(lam):
    lam = tuple(int(v) for v in lam)
    if len(lam) < 2:
        raise KostantError("need m >= 2")
    if not is_dominant(lam):
        raise KostantError(f"{lam} is not dominant")
    if lam[-1] <= 0:
        raise KostantError(f"{lam} needs a positive last entry")
    return lam


def beta_of_lambda(lam) -> RootElement:
    """sum_i alpha(-i+1, lambda_i)."""
    lam = _check_lambda(lam)
    return RootElement.of_roots((-i, lam[i]) for i in range(len(lam)))


def kp_of_weight(mu) -> KostantPartition:
    """The partition {alpha(0, mu_1), alpha(-1, mu_2), ..., alpha(-m+1, mu_m)}."""
    mu = tuple(int(v) for v in mu)
    if len(mu) < 2:
        raise KostantError("need m >= 2")
    for k, v in enumerate(mu):
        if not -k < v:
            raise KostantError(f"alpha({-k},{v}) is not a positive root")
    return KostantPartition((-k, v) for k, v in enumerate(mu))


@dataclass
class OrbitReport:
    lam: tuple
    beta: RootElement
    orbit: list
    injective: bool
    order_mismatches: list
    parts_m: set
    down_set: set

    @property
    def saturated(self) -> bool:
        return self.parts_m == self.down_set

    @property
    def ok(self) -> bool:
        return self.injective and not self.order_mismatches and self.saturated

    def to_json(self):
        return {
            "lambda": list(self.lam),
            "beta": [list(t) for t in self.beta],
            "orbit_size": len(self.orbit),
            "injective": self.injective,
            "order_mismatches": [[list(a), list(b)] for a, b in self.order_mismatches],
            "saturated": self.saturated,
            "only_in_parts_m": [p.to_json() for p in sorted(self.parts_m - self.down_set)],
            "only_in_down_set": [p.to_json() for p in sorted(self.down_set - self.parts_m)],
            "status": "pass" if self.ok else "fail",
        }


def verify_orbit_embedding(lam) -> OrbitReport:
    """Check mu -> pi_mu is an order embedding onto the m-part partitions."""
    lam = _check_lambda(lam)
    m = len(lam)
    beta = beta_of_lambda(lam)
    P = _poset(beta)
    orb = orbit(lam)
    image = {mu: kp_of_weight(mu) for mu in orb}
    injective = len(set(image.values())) == len(orb)
    bad = []
    for mu in orb:
        for nu in orb:
            if dominance_leq(mu, nu) != P.leq(image[mu], image[nu]):
                bad.append((mu, nu))
    parts_m = {p for p in P.elements if len(p) == m}
    down = P.down_set(image[lam])
    return OrbitReport(lam, beta, orb, injective, bad, parts_m, down)
