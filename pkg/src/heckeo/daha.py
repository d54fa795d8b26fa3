"""The degenerate affine Hecke algebra H_n in the PBW basis {w * x^a}.

Conventions
-----------
* A permutation is stored by its images ``(w(1), ..., w(n))``.  Products are
  functional composition, ``(u * v)(i) = u(v(i))``, so the word
  ``s_{i1} ... s_{ik}`` denotes the composite of the transpositions in that
  order.
* Basis elements are written ``w * x^a``: the group element on the left, the
  polynomial on the right.  Words are brought to this form by rewriting every
  adjacent ``x_j s_i`` into ``s_i``-first form:

      x_{i+1} s_i -> s_i x_i + 1
      x_i s_i     -> s_i x_{i+1} - 1
      x_j s_i     -> s_i x_j          (j != i, i+1)

  Each step strictly lowers the number of (X, S) letter pairs standing in the
  wrong order, so rewriting terminates, and the result is the PBW normal
  form.  ``x^a s_i = s_i x^(s_i a) - D_i(x^a)`` with ``D_i`` the divided
  difference is the closed form of the same rule; it is used by the tests as
  an independent check.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .scalars import format_rational, parse_rational

# constants of the two non-trivial cross rules; kept as module attributes so
# the negative-control tests can perturb exactly one of them
CROSS_RAISE = 1  # x_{i+1} s_i = s_i x_i + CROSS_RAISE
CROSS_LOWER = -1  # x_i s_i = s_i x_{i+1} + CROSS_LOWER


class DahaError(ValueError):
    pass


class Permutation(tuple):
    """Images ``(w(1), ..., w(n))`` of a permutation of {1..n}."""

    def __new__(cls, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DahaError(f"{images} is not a permutation of 1..{len(images)}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, i):
        """The simple transposition s_i swapping i and i+1."""
        if not 1 <= i < n:
            raise DahaError(f"s{i} is not a generator of S_{n}")
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(img)

    @property
    def n(self):
        return len(self)

    def __call__(self, i):
        return self[i - 1]

    def __mul__(self, other):
        if len(other) != len(self):
            raise DahaError("permutations of different degree")
        return Permutation(self[o - 1] for o in other)

    def inverse(self):
        inv = [0] * len(self)
        for i, w in enumerate(self, 1):
            inv[w - 1] = i
        return Permutation(inv)

    def length(self):
        n = len(self)
        return sum(1 for i in range(n) for j in range(i + 1, n) if self[i] > self[j])

    def reduced_word(self):
        """Indices ``[i1, ..., ik]`` with self = s_{i1} ... s_{ik}, k = length."""
        w = list(self)
        word = []
        # peel right descents: w = (w s_i) s_i whenever w(i) > w(i+1)
        while True:
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    w[i], w[i + 1] = w[i + 1], w[i]
                    word.append(i + 1)
                    break
            else:
                break
        return word[::-1]

    def act_on_exponents(self, a):
        """Exponents of w(x^a), where w(x_j) = x_{w(j)}."""
        out = [0] * len(a)
        for j, e in enumerate(a, 1):
            out[self(j) - 1] = e
        return tuple(out)

    def __repr__(self):
        return f"Permutation({list(self)})"


# -- words ---------------------------------------------------------------

_TOKEN = re.compile(r"^([sSxX])(\d+)$")


class DahaWord(tuple):
    """A word in the letters ``('s', i)`` and ``('x', j)``."""

    def __new__(cls, letters):
        out = []
        for kind, idx in letters:
            kind = kind.lower()
            if kind not in ("s", "x"):
                raise DahaError(f"unknown letter {kind!r}")
            out.append((kind, int(idx)))
        return super().__new__(cls, out)

    @classmethod
    def parse(cls, text: str) -> "DahaWord":
        letters = []
        for tok in text.split():
            m = _TOKEN.match(tok)
            if not m:
                raise DahaError(f"bad token {tok!r}")
            letters.append((m.group(1), int(m.group(2))))
        return cls(letters)

    def check(self, n):
        for kind, i in self:
            if kind == "s" and not 1 <= i < n:
                raise DahaError(f"s{i} out of range for H_{n}")
            if kind == "x" and not 1 <= i <= n:
                raise DahaError(f"x{i} out of range for H_{n}")

    def __str__(self):
        return " ".join(f"{k}{i}" for k, i in self)


def S(i):
    return ("s", i)


def X(j):
    return ("x", j)


# -- elements ------------------------------------------------------------

class DahaElement:
    """A finite sum ``sum c[w, a] w * x^a`` with rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for (w, a), c in (terms or {}).items():
            w = w if isinstance(w, Permutation) else Permutation(w)
            a = tuple(a)
            if len(w) != n or len(a) != n or min(a, default=0) < 0:
                raise DahaError(f"bad basis symbol {(w, a)} for H_{n}")
            c = Fraction(c)
            if c:
                key = (w, a)
                v = clean.get(key, 0) + c
                if v:
                    clean[key] = v
                else:
                    clean.pop(key)
        self.terms = clean

    @classmethod
    def _raw(cls, n, terms):
        e = object.__new__(cls)
        e.n = n
        e.terms = terms
        return e

    # constructors
    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls.basis(Permutation.identity(n), (0,) * n)

    @classmethod
    def basis(cls, w, a, coeff=1):
        w = Permutation(w)
        return cls(len(w), {(w, tuple(a)): coeff})

    @classmethod
    def s(cls, n, i):
        return cls.basis(Permutation.transposition(n, i), (0,) * n)

    @classmethod
    def x(cls, n, j):
        if not 1 <= j <= n:
            raise DahaError(f"x{j} out of range for H_{n}")
        a = [0] * n
        a[j - 1] = 1
        return cls.basis(Permutation.identity(n), a)

    @classmethod
    def polynomial(cls, n, poly: dict):
        """Embed ``{exponents: coeff}`` as an element of P_n."""
        e = Permutation.identity(n)
        return cls(n, {(e, tuple(a)): c for a, c in poly.items()})

    @classmethod
    def from_permutation(cls, w):
        w = Permutation(w)
        return cls.basis(w, (0,) * len(w))

    # arithmetic
    def _same(self, other):
        if not isinstance(other, DahaElement):
            raise TypeError("expected DahaElement")
        if other.n != self.n:
            raise DahaError(f"H_{self.n} vs H_{other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DahaElement.one(self.n) * other
        self._same(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return DahaElement._raw(self.n, t)

    __radd__ = __add__

    def __neg__(self):
        return DahaElement._raw(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return DahaElement.zero(self.n)
            return DahaElement._raw(self.n, {k: c * other for k, c in self.terms.items()})
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, DahaElement):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == DahaElement.one(self.n) * other
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def is_polynomial(self):
        e = Permutation.identity(self.n)
        return all(w == e for w, _ in self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (w, a), c in sorted(self.terms.items(), key=lambda t: (t[0][0].length(), t[0])):
            sym = []
            if w != Permutation.identity(self.n):
                sym.append("w" + "".join(map(str, w)))
            sym += [f"x{j}" if e == 1 else f"x{j}^{e}" for j, e in enumerate(a, 1) if e]
            body = "*".join(sym) or "1"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return [
            {"perm": list(w), "exps": list(a), "coeff": format_rational(c)}
            for (w, a), c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, n, data):
        return cls(n, {(tuple(t["perm"]), tuple(t["exps"])): parse_rational(t["coeff"]) for t in data})


def _add_into(acc, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


@lru_cache(maxsize=None)
def _push_left(a: tuple, i: int, raise_c, lower_c):
    """x^a * s_i as ``((moved, b), coeff)`` pairs meaning c * s_i^moved * x^b.

    Rewrites one x-letter at a time, rightmost first.
    """
    n = len(a)
    j = max((k for k in range(n) if a[k]), default=None)
    if j is None:
        return (((True, a), Fraction(1)),)
    rest = list(a)
    rest[j] -= 1
    rest = tuple(rest)
    jj = j + 1  # 1-based index of the letter x_jj being pushed
    # x^rest * x_jj * s_i
    if jj == i + 1:
        swapped, const = i, raise_c
    elif jj == i:
        swapped, const = i + 1, lower_c
    else:
        swapped, const = jj, 0
    acc = {}
    # x^rest * s_i * x_swapped
    for (moved, b), c in _push_left(rest, i, raise_c, lower_c):
        b = list(b)
        b[swapped - 1] += 1
        _add_into(acc, (moved, tuple(b)), c)
    if const:
        # x^rest * const
        _add_into(acc, (False, rest), Fraction(const))
    return tuple(acc.items())


def _times_s(elem_terms: dict, i: int, n: int) -> dict:
    s = Permutation.transposition(n, i)
    out = {}
    rc, lc = CROSS_RAISE, CROSS_LOWER
    for (w, a), c in elem_terms.items():
        ws = w * s
        for (moved, b), d in _push_left(a, i, rc, lc):
            _add_into(out, (ws if moved else w, b), c * d)
    return out


def _times_x(elem_terms: dict, j: int) -> dict:
    out = {}
    for (w, a), c in elem_terms.items():
        b = list(a)
        b[j - 1] += 1
        _add_into(out, (w, tuple(b)), c)
    return out


def normal_form(word, n: int) -> DahaElement:
    """The PBW normal form of a word (a :class:`DahaWord` or its text form)."""
    if isinstance(word, str):
        word = DahaWord.parse(word)
    else:
        word = DahaWord(word)
    word.check(n)
    terms = {(Permutation.identity(n), (0,) * n): Fraction(1)}
    for kind, i in word:
        terms = _times_s(terms, i, n) if kind == "s" else _times_x(terms, i)
    return DahaElement._raw(n, terms)


def multiply(a: DahaElement, b: DahaElement) -> DahaElement:
    if not isinstance(b, DahaElement):
        raise TypeError("expected DahaElement")
    if a.n != b.n:
        raise DahaError(f"H_{a.n} vs H_{b.n}")
    n = a.n
    out = {}
    for (w, e), c in b.terms.items():
        # a * w * x^e: right-multiply by the letters of a reduced word of w
        t = a.terms
        for i in w.reduced_word():
            t = _times_s(t, i, n)
        for (w2, e2), d in t.items():
            _add_into(out, (w2, tuple(x + y for x, y in zip(e2, e))), c * d)
    return DahaElement._raw(n, out)


def commutator(a: DahaElement, b: DahaElement) -> DahaElement:
    return a * b - b * a


def psi_involution(a: DahaElement) -> DahaElement:
    """The anti-involution fixing every s_i and x_j.

    It sends ``w * x^a`` to ``x^a * w^-1`` (the reversed word), re-normalized.
    """
    n = a.n
    out = DahaElement.zero(n)
    e = Permutation.identity(n)
    for (w, exps), c in a.terms.items():
        out = out + DahaElement._raw(n, {(e, exps): c}) * DahaElement.from_permutation(w.inverse())
    return out


def generators(n: int) -> list[DahaElement]:
    return [DahaElement.s(n, i) for i in range(1, n)] + [DahaElement.x(n, j) for j in range(1, n + 1)]


def is_central(p: DahaElement) -> bool:
    return all(commutator(p, g).is_zero() for g in generators(p.n))


def divided_difference(poly: dict, i: int) -> dict:
    """D_i f = (f - s_i f) / (x_i - x_{i+1}) on ``{exponents: coeff}`` maps."""
    out = {}
    for a, c in poly.items():
        p, q = a[i - 1], a[i]
        if p == q:
            continue
        lo, sign = (q, 1) if p > q else (p, -1)
        k = abs(p - q)
        # (x_i^k - x_{i+1}^k) / (x_i - x_{i+1}) = sum_r x_i^r x_{i+1}^(k-1-r)
        for r in range(k):
            b = list(a)
            b[i - 1] = lo + r
            b[i] = lo + k - 1 - r
            _add_into(out, tuple(b), sign * c)
    return out


def symmetrize(poly: dict, n: int) -> dict:
    """Sum of the S_n-orbit of a polynomial (a symmetric polynomial)."""
    out = {}
    for w in permutations(range(1, n + 1)):
        w = Permutation(w)
        for a, c in poly.items():
            _add_into(out, w.act_on_exponents(a), c)
    return out


_MONO = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_polynomial(text: str, n: int) -> dict:
    """Parse sums like ``"x1+x2"``, ``"2*x1^2*x3 - 1/2"`` into a polynomial map."""
    src = text.replace(" ", "")
    if not src:
        raise DahaError("empty polynomial")
    terms = re.findall(r"[+-]?[^+-]+", src)
    out = {}
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("+-")
        coeff = Fraction(sign)
        exps = [0] * n
        for factor in term.split("*"):
            m = _MONO.fullmatch(factor)
            if m:
                j = int(m.group(1))
                if not 1 <= j <= n:
                    raise DahaError(f"x{j} out of range for n={n}")
                exps[j - 1] += int(m.group(2) or 1)
            else:
                try:
                    coeff *= parse_rational(factor)
                except (ValueError, ZeroDivisionError) as exc:
                    raise DahaError(f"bad factor {factor!r}") from exc
        _add_into(out, tuple(exps), coeff)
    return out
