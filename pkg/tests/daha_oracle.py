"""Independent model of the algebra: its faithful action on polynomials.

x_i acts by multiplication by y_i and s_i by sigma_i - D_i, where sigma_i
swaps y_i, y_{i+1} and D_i is the divided difference.  The relations can be
checked by hand: (sigma - D)^2 = 1 - sigma D - D sigma = 1 since D f is
symmetric and D(sigma f) = -D f; and (sigma - D) y_i = y_{i+1} (sigma - D) - 1.
"""
import random
from fractions import Fraction

import sympy

from heckeo.daha import DahaElement, Permutation

Y = sympy.symbols("y1:7")


def s_action(f, i):
    a, b = Y[i - 1], Y[i]
    swapped = f.subs({a: b, b: a}, simultaneous=True)
    return sympy.expand(swapped - sympy.cancel((f - swapped) / (a - b)))


def x_action(f, j):
    return sympy.expand(Y[j - 1] * f)


def act_word(word, f):
    """Apply a word (list of ('s', i) / ('x', j)) read as a product: the
    rightmost letter acts first."""
    for kind, i in reversed(list(word)):
        f = s_action(f, i) if kind == "s" else x_action(f, i)
    return f


def act_element(elem: DahaElement, f):
    total = sympy.Integer(0)
    for (w, a), c in elem.terms.items():
        g = f
        for j, e in enumerate(a, 1):
            g = g * Y[j - 1] ** e
        g = sympy.expand(g)
        for i in reversed(w.reduced_word()):
            g = s_action(g, i)
        total += sympy.Rational(c.numerator, c.denominator) * g
    return sympy.expand(total)


def test_polys(n):
    return [
        sympy.Integer(1),
        Y[0],
        sympy.expand(Y[0] ** 2 * Y[n - 1] + 3 * Y[min(1, n - 1)]),
        sympy.expand(sympy.prod(Y[:n]) + Y[n - 1] ** 3),
    ]


def random_element(rng: random.Random, n: int, terms=3, max_deg=2):
    out = {}
    for _ in range(terms):
        img = list(range(1, n + 1))
        rng.shuffle(img)
        a = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            a[rng.randrange(n)] += 1
        out[(Permutation(img), tuple(a))] = Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2]))
    return DahaElement(n, out)
