"""Independent reference computations used to cross-check the library.

Nothing here imports the decision code under test: realizable characters are
built from branching data (generating vectors) and the Chevalley-Weil
multiplicity formula, and E~ solutions are found by exhaustive search over
numeric embeddings.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import gcd


def _frac(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


@lru_cache(maxsize=None)
def realizable_counts(g: int, n: int) -> frozenset[tuple[int, ...]]:
    """Eigenvalue count vectors of all Z/n actions on genus-g curves.

    Data: quotient genus h and branch monodromies c_1..c_r in Z/n \\ 0 with
    sum c_j = 0, generating Z/n when h = 0, subject to Riemann-Hurwitz
    2g - 2 = n(2h - 2) + sum n(1 - 1/ord(c_j)).  The multiplicity of z^a on
    H^0(K) is h for a = 0 and h - 1 + sum <-a c_j / n> otherwise.
    """
    out = set()
    for h in range(0, g + 1):
        budget = Fraction(2 * g - 2 - n * (2 * h - 2), n)  # sum (1 - 1/ord)
        if budget < 0:
            continue
        max_r = int(budget * 2)  # each term >= 1/2
        for r in range(0, max_r + 1):
            for cs in combinations_with_replacement(range(1, n), r):
                if sum(Fraction(1) - Fraction(gcd(n, c), n) for c in cs) != budget:
                    continue
                if sum(cs) % n:
                    continue
                if h == 0 and gcd(n, *cs) != 1:
                    continue
                counts = [h] + [
                    h - 1 + sum(_frac(Fraction(-a * c, n)) for c in cs) for a in range(1, n)
                ]
                if all(Fraction(k).denominator == 1 for k in counts):
                    out.add(tuple(int(k) for k in counts))
    return frozenset(c for c in out if sum(c) == g)


def brute_e_tilde(alpha: complex, m: int, bound: int) -> set[tuple[int, ...]]:
    """All f in {0..bound}^I(m) with sum f <= bound matching alpha numerically."""
    units = [u for u in range(1, m) if gcd(u, m) == 1]
    z = cmath.exp(2j * cmath.pi / m)
    cols = [z**u / (1 - z**u) for u in units]
    out = set()

    def rec(i: int, left: int, acc: complex, chosen: tuple[int, ...]):
        if i == len(units):
            if abs(1 + acc - alpha) < 1e-9:
                out.add(chosen)
            return
        for f in range(left + 1):
            rec(i + 1, left - f, acc + f * cols[i], chosen + (f,))

    rec(0, bound, 0j, ())
    return out


def order3_inequalities(k0: int, k1: int, k2: int) -> bool:
    """Classical conditions for an order-3 automorphism with eigenvalue counts
    k0, k1, k2 of 1, w, w^2 (w = exp(2 pi i / 3)), the last two read over k0, k1, k2."""
    return (
        min(k0, k1, k2) >= 0
        and k0 + k1 - 2 * k2 <= 1
        and k0 - 2 * k1 + k2 <= 1
        and k0 + k1 + k2 >= 2
    )


def brute_e_tilde_table(m: int, bound: int) -> dict[tuple[float, float], set[tuple[int, ...]]]:
    """Every f in N^I(m) with sum f <= bound, grouped by the (rounded) value it produces."""
    units = [u for u in range(1, m) if gcd(u, m) == 1]
    z = cmath.exp(2j * cmath.pi / m)
    cols = [z**u / (1 - z**u) for u in units]
    table: dict[tuple[float, float], set[tuple[int, ...]]] = {}

    def rec(i: int, left: int, acc: complex, chosen: tuple[int, ...]):
        if i == len(units):
            table.setdefault(value_key(1 + acc), set()).add(chosen)
            return
        for f in range(left + 1):
            rec(i + 1, left - f, acc + f * cols[i], chosen + (f,))

    rec(0, bound, 0j, ())
    return table


def value_key(z: complex) -> tuple[float, float]:
    return (round(z.real, 7) + 0.0, round(z.imag, 7) + 0.0)
