"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) after
reduction modulo the n-th cyclotomic polynomial, so two elements of the same
field are equal exactly when their coordinate tuples are equal.  No floating
point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence, Union

Rational = Union[int, Fraction]


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def units(m: int) -> list[int]:
    """I(m): residues 0 < u < m coprime to m (I(1) is empty, I(2) = [1])."""
    return [u for u in range(1, m) if gcd(u, m) == 1]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists are low-degree first; den is monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of zeta_n^k for k = 0..n-1 in the reduced power basis."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and reduce with the monic relation x^deg = -sum phi_i x^i
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            nxt = [c - top * p for c, p in zip(nxt, phi[:-1])]
        cur = nxt
    return tuple(rows)


class CyclotomicError(ArithmeticError):
    pass


class DivisionByZero(CyclotomicError, ZeroDivisionError):
    pass


@dataclass(frozen=True)
class Cyclotomic:
    """An element of Q(zeta_order), zeta_order = exp(2 pi i / order)."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"order must be positive, got {self.order}")
        deg = len(cyclotomic_polynomial(self.order)) - 1
        if len(self.coeffs) != deg:
            raise ValueError(
                f"expected {deg} coordinates for Q(zeta_{self.order}), got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    # -- construction ---------------------------------------------------
    @classmethod
    def rational(cls, q: Rational, order: int = 1) -> Cyclotomic:
        deg = len(cyclotomic_polynomial(order)) - 1
        return cls(order, (Fraction(q),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zero(cls, order: int = 1) -> Cyclotomic:
        return cls.rational(0, order)

    @classmethod
    def from_exponents(cls, order: int, weights: dict[int, Rational] | Sequence[Rational]) -> Cyclotomic:
        """sum_k w_k zeta_order^k, from a dict {k: w_k} or a list indexed by k."""
        items = weights.items() if isinstance(weights, dict) else enumerate(weights)
        table = _power_table(order)
        acc = [Fraction(0)] * len(table[0])
        for k, w in items:
            if w:
                for i, c in enumerate(table[k % order]):
                    if c:
                        acc[i] += w * c
        return cls(order, tuple(acc))

    # -- field structure ------------------------------------------------
    def embed(self, order: int) -> Cyclotomic:
        """Image in Q(zeta_order); order must be a multiple of self.order."""
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        if order == self.order:
            return self
        step = order // self.order
        return Cyclotomic.from_exponents(
            order, {i * step: c for i, c in enumerate(self.coeffs) if c}
        )

    def _common(self, other: object) -> tuple[Cyclotomic, Cyclotomic]:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other, self.order)
        if not isinstance(other, Cyclotomic):
            raise TypeError(f"cannot combine Cyclotomic with {type(other).__name__}")
        n = lcm(self.order, other.order)
        return self.embed(n), other.embed(n)

    def __add__(self, other: object) -> Cyclotomic:
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> Cyclotomic:
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other: object) -> Cyclotomic:
        return (-self) + other

    def __mul__(self, other: object) -> Cyclotomic:
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        prod: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] = prod.get(i + j, Fraction(0)) + x * y
        return Cyclotomic.from_exponents(a.order, prod)

    __rmul__ = __mul__

    def multiplication_matrix(self) -> list[list[Fraction]]:
        """Rational matrix of x -> self * x in the power basis (columns = images)."""
        deg = len(self.coeffs)
        cols = [
            (self * Cyclotomic.from_exponents(self.order, {j: 1})).coeffs for j in range(deg)
        ]
        return [[cols[j][i] for j in range(deg)] for i in range(deg)]

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        sol = solve_rational(self.multiplication_matrix(), list(Cyclotomic.rational(1, self.order).coeffs))
        return Cyclotomic(self.order, tuple(sol.particular))

    def __truediv__(self, other: object) -> Cyclotomic:
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other: object) -> Cyclotomic:
        a, b = self._common(other)
        return b * a.inverse()

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.rational(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.as_rational() == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        q = self.as_rational()
        if q is not None:
            return hash(q)
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- Galois / rationality -------------------------------------------
    def galois(self, k: int) -> Cyclotomic:
        """Image under zeta -> zeta^k (k coprime to the order)."""
        if gcd(k, self.order) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.order}")
        return Cyclotomic.from_exponents(
            self.order, {(i * k) % self.order: c for i, c in enumerate(self.coeffs) if c}
        )

    def conjugate(self) -> Cyclotomic:
        return self.galois(-1 % self.order if self.order > 1 else 1)

    def as_rational(self) -> Fraction | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def as_integer(self) -> int | None:
        q = self.as_rational()
        if q is None or q.denominator != 1:
            return None
        return q.numerator

    def to_complex(self) -> complex:
        # display and test helper only; never used for decisions
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(complex(c) * z**i for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        return f"Cyclotomic[{self.order}]({' + '.join(terms) or '0'})"


def root_of_unity(n: int, k: int) -> Cyclotomic:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError(f"root_of_unity needs n >= 1, got {n}")
    return Cyclotomic.from_exponents(n, {k % n: 1})


def arithmetic(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    ops = {
        "add": lambda x, y: x + y,
        "sub": lambda x, y: x - y,
        "mul": lambda x, y: x * y,
        "div": lambda x, y: x / y,
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op](a, b)


def conjugate(a: Cyclotomic) -> Cyclotomic:
    return a.conjugate()


def as_rational(a: Cyclotomic) -> Fraction | None:
    return a.as_rational()


# -- exact linear algebra over Q -------------------------------------------


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of an exact rational solve.

    kind is "unique", "family" or "infeasible".  For solvable systems
    ``particular`` is one solution (free variables set to zero) and ``basis``
    spans the homogeneous solutions, one vector per free column.
    """

    kind: str
    particular: tuple[Fraction, ...] = ()
    basis: tuple[tuple[Fraction, ...], ...] = ()
    pivots: tuple[int, ...] = ()
    free: tuple[int, ...] = ()

    @property
    def solvable(self) -> bool:
        return self.kind != "infeasible"


def rref(matrix: Sequence[Sequence[Rational]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns, exact over Q."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def solve_rational(matrix: Sequence[Sequence[Rational]], rhs: Sequence[Rational]) -> LinearSolution:
    """Solve matrix @ x = rhs exactly over Q."""
    n_rows = len(matrix)
    if len(rhs) != n_rows:
        raise ValueError(f"rhs has {len(rhs)} entries for {n_rows} equations")
    n_cols = len(matrix[0]) if n_rows else 0
    if any(len(row) != n_cols for row in matrix):
        raise ValueError("ragged coefficient matrix")
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug)
    if n_cols in pivots:
        return LinearSolution("infeasible")
    free = [c for c in range(n_cols) if c not in pivots]
    particular = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        particular[c] = red[i][n_cols]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n_cols
        vec[f] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -red[i][f]
        basis.append(tuple(vec))
    return LinearSolution(
        "unique" if not free else "family",
        tuple(particular),
        tuple(basis),
        tuple(pivots),
        tuple(free),
    )


def solve_linear(columns: Sequence[Cyclotomic], rhs: Cyclotomic) -> LinearSolution:
    """Find rational x with sum_j x_j * columns[j] == rhs.

    All elements are embedded in a common field first; each cyclotomic
    equation then contributes phi(n) rational equations.
    """
    if not columns:
        raise ValueError("solve_linear needs at least one column")
    n = rhs.order
    for c in columns:
        n = lcm(n, c.order)
    cols = [c.embed(n).coeffs for c in columns]
    b = rhs.embed(n).coeffs
    matrix = [[col[i] for col in cols] for i in range(len(b))]
    return solve_rational(matrix, b)
