"""Condition E~: non-negative integer solutions of the Eichler trace formula.

For an element of order m with character value alpha, we look for
non-negative integers f_u (u in I(m)) with

    alpha = 1 + sum_u f_u * zeta_m^u / (1 - zeta_m^u).

Taking real parts shows sum_u f_u = 2 - (alpha + conj(alpha)), the Lefschetz
fixed-point count, so the search space is finite.  The vectors
zeta^u / (1 - zeta^u) all have real part -1/2, which makes the system rank
deficient as soon as phi(m) >= 4; the exact solver returns a particular
solution plus a kernel basis and the integer points are enumerated inside
that affine family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .character import CharacterSpec, power, trace_h01
from .cyclo import Cyclotomic, divisors, lcm, root_of_unity, rref, units
from .lefschetz import Reason, Rejection


@dataclass(frozen=True)
class RamificationVector:
    """f_u for u in I(m): the number of fixed points with rotation index u."""

    order: int
    values: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, order: int, values: dict[int, int]) -> RamificationVector:
        keys = units(order)
        if sorted(values) != keys:
            raise ValueError(f"keys {sorted(values)} are not I({order}) = {keys}")
        return cls(order, tuple((u, int(values[u])) for u in keys))

    def __getitem__(self, u: int) -> int:
        return dict(self.values)[u]

    def as_dict(self) -> dict[int, int]:
        return dict(self.values)

    @property
    def total(self) -> int:
        return sum(v for _, v in self.values)

    def value(self) -> Cyclotomic:
        """1 + sum f_u zeta^u / (1 - zeta^u), recomputed directly."""
        out = Cyclotomic.rational(1, self.order)
        for u, f in self.values:
            if f:
                z = root_of_unity(self.order, u)
                out = out + f * (z / (1 - z))
        return out


def eichler_column(m: int, u: int) -> Cyclotomic:
    z = root_of_unity(m, u)
    return z / (1 - z)


class _Factored:
    """Row reduction of the Eichler system for one order m, reused across right-hand sides."""

    def __init__(self, m: int) -> None:
        self.m = m
        self.keys = units(m)
        cols = [eichler_column(m, u).coeffs for u in self.keys]
        dim = len(cols[0])
        a = [[cols[j][i] for j in range(len(cols))] for i in range(dim)]
        aug = [row + [Fraction(int(i == k)) for k in range(dim)] for i, row in enumerate(a)]
        red, piv = rref(aug)
        nvar = len(self.keys)
        self.pivots = [c for c in piv if c < nvar]
        self.rank = len(self.pivots)
        self.free = [c for c in range(nvar) if c not in self.pivots]
        self.reduced = [row[:nvar] for row in red]
        self.transform = [row[nvar:] for row in red]

    def reduce_rhs(self, b: tuple[Fraction, ...]) -> list[Fraction]:
        return [sum((t * x for t, x in zip(row, b)), Fraction(0)) for row in self.transform]


@lru_cache(maxsize=None)
def _factored(m: int) -> _Factored:
    return _Factored(m)


def eichler_rank(m: int) -> int:
    """Rank over Q of the vectors zeta_m^u / (1 - zeta_m^u), u in I(m)."""
    return _factored(m).rank


@dataclass(frozen=True)
class ETildeResult:
    """Outcome of the E~ test for one character value.

    ``linear`` is "unique", "family" or "none" (no rational solution).
    ``rational_solution`` is the unique rational solution when it exists;
    for infeasible unique systems it is the witness with a negative or
    non-integral entry.
    """

    order: int
    linear: str
    fixed_points: Fraction | None
    solutions: tuple[RamificationVector, ...]
    rational_solution: tuple[Fraction, ...] | None = None

    @property
    def feasible(self) -> bool:
        return bool(self.solutions)

    def describe(self) -> str:
        if self.feasible:
            return f"feasible with {len(self.solutions)} solution(s)"
        if self.linear == "none":
            return "no rational solution"
        if self.rational_solution is not None:
            keys = units(self.order)
            sol = ", ".join(f"f_{u}={v}" for u, v in zip(keys, self.rational_solution))
            return f"unique rational solution {sol} is not a non-negative integer vector"
        return "no non-negative integer point in the rational solution family"


def _enumerate(fac: _Factored, particular: list[Fraction], budget: int) -> Iterator[list[int]]:
    """Non-negative integer points of the affine solution family.

    Free variables are bounded by ``budget`` (the fixed-point count) and the
    search is pruned whenever some pivot variable can no longer reach 0.
    Everything is scaled by a common denominator so the search runs on ints.
    """
    nvar = len(fac.keys)
    free = fac.free
    rows = fac.reduced[: fac.rank]
    start = [particular[c] for c in fac.pivots]
    scale = 1
    for q in [row[c] for row in rows for c in free] + start:
        scale = lcm(scale, q.denominator)
    # pivot value * scale = start - sum_j coeff[i][j] * x_free_j
    coeff = [[int(row[c] * scale) for c in free] for row in rows]
    best = [[max([0] + [-coeff[i][j] for j in range(k, len(free))]) for k in range(len(free) + 1)] for i in range(len(rows))]
    nfree, npiv = len(free), len(rows)

    def rec(k: int, left: int, current: list[int], chosen: list[int]) -> Iterator[list[int]]:
        for i in range(npiv):
            if current[i] + left * best[i][k] < 0:
                return
        if k == nfree:
            if all(v % scale == 0 for v in current):
                x = [0] * nvar
                for c, v in zip(fac.pivots, current):
                    x[c] = v // scale
                for c, v in zip(free, chosen):
                    x[c] = v
                yield x
            return
        col = [coeff[i][k] for i in range(npiv)]
        for v in range(left + 1):
            nxt = [cur - a * v for cur, a in zip(current, col)]
            yield from rec(k + 1, left - v, nxt, chosen + [v])

    yield from rec(0, budget, [int(v * scale) for v in start], [])


def _solve(alpha: Cyclotomic, m: int) -> ETildeResult:
    fac = _factored(m)
    rhs = (alpha - 1).coeffs
    red = fac.reduce_rhs(rhs)
    if any(red[fac.rank :]):
        return ETildeResult(m, "none", None, ())
    particular = [Fraction(0)] * len(fac.keys)
    for i, c in enumerate(fac.pivots):
        particular[c] = red[i]
    fixed = (2 - (alpha + alpha.conjugate())).as_rational()
    if not fac.free:
        ok = all(v.denominator == 1 and v >= 0 for v in particular)
        sols = (
            (RamificationVector(m, tuple((u, int(v)) for u, v in zip(fac.keys, particular))),)
            if ok
            else ()
        )
        return ETildeResult(m, "unique", fixed, sols, tuple(particular))
    sols_list: list[RamificationVector] = []
    if fixed is not None and fixed.denominator == 1 and fixed >= 0:
        reduced_particular = [red[i] for i in range(fac.rank)]
        full = [Fraction(0)] * len(fac.keys)
        for c, v in zip(fac.pivots, reduced_particular):
            full[c] = v
        for x in _enumerate(fac, full, fixed.numerator):
            sols_list.append(RamificationVector(m, tuple(zip(fac.keys, x))))
    sols_list.sort(key=lambda r: r.values)
    return ETildeResult(m, "family", fixed, tuple(sols_list))


@lru_cache(maxsize=65536)
def _solve_cached(order: int, coeffs: tuple[Fraction, ...], m: int) -> ETildeResult:
    return _solve(Cyclotomic(order, coeffs), m)


def e_tilde_solve(chi_value: Cyclotomic, m: int) -> ETildeResult:
    """All non-negative integer f with chi_value = 1 + sum f_u zeta_m^u / (1 - zeta_m^u)."""
    if m < 2:
        raise ValueError(f"condition E~ needs an element of order >= 2, got {m}")
    if m % chi_value.order:
        raise ValueError(f"value lives in Q(zeta_{chi_value.order}), not inside Q(zeta_{m})")
    alpha = chi_value.embed(m)
    return _solve_cached(alpha.order, alpha.coeffs, m)


def e_tilde_for_power(chi: CharacterSpec, d: int) -> ETildeResult:
    sub = power(chi, d)
    return e_tilde_solve(trace_h01(sub), sub.order)


def e_tilde_all_powers(chi: CharacterSpec) -> Rejection | None:
    """Check E~ for every nontrivial power of sigma; None on pass.

    Generators of one cyclic subgroup have Galois-conjugate values, so one
    representative per subgroup suffices, and the smallest failing power d
    is always a divisor of N.
    """
    n = chi.order
    for d in divisors(n)[:-1]:
        res = e_tilde_for_power(chi, d)
        if not res.feasible:
            return Rejection(Reason.E_TILDE, d, f"sigma^{d} (order {n // d}): {res.describe()}")
    return None
