"""Fixed-point counts from the Lefschetz formula and the filters built on them."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .character import CharacterSpec, is_trivial, power, trace_h1
from .cyclo import Cyclotomic, divisors


class Reason(str, enum.Enum):
    IRRATIONAL_TRACE = "irrational_trace"
    NON_INTEGER_FIXED_COUNT = "non_integer_fixed_count"
    NEGATIVE_FIXED_COUNT = "negative_fixed_count"
    NEGATIVE_STABILIZER_COUNT = "negative_stabilizer_count"
    FK_SINGLE_FIXED_POINT = "fk_single_fixed_point"
    FB_PRIME_ORDER = "fb_prime_order"
    FRACTIONAL_ORBIT_COUNT = "fractional_orbit_count"
    QUOTIENT_GENUS = "negative_or_fractional_quotient_genus"
    E_TILDE = "e_tilde"
    RH_TILDE = "rh_tilde"


@dataclass(frozen=True)
class Rejection:
    reason: Reason
    power: int | None = None
    detail: str = ""


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


def lefschetz_value(chi: CharacterSpec) -> Cyclotomic:
    """2 - tr(sigma | H^1), which equals |Fix(sigma)| for a genuine automorphism."""
    return Cyclotomic.rational(2, chi.order) - trace_h1(chi)


def check_fixed_points(chi: CharacterSpec) -> int | Rejection:
    if is_trivial(chi):
        raise ValueError("the identity has no finite fixed-point count")
    q = lefschetz_value(chi).as_rational()
    if q is None:
        return Rejection(Reason.IRRATIONAL_TRACE, detail=f"2 - tr is irrational for {chi}")
    if q.denominator != 1:
        return Rejection(Reason.NON_INTEGER_FIXED_COUNT, detail=f"2 - tr = {q}")
    if q < 0:
        return Rejection(Reason.NEGATIVE_FIXED_COUNT, detail=f"2 - tr = {q}")
    return q.numerator


def fixed_points(chi: CharacterSpec) -> int | None:
    """|Fix(sigma)| from the Lefschetz formula, or None when no automorphism can have chi."""
    out = check_fixed_points(chi)
    return out if isinstance(out, int) else None


def prime_filters(chi: CharacterSpec) -> Rejection | None:
    """Fixed-point and order restrictions for automorphisms of prime order.

    Returns None on pass.
    """
    n, g = chi.order, chi.genus
    if not is_prime(n):
        raise ValueError(f"prime_filters needs a prime order, got {n}")
    if n > 2 * g + 1 or (g < n < 2 * g + 1 and n != g + 1):
        return Rejection(Reason.FB_PRIME_ORDER, detail=f"prime {n} not in (<= {g}, {g + 1}, {2 * g + 1})")
    if fixed_points(chi) == 1:
        return Rejection(Reason.FK_SINGLE_FIXED_POINT, 1, "an automorphism of prime order with a fixed point has at least two")
    return None


@dataclass(frozen=True)
class FixProfile:
    """Fixed-point data of a cyclic action of order N.

    ``fix[e]`` is the number of points fixed by the subgroup of order e
    (generated by sigma^(N/e)); ``exact[e]`` counts points whose stabilizer
    is exactly that subgroup.  Keys are the divisors e > 1 of N.
    """

    order: int
    fix: dict[int, int] = field(default_factory=dict)
    exact: dict[int, int] = field(default_factory=dict)

    def orbits(self, e: int) -> Fraction:
        """Number of G-orbits of points with stabilizer of order exactly e."""
        return Fraction(self.exact[e] * e, self.order)

    def ramification(self) -> int:
        """sum over points P of (e_P - 1)."""
        return sum(count * (e - 1) for e, count in self.exact.items())


def fix_profile(chi: CharacterSpec) -> FixProfile | Rejection:
    n = chi.order
    subgroups = [e for e in divisors(n) if e > 1]
    fix: dict[int, int] = {}
    for e in subgroups:
        d = n // e
        out = check_fixed_points(power(chi, d))
        if isinstance(out, Rejection):
            return Rejection(out.reason, d, out.detail)
        fix[e] = out
    exact: dict[int, int] = {}
    for e in sorted(subgroups, reverse=True):
        above = sum(exact[f] for f in exact if f % e == 0)
        exact[e] = fix[e] - above
        if exact[e] < 0:
            return Rejection(
                Reason.NEGATIVE_STABILIZER_COUNT,
                n // e,
                f"{fix[e]} points fixed by the order-{e} subgroup but {above} already have larger stabilizers",
            )
    return FixProfile(n, fix, dict(sorted(exact.items())))


def build_fix_profile(chi: CharacterSpec) -> FixProfile | None:
    out = fix_profile(chi)
    return out if isinstance(out, FixProfile) else None


def check_quotient_genus(profile: FixProfile, g: int, n: int) -> int | Rejection:
    if profile.order != n:
        raise ValueError(f"profile of order {profile.order} used with N = {n}")
    for e in profile.exact:
        if profile.orbits(e).denominator != 1:
            return Rejection(
                Reason.FRACTIONAL_ORBIT_COUNT,
                n // e,
                f"{profile.exact[e]} points with stabilizer of order {e} do not form orbits of size {n // e}",
            )
    # 2g - 2 = N (2h - 2) + sum_P (e_P - 1)
    h = Fraction(2 * g - 2 - profile.ramification(), 2 * n) + 1
    if h.denominator != 1 or h < 0:
        return Rejection(Reason.QUOTIENT_GENUS, detail=f"Riemann-Hurwitz gives quotient genus {h}")
    return h.numerator


def quotient_genus(profile: FixProfile, g: int, n: int) -> int | None:
    out = check_quotient_genus(profile, g, n)
    return out if isinstance(out, int) else None
