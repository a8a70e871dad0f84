"""Condition RH~ for cyclic groups: realizability of a character by a surface action.

For G = <tau> of order N, every nontrivial element sigma = tau^s carries a
ramification vector r_u(sigma) solving condition E~.  The vectors of the
generators of one cyclic subgroup are tied together by r_u(sigma^u) =
r_1(sigma), i.e. r_w(sigma^x) = r_{w / x}(sigma), so one choice per subgroup
determines the whole system.  Working down the subgroup lattice,

    r*_u(sigma) = r_u(sigma) - sum_{k in cy(G, sigma)} sum_{v = u mod |sigma|} r*_v(k)

counts the fixed points whose stabilizer is exactly <sigma>, and
l_u(sigma) = r*_u(sigma) * |sigma| / N counts their G-orbits.  The character
is realizable exactly when some choice makes every l a non-negative integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

from .character import CharacterSpec, is_faithful, is_trivial
from .cyclo import divisors, units
from .eichler import RamificationVector, e_tilde_all_powers, e_tilde_for_power
from .lefschetz import Reason, Rejection, is_prime


def element_order(n: int, s: int) -> int:
    return n // gcd(n, s % n) if s % n else 1


def cy_generators(n: int, s: int, pick: str = "smallest") -> list[tuple[int, int]]:
    """Chosen generators of the cyclic subgroups properly containing <tau^s>.

    Returns (e, t) for every subgroup order e with |tau^s| | e, e != |tau^s|,
    where tau^t has order e and (tau^t)^(e / |tau^s|) = tau^s.  The exponent t
    is the smallest valid one, or the largest with ``pick="largest"``.
    """
    if s % n == 0:
        raise ValueError("the identity has no cy set")
    m = element_order(n, s)
    out = []
    for e in divisors(n):
        if e % m or e == m:
            continue
        cands = [t for t in range(n) if element_order(n, t) == e and (t * (e // m) - s) % n == 0]
        if not cands:
            raise AssertionError(f"no generator of the order-{e} subgroup has power tau^{s}")
        out.append((e, min(cands) if pick == "smallest" else max(cands)))
    return out


@dataclass
class AdmissibleSystem:
    """r, r* and l for every nontrivial element tau^s, s = 1..N-1, keyed by s."""

    order: int
    r: dict[int, dict[int, int]] = field(default_factory=dict)
    r_star: dict[int, dict[int, int]] = field(default_factory=dict)
    l: dict[int, dict[int, Fraction]] = field(default_factory=dict)

    @property
    def admissible(self) -> bool:
        return all(
            v.denominator == 1 and v >= 0 for per in self.l.values() for v in per.values()
        )

    def offending(self) -> tuple[int, int, Fraction] | None:
        for s in sorted(self.l):
            for u, v in sorted(self.l[s].items()):
                if v.denominator != 1 or v < 0:
                    return s, u, v
        return None


def transport(n: int, s: int, vec: dict[int, int], x: int) -> dict[int, int]:
    """Ramification vector of tau^(s x) from that of tau^s (x a unit mod N)."""
    m = element_order(n, s)
    xinv = pow(x, -1, m) if m > 1 else 1
    return {w: vec[(w * xinv) % m] for w in units(m)}


def expand_choice(n: int, choice: dict[int, RamificationVector]) -> dict[int, dict[int, int]]:
    """Spread one ramification vector per subgroup (keyed by the subgroup order e,
    given for the canonical generator tau^(N/e)) to every element."""
    r: dict[int, dict[int, int]] = {}
    for s in range(1, n):
        e = element_order(n, s)
        base = n // e
        # s = base * x with x a unit mod e; lift x to a unit mod N
        x0 = s // base
        x = next(y for y in range(x0, x0 + n * e, e) if gcd(y, n) == 1)
        r[s] = transport(n, base, choice[e].as_dict(), x)
    return r


def r_star(system: AdmissibleSystem, s: int, u: int, pick: str = "smallest") -> int:
    """r*_u(tau^s); needs r* for every element of strictly larger order."""
    n = system.order
    total = system.r[s][u]
    m = element_order(n, s)
    for e, t in cy_generators(n, s, pick):
        if t not in system.r_star:
            raise RuntimeError(f"r* of tau^{t} (order {e}) is needed before tau^{s}")
        for v, val in system.r_star[t].items():
            if (v - u) % m == 0:
                total -= val
    return total


def build_system(
    n: int, r: dict[int, dict[int, int]], pick: str = "smallest", stop_early: bool = False
) -> AdmissibleSystem:
    """Fill r* and l top-down over the subgroup lattice."""
    system = AdmissibleSystem(n, r=r)
    for s in sorted(range(1, n), key=lambda s: (-element_order(n, s), s)):
        m = element_order(n, s)
        system.r_star[s] = {u: r_star(system, s, u, pick) for u in units(m)}
        system.l[s] = {u: Fraction(v * m, n) for u, v in system.r_star[s].items()}
        if stop_early and system.offending() is not None:
            break
    return system


@dataclass(frozen=True)
class RHResult:
    realizable: bool
    system: AdmissibleSystem | None = None
    rejection: Rejection | None = None
    choices_tried: int = 0


def _search(chi: CharacterSpec, pick: str) -> RHResult:
    n = chi.order
    orders = [e for e in divisors(n) if e > 1]
    options: dict[int, tuple[RamificationVector, ...]] = {}
    for e in orders:
        res = e_tilde_for_power(chi, n // e)
        if not res.feasible:
            return RHResult(False, rejection=Rejection(Reason.E_TILDE, n // e, res.describe()))
        options[e] = res.solutions
    tried = 0
    last = None
    for combo in product(*(options[e] for e in orders)):
        tried += 1
        choice = dict(zip(orders, combo))
        system = build_system(n, expand_choice(n, choice), pick, stop_early=True)
        if system.offending() is None and len(system.l) == n - 1:
            return RHResult(True, system, choices_tried=tried)
        last = system
    bad = last.offending() if last is not None else None
    detail = "no admissible system"
    power_ = None
    if bad is not None:
        power_, u, v = bad
        detail = f"no admissible system; e.g. l_{u}(sigma^{power_}) = {v} (r* = {last.r_star[power_][u]})"
    return RHResult(False, last, Rejection(Reason.RH_TILDE, power_, detail), tried)


def rh_check(chi: CharacterSpec, prime_shortcut: bool = True, pick: str = "smallest") -> RHResult:
    """Decide RH~ for the cyclic group generated by an automorphism with character chi."""
    if is_trivial(chi) or not is_faithful(chi):
        raise ValueError(f"rh_check needs a faithful nontrivial character, got {chi}")
    if prime_shortcut and is_prime(chi.order):
        rej = e_tilde_all_powers(chi)
        return RHResult(rej is None, rejection=rej)
    return _search(chi, pick)


def admissible_system(chi: CharacterSpec, pick: str = "smallest") -> AdmissibleSystem | None:
    """The first admissible system found by the search (None if there is none)."""
    res = _search(chi, pick)
    return res.system if res.realizable else None


def system_for_choice(
    chi: CharacterSpec, choice: dict[int, RamificationVector] | None = None, pick: str = "smallest"
) -> AdmissibleSystem:
    """Complete system for a given choice (default: the first E~ solution per subgroup),
    without stopping at the first inadmissible value."""
    n = chi.order
    if choice is None:
        choice = {}
        for e in divisors(n)[1:]:
            res = e_tilde_for_power(chi, n // e)
            if not res.feasible:
                raise ValueError(f"sigma^{n // e} fails E~; no system to build")
            choice[e] = res.solutions[0]
    return build_system(n, expand_choice(n, choice), pick)
