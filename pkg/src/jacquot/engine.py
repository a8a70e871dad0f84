"""Candidate enumeration, the rejection pipeline and per-genus classification.

A candidate is a faithful eigenvalue character of a cyclic group of order N
acting on H^0(C, K_C).  Each one runs through exact filters in a fixed order
(Lefschetz counts for every power, prime-order restrictions, the quotient
genus, condition E~, condition RH~) and the survivors are realizable.  A
realizable group gives a uniruled quotient of the Jacobian exactly when some
nontrivial element has age < 1.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from contextlib import contextmanager
from functools import lru_cache

import mpmath

from .character import (
    CharacterSpec,
    age,
    galois_orbit,
    is_faithful,
    power,
    reid_failures,
    trace_h1,
)
from .curves import eigencharacter, parse_automorphism, parse_model
from .eichler import e_tilde_all_powers
from .lefschetz import (
    FixProfile,
    Rejection,
    check_quotient_genus,
    fix_profile,
    fixed_points,
    is_prime,
    prime_filters,
)
from .rh import rh_check

FILTERS = ("trace", "prime", "quotient_genus", "e_tilde", "rh")
THREADS_ENV = "JACQUOT_THREADS"


class Status(str, enum.Enum):
    REJECTED_TRACE = "rejected_trace"
    REJECTED_PRIME_FILTER = "rejected_prime_filter"
    REJECTED_QUOTIENT_GENUS = "rejected_quotient_genus"
    REJECTED_E_TILDE = "rejected_e_tilde"
    REJECTED_RH = "rejected_rh"
    REALIZABLE_REID_PASS = "realizable_reid_pass"
    REALIZABLE_UNIRULED = "realizable_uniruled"
    UNDECIDED = "undecided"

    @property
    def realizable(self) -> bool:
        return self in (Status.REALIZABLE_REID_PASS, Status.REALIZABLE_UNIRULED)


@dataclass(frozen=True)
class Verdict:
    """Outcome for one candidate.

    ``power`` is the failing power d for rejections and E~ failures, and the
    smallest power with age < 1 for uniruled verdicts.
    """

    character: CharacterSpec
    status: Status
    power: int | None = None
    reason: str = ""
    detail: str = ""
    notes: tuple[str, ...] = ()

    @property
    def realizable(self) -> bool:
        return self.status.realizable


@dataclass(frozen=True)
class Witness:
    """One Galois orbit of realizable characters whose generator itself has age < 1."""

    order: int
    exponents: tuple[int, ...]
    age: Fraction
    orbit: tuple[tuple[int, ...], ...]
    curve: str | None = None


@dataclass
class ClassificationReport:
    genus: int
    verdicts: dict[int, list[Verdict]] = field(default_factory=dict)
    witnesses: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def realizable(self, order: int | None = None) -> list[Verdict]:
        orders = [order] if order is not None else sorted(self.verdicts)
        return [v for n in orders for v in self.verdicts.get(n, []) if v.realizable]

    def reid_passing(self) -> list[Verdict]:
        return [v for v in self.realizable() if v.status is Status.REALIZABLE_REID_PASS]

    @property
    def witness_orders(self) -> list[int]:
        return sorted({w.order for w in self.witnesses})


# -- enumeration -------------------------------------------------------------


def order_bound(g: int) -> int:
    return 4 * g + 2


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for k in range(total, -1, -1):
        for rest in _compositions(total - k, parts - 1):
            yield (k,) + rest


def enumerate_candidates(g: int, n: int) -> list[CharacterSpec]:
    """Faithful characters of order n and genus g, sorted by exponent multiset."""
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    if not 2 <= n <= order_bound(g):
        raise ValueError(f"order {n} outside 2..{order_bound(g)} for genus {g}")
    out = [CharacterSpec(n, g, k) for k in _compositions(g, n)]
    return sorted((c for c in out if is_faithful(c)), key=lambda c: c.exponents)


# -- the pipeline --------------------------------------------------------------


def _rejected(chi: CharacterSpec, status: Status, rej: Rejection, notes=()) -> Verdict:
    return Verdict(chi, status, rej.power, rej.reason.value, rej.detail, tuple(notes))


def _notes_for(chi: CharacterSpec) -> list[str]:
    notes = []
    n, g = chi.order, chi.genus
    if g == 2 and n == 4 and chi.exponents == (1, 3):
        notes.append(
            "genus-2 order-4 character {1,3} is realizable and passes Reid for every power "
            "(ages 1, 1, 1); it is missing from the usual genus-2 list of Reid-passing cyclic "
            "actions (hyperelliptic involution, order 3 {1,2}, order 6 {1,5})"
        )
    if g == 4 and n == 6 and chi.counts == (0, 3, 1, 0, 0, 0):
        notes.append(
            "sigma^2 has order 3 with 6 fixed points, so Riemann-Hurwitz 6 = 3(2h - 2) + 6*2 "
            "gives quotient genus h = 0, not a negative value; the character is excluded by E~ instead"
        )
    return notes


def classify_character(chi: CharacterSpec, filters: frozenset[str] | tuple[str, ...] = FILTERS) -> Verdict:
    """Run one faithful character through the enabled filters."""
    filters = frozenset(filters)
    unknown = filters - set(FILTERS)
    if unknown:
        raise ValueError(f"unknown filters {sorted(unknown)}; choose from {FILTERS}")
    n, g = chi.order, chi.genus
    notes = _notes_for(chi)
    profile: FixProfile | None = None
    out = fix_profile(chi)
    if isinstance(out, Rejection):
        if "trace" in filters:
            return _rejected(chi, Status.REJECTED_TRACE, out, notes)
    else:
        profile = out
    if "prime" in filters and is_prime(n):
        rej = prime_filters(chi)
        if rej is not None:
            return _rejected(chi, Status.REJECTED_PRIME_FILTER, rej, notes)
    if "quotient_genus" in filters and profile is not None:
        h = check_quotient_genus(profile, g, n)
        if isinstance(h, Rejection):
            return _rejected(chi, Status.REJECTED_QUOTIENT_GENUS, h, notes)
    if "e_tilde" in filters:
        rej = e_tilde_all_powers(chi)
        if rej is not None:
            return _rejected(chi, Status.REJECTED_E_TILDE, rej, notes)
    if "rh" not in filters:
        return Verdict(chi, Status.UNDECIDED, notes=tuple(notes))
    res = rh_check(chi)
    if not res.realizable:
        rej = res.rejection
        status = Status.REJECTED_E_TILDE if rej.reason.value == "e_tilde" else Status.REJECTED_RH
        return _rejected(chi, status, rej, notes)
    fails = reid_failures(chi)
    if fails:
        d = fails[0]
        return Verdict(
            chi, Status.REALIZABLE_UNIRULED, d, detail=f"age(sigma^{d}) = {age(power(chi, d))}", notes=tuple(notes)
        )
    if (g, n) == (4, 16) and age(chi) == 1:
        notes.append("exponent sum equals N: age is exactly 1, so Reid holds for sigma")
    return Verdict(chi, Status.REALIZABLE_REID_PASS, notes=tuple(notes))


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None


def _classify_chunk(args):
    chars, filters = args
    return [classify_character(c, filters) for c in chars]


def classify(g: int, n: int, filters=FILTERS, threads: int | None = None) -> list[Verdict]:
    """Verdicts for every candidate of (g, n), in candidate order."""
    cands = enumerate_candidates(g, n)
    workers = threads if threads is not None else _threads()
    filters = tuple(f for f in FILTERS if f in set(filters))
    if workers <= 1 or len(cands) < 2000:
        return [classify_character(c, filters) for c in cands]
    size = -(-len(cands) // (4 * workers))
    chunks = [(cands[i : i + size], filters) for i in range(0, len(cands), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [v for part in pool.map(_classify_chunk, chunks) for v in part]


def group_witnesses(verdicts: list[Verdict], curve: str | None = None) -> list[Witness]:
    """Galois orbits of realizable characters whose generator has age < 1.

    The representative is the lexicographically smallest failing member.
    """
    realizable = {v.character for v in verdicts if v.realizable}
    seen: set[CharacterSpec] = set()
    out = []
    for v in verdicts:
        chi = v.character
        if chi in seen or not v.realizable or age(chi) >= 1:
            continue
        orbit = [c for c in galois_orbit(chi)]
        seen.update(orbit)
        if not all(c in realizable for c in orbit):
            raise AssertionError(f"Galois orbit of {chi} is only partly realizable")
        failing = sorted(c.exponents for c in orbit if age(c) < 1)
        rep = CharacterSpec.from_exponents(chi.order, failing[0])
        out.append(Witness(chi.order, rep.exponents, age(rep), tuple(sorted(c.exponents for c in orbit)), curve))
    return sorted(out, key=lambda w: (w.order, w.exponents))


# -- known extremal curves ---------------------------------------------------


@dataclass(frozen=True)
class KnownCurve:
    genus: int
    order: int
    model: str | None
    automorphism: str | None
    exponents: tuple[int, ...] | None

    @property
    def exists(self) -> bool:
        return self.model is not None


_KNOWN = {
    (4, 18): ("y^2 = x(x^9-1)", "(z^2*x, z*y) @ N=18", (1, 3, 5, 7)),
    (4, 16): ("y^2 = x(x^8-1)", "(z^2*x, z*y) @ N=16", (1, 3, 5, 7)),
    (4, 15): ("y^3 = x(x^5-1)", "(z^3*x, z*y) @ N=15", (1, 2, 4, 7)),
    (4, 14): (None, None, None),
    (3, 14): ("y^2 = x(x^7-1)", "(z^2*x, z*y) @ N=14", (1, 3, 5)),
    (3, 9): ("y^3 = x(x^3-1)", "(z^3*x, z*y) @ N=9", (1, 2, 4)),
    (3, 10): (None, None, None),
}


def known_curves(g: int, n: int) -> KnownCurve | None:
    """The unique curve with an automorphism of large order n in genus g, if tabulated.

    A table entry with ``exists == False`` records that no such automorphism exists.
    """
    entry = _KNOWN.get((g, n))
    if entry is None:
        return None
    return KnownCurve(g, n, *entry)


def known_curve_table() -> list[KnownCurve]:
    return [KnownCurve(g, n, *e) for (g, n), e in sorted(_KNOWN.items())]


def curve_character(curve: KnownCurve) -> CharacterSpec:
    model = parse_model(curve.model)
    auto, _ = parse_automorphism(curve.automorphism)
    return eigencharacter(model, auto)


def cross_check_known(g: int, n: int, verdicts: list[Verdict]) -> list[str]:
    """Compare the enumerated verdicts with the tabulated extremal curve; returns notes."""
    kc = known_curves(g, n)
    if kc is None:
        return []
    realizable = sorted(v.character.exponents for v in verdicts if v.realizable)
    if not kc.exists:
        if realizable:
            return [f"order {n}: tabulated as impossible in genus {g}, yet {len(realizable)} characters are realizable"]
        return [f"order {n}: no realizable character, matching the tabulated nonexistence"]
    chi = curve_character(kc)
    notes = []
    if chi.exponents != kc.exponents:
        notes.append(f"order {n}: {kc.model} gives exponents {chi.exponents}, table lists {kc.exponents}")
    orbit = sorted(c.exponents for c in galois_orbit(chi))
    if chi.exponents not in realizable:
        notes.append(f"order {n}: curve character {chi.exponents} of {kc.model} is not among realizable verdicts")
    elif orbit == realizable:
        notes.append(f"order {n}: realizable characters are exactly the Galois orbit of {kc.model}")
    else:
        notes.append(
            f"order {n}: realizable characters {realizable} differ from the Galois orbit {orbit} of {kc.model}"
        )
    return notes


# -- per-genus classification ------------------------------------------------


@lru_cache(maxsize=None)
def _classify_genus_cached(g: int, filters: tuple[str, ...]) -> ClassificationReport:
    report = ClassificationReport(g)
    for n in range(2, order_bound(g) + 1):
        verdicts = classify(g, n, filters)
        report.verdicts[n] = verdicts
        kc = known_curves(g, n)
        curve = kc.model if kc is not None and kc.exists else None
        report.witnesses.extend(group_witnesses(verdicts, curve))
        report.notes.extend(cross_check_known(g, n, verdicts))
        for v in verdicts:
            report.notes.extend(f"{v.character}: {note}" for note in v.notes)
    undecided = sum(v.status is Status.UNDECIDED for vs in report.verdicts.values() for v in vs)
    if undecided:
        report.notes.append(f"{undecided} candidates undecided with filters {list(filters)}")
    return report


def classify_genus(g: int, filters=FILTERS) -> ClassificationReport:
    """Classify every order 2..4g+2 for genus g (practical range 2..6)."""
    if not 2 <= g <= 6:
        raise ValueError(f"genus {g} outside the supported range 2..6")
    return _classify_genus_cached(g, tuple(f for f in FILTERS if f in set(filters)))


# -- tables of Reid-failing candidates ------------------------------------------

UNIVERSES = ("reid", "lefschetz", "full")


def _real_trace_within(chi: CharacterSpec, bound: int = 2) -> bool:
    """Real Lefschetz inequality tr(sigma | H^1) <= bound, decided exactly at ties."""
    value = trace_h1(chi)
    q = value.as_rational()
    if q is not None:
        return q <= bound
    with mpmath.workdps(50):
        approx = sum(2 * k * mpmath.cospi(mpmath.mpf(2 * a) / chi.order) for a, k in enumerate(chi.counts) if k)
    # an irrational value cannot equal the integer bound, so 50 digits decide the sign
    return approx <= bound


@dataclass(frozen=True)
class TableRow:
    counts: tuple[int, ...]
    fixed_points: int | None
    marked: bool
    verdict: Verdict | None


def _all_compositions(g: int, n: int) -> list[CharacterSpec]:
    return sorted((CharacterSpec(n, g, k) for k in _compositions(g, n)), key=lambda c: c.counts)


def candidate_table(g: int, n: int, universe: str = "lefschetz") -> list[TableRow]:
    """Intermediate table of candidates for (g, n).

    ``reid``: every eigenvalue multiset with sum of exponents < N (faithful or
    not), marked when the Lefschetz count of sigma is a non-negative integer.
    ``lefschetz``: faithful Reid-failing characters satisfying the real
    inequality tr(sigma^d | H^1) <= 2 for every proper divisor d of N; marked
    as in ``reid``.  ``full``: every faithful candidate.
    Rows are sorted by counts; faithful rows carry their pipeline verdict.
    """
    if universe not in UNIVERSES:
        raise ValueError(f"unknown universe {universe!r}; choose from {UNIVERSES}")
    if universe == "full":
        chars = sorted(enumerate_candidates(g, n), key=lambda c: c.counts)
    else:
        chars = [c for c in _all_compositions(g, n) if age(c) < 1]
        if universe == "lefschetz":
            divs = [d for d in range(1, n) if n % d == 0]
            chars = [c for c in chars if is_faithful(c) and all(_real_trace_within(power(c, d)) for d in divs)]
    rows = []
    for c in chars:
        fp = fixed_points(c) if c.counts[0] != g else None
        verdict = classify_character(c) if is_faithful(c) else None
        rows.append(TableRow(c.counts, fp, fp is not None, verdict))
    return rows


# -- group orders and corollary checks ---------------------------------------


@dataclass(frozen=True)
class GroupOrdersResult:
    genus: int
    orders: tuple[int, ...]
    flagged: dict[int, tuple[tuple[int, ...], ...]]

    @property
    def uniruled_possible(self) -> bool:
        return bool(self.flagged)


def group_orders(g: int, orders) -> GroupOrdersResult:
    """Which element orders of a group could carry a uniruled witness in genus g."""
    orders = tuple(sorted(set(orders)))
    if any(o < 1 for o in orders):
        raise ValueError(f"element orders must be positive, got {orders}")
    report = classify_genus(g)
    flagged: dict[int, list[tuple[int, ...]]] = {}
    for w in report.witnesses:
        if w.order in orders:
            flagged.setdefault(w.order, []).append(w.exponents)
    return GroupOrdersResult(g, orders, {o: tuple(v) for o, v in sorted(flagged.items())})


@dataclass(frozen=True)
class CorollaryCheck:
    name: str
    uniruled: bool
    steps: tuple[str, ...]


KLEIN_ORDERS = (1, 2, 3, 4, 7)
KLEIN_ORDER7 = ("y^7 = x(x-1)^2", "(x, z*y) @ N=7")
BRING_ORDERS = (1, 2, 3, 4, 5, 6)


def bring_check() -> CorollaryCheck:
    res = group_orders(4, BRING_ORDERS)
    steps = [f"element orders of S5: {list(BRING_ORDERS)}", f"genus-4 witness orders: {classify_genus(4).witness_orders}"]
    steps.append("no element order carries a witness" if not res.flagged else f"flagged: {res.flagged}")
    return CorollaryCheck("bring", res.uniruled_possible, tuple(steps))


def klein_check() -> CorollaryCheck:
    """Klein quartic: automorphism group PSL(2, 7), element orders 1, 2, 3, 4, 7."""
    res = group_orders(3, KLEIN_ORDERS)
    steps = [f"element orders of PSL(2,7): {list(KLEIN_ORDERS)}", f"flagged orders: {sorted(res.flagged)}"]
    uniruled = False
    for order, sets in res.flagged.items():
        if order == 7:
            model, auto_text = KLEIN_ORDER7
            auto, _ = parse_automorphism(auto_text)
            chi = eigencharacter(parse_model(model), auto)
            reps = galois_orbit(chi)
            for rep in reps:
                ages = [str(age(power(rep, d))) for d in range(1, 7)]
                steps.append(f"order 7 via {model}: {rep} has ages {', '.join(ages)}")
            if any(reid_failures(r) for r in reps):
                uniruled = True
                steps.append("order 7: some generator fails Reid")
            else:
                steps.append(f"order 7: all {len(reps)} Galois representatives pass Reid; not a witness")
        elif order == 2:
            for exps in sets:
                chi = CharacterSpec.from_exponents(2, exps)
                fp = fixed_points(chi)
                steps.append(
                    f"order 2: witness {chi} has Lefschetz count {fp}, but an involution of a smooth "
                    "plane quartic is a projective involution fixing a line pointwise, and that line "
                    "meets the curve, so the involution has fixed points; excluded"
                )
                if fp != 0:
                    uniruled = True
        else:
            uniruled = True
            steps.append(f"order {order}: witness sets {sets} need a separate check")
    return CorollaryCheck("klein", uniruled, tuple(steps))


# -- the large-genus bound -----------------------------------------------------


@dataclass(frozen=True)
class BoundCertificate:
    genus: int
    status: str  # "certified" or "requires_exhaustive"
    threshold_low: mpmath.mpf
    threshold_high: mpmath.mpf

    @property
    def certified(self) -> bool:
        return self.status == "certified"


@contextmanager
def _iv_dps(dps: int):
    saved = mpmath.iv.dps
    mpmath.iv.dps = dps
    try:
        yield
    finally:
        mpmath.iv.dps = saved


def bound_threshold():
    """1 + 20 pi / 13 as a rigorous interval."""
    with _iv_dps(30):
        return 1 + 20 * mpmath.iv.pi / 13


def bound_certificate(g: int) -> BoundCertificate:
    """Certified when g exceeds 1 + 20 pi / 13; smaller genera need the exhaustive sweep."""
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    t = bound_threshold()
    status = "certified" if g > t.b else "requires_exhaustive"
    return BoundCertificate(g, status, mpmath.mpf(t.a), mpmath.mpf(t.b))


@dataclass(frozen=True)
class CosLemmaResult:
    """Certificate for cos x >= 1 - 10x/13 on (0, end].

    On (0, monotone_until] the difference f(x) = cos x - 1 + 10x/13 is
    increasing from f(0) = 0; beyond it the grid minimum minus the Lipschitz
    slack bounds f from below.
    """

    step: Fraction
    end: Fraction
    monotone_until: mpmath.mpf
    grid_minimum: mpmath.mpf
    slack: mpmath.mpf
    critical_values: tuple[mpmath.mpf, mpmath.mpf]
    margin: mpmath.mpf
    certified: bool


def _arcsin_enclosure(c):
    """An interval containing arcsin(c) for c in (0, 1), checked through sin being increasing."""
    with mpmath.workdps(mpmath.iv.dps + 20):
        mid = mpmath.asin(mpmath.mpf(c.mid))
        eps = mpmath.mpf(10) ** (-mpmath.iv.dps + 5)
        lo, hi = mid - eps, mid + eps
    if not (mpmath.iv.sin(mpmath.iv.mpf(lo)).b < c.a and mpmath.iv.sin(mpmath.iv.mpf(hi)).a > c.b):
        raise ArithmeticError("arcsin enclosure failed")
    return mpmath.iv.mpf([lo, hi])


def verify_cos_lemma(step=Fraction(1, 10_000), end=Fraction(13, 5)) -> CosLemmaResult:
    step, end = Fraction(step), Fraction(end)
    if step <= 0:
        raise ValueError(f"grid step must be positive, got {step}")
    iv = mpmath.iv
    with _iv_dps(30):
        c = iv.mpf(10) / 13

        def f(x):
            return iv.cos(x) - 1 + c * x

        # f' = 10/13 - sin x >= 0 up to arcsin(10/13); take the last grid point below it
        arc = mpmath.asin(mpmath.mpf(10) / 13)
        k0 = int(mpmath.floor(arc / mpmath.mpf(step.numerator) * step.denominator))
        while k0 > 0 and iv.sin(iv.mpf([step.numerator, step.numerator]) * k0 / step.denominator).b > c.a:
            k0 -= 1
        n_end = int(end / step)
        lows = []
        for k in range(k0, n_end + 1):
            x = iv.mpf(step.numerator) * k / step.denominator
            lows.append(f(x).a)
        xe = iv.mpf(end.numerator) / end.denominator
        lows.append(f(xe).a)
        grid_min = min(lows)
        # |f'| <= 1 + 10/13, and every point lies within step/2 of the grid
        slack = ((1 + c) * step.numerator / step.denominator / 2).b
        margin = (iv.mpf(grid_min) - slack).a
        s = _arcsin_enclosure(c)
        crit = (f(s).a, f(iv.pi - s).a)
    return CosLemmaResult(
        step,
        end,
        mpmath.mpf(step.numerator) * k0 / step.denominator,
        mpmath.mpf(grid_min),
        mpmath.mpf(slack),
        (mpmath.mpf(crit[0]), mpmath.mpf(crit[1])),
        mpmath.mpf(margin),
        bool(margin >= 0 and min(crit) >= 0),
    )
