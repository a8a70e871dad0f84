"""Eigenvalue data of a cyclic automorphism acting on holomorphic differentials."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from .cyclo import Cyclotomic


@dataclass(frozen=True, order=True)
class CharacterSpec:
    """Multiplicities k_a of the eigenvalues zeta_N^a (0 <= a < N) on H^0(C, K_C).

    ``counts`` has length N and sums to the genus.
    """

    order: int
    genus: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(k) for k in self.counts))
        if self.order < 1:
            raise ValueError(f"order must be positive, got {self.order}")
        if len(self.counts) != self.order:
            raise ValueError(f"need {self.order} counts, got {len(self.counts)}")
        if any(k < 0 for k in self.counts):
            raise ValueError(f"negative multiplicity in {self.counts}")
        if sum(self.counts) != self.genus:
            raise ValueError(f"counts {self.counts} do not sum to genus {self.genus}")

    @classmethod
    def from_exponents(cls, order: int, exponents: Iterable[int]) -> CharacterSpec:
        counts = [0] * order
        exps = list(exponents)
        for a in exps:
            counts[a % order] += 1
        return cls(order, len(exps), tuple(counts))

    @property
    def exponents(self) -> tuple[int, ...]:
        """The sorted multiset a_1 <= ... <= a_g."""
        return tuple(a for a, k in enumerate(self.counts) for _ in range(k))

    def __str__(self) -> str:
        return format_character(self)


def power(chi: CharacterSpec, d: int) -> CharacterSpec:
    """Character of sigma^d, re-expressed over its own order N / gcd(N, d)."""
    n = chi.order
    q = gcd(n, d)
    new_order = n // q
    return CharacterSpec.from_exponents(new_order, ((d * a) % n // q for a in chi.exponents))


def conjugate_character(chi: CharacterSpec) -> CharacterSpec:
    return CharacterSpec.from_exponents(chi.order, (-a for a in chi.exponents))


def trace_h01(chi: CharacterSpec) -> Cyclotomic:
    """sum_a k_a zeta_N^a."""
    return Cyclotomic.from_exponents(chi.order, chi.counts)


def trace_h1(chi: CharacterSpec) -> Cyclotomic:
    """Trace on H^1(C, C): the H^0(K) trace plus its complex conjugate."""
    weights: dict[int, int] = {}
    for a, k in enumerate(chi.counts):
        if k:
            weights[a] = weights.get(a, 0) + k
            b = (-a) % chi.order
            weights[b] = weights.get(b, 0) + k
    return Cyclotomic.from_exponents(chi.order, weights)


def is_faithful(chi: CharacterSpec) -> bool:
    """True when the diagonal action has exact order N."""
    g = chi.order
    for a in chi.exponents:
        g = gcd(g, a)
    return g == 1


def is_trivial(chi: CharacterSpec) -> bool:
    return chi.counts[0] == chi.genus


def age(chi: CharacterSpec) -> Fraction:
    """Reid-Tai age sum(a_i) / N with representatives 0 <= a_i < N."""
    return Fraction(sum(a * k for a, k in enumerate(chi.counts)), chi.order)


def reid_failures(chi: CharacterSpec) -> list[int]:
    """Powers d (1 <= d < N) whose character has age < 1."""
    return [d for d in range(1, chi.order) if age(power(chi, d)) < 1]


def satisfies_reid(chi: CharacterSpec) -> bool:
    """Local Reid condition for every nontrivial element of <sigma>."""
    return not reid_failures(chi)


def galois_orbit(chi: CharacterSpec) -> list[CharacterSpec]:
    """Characters of the other generators sigma^d, gcd(d, N) = 1, deduplicated."""
    seen: dict[CharacterSpec, None] = {}
    for d in range(1, chi.order + 1):
        if gcd(d, chi.order) == 1:
            seen.setdefault(power(chi, d), None)
    return sorted(seen, key=lambda c: c.exponents)


_CHAR_RE = re.compile(r"^\s*N\s*=\s*(\d+)\s*:\s*\[\s*([-\d,\s]*)\]\s*$")


def parse_character(text: str) -> CharacterSpec:
    """Parse ``"N=12:[1,3,5]"``."""
    m = _CHAR_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse character {text!r}; expected e.g. 'N=12:[1,3,5]'")
    order = int(m.group(1))
    body = m.group(2).strip()
    exps = [int(t) for t in body.split(",") if t.strip()] if body else []
    if order < 1 or not exps:
        raise ValueError(f"character {text!r} needs a positive order and at least one exponent")
    return CharacterSpec.from_exponents(order, exps)


def format_character(chi: CharacterSpec) -> str:
    return f"N={chi.order}:[{','.join(map(str, chi.exponents))}]"
