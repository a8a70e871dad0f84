"""Superelliptic curves y^m = f(x) and their monomial automorphisms.

A model is y^m = x^e0 * (x^k - 1)^e1 * prod_c (x - c)^e_c with rational
points c.  Holomorphic differentials are spanned by monomials
x^alpha (x^k - 1)^gamma1 prod_c (x - c)^gamma_c dx / y^l, and a monomial
automorphism (x, y) -> (z^a x, z^b y), z = exp(2 pi i / N), scales each of
them by a root of unity, which gives the eigenvalue character directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .character import CharacterSpec


class CurveError(ValueError):
    """Malformed or reducible curve data."""


class IncompatibleAutomorphism(ValueError):
    """The map (x, y) -> (z^a x, z^b y) does not preserve the curve."""


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


@dataclass(frozen=True)
class CurveSpec:
    """y^m = x^e0 (x^k - 1)^e1 prod (x - c)^e over the listed rational points c.

    ``e0 = 0`` means 0 is not a root; ``roots = None`` means no (x^k - 1) factor,
    otherwise it is the pair (k, e1).
    """

    m: int
    e0: int = 0
    roots: tuple[int, int] | None = None
    points: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(sorted((Fraction(c), int(e)) for c, e in self.points)))
        if self.m < 2:
            raise CurveError(f"cover degree must be at least 2, got {self.m}")
        exps = self.affine_exponents()
        if not exps:
            raise CurveError("f(x) has no roots")
        for e in exps:
            if e < 1 or e % self.m == 0:
                raise CurveError(f"exponent {e} must be positive and not divisible by m = {self.m}")
        if self.roots is not None and self.roots[0] < 1:
            raise CurveError(f"x^k - 1 needs k >= 1, got {self.roots[0]}")
        cs = [c for c, _ in self.points]
        if len(set(cs)) != len(cs):
            raise CurveError(f"repeated branch point in {cs}")
        for c in cs:
            if c == 0 and self.e0:
                raise CurveError("0 listed both as x^e0 and as a point")
            if self.roots is not None and c != 0 and c**self.roots[0] == 1:
                raise CurveError(f"point {c} is already a root of x^{self.roots[0]} - 1")
        g = self.m
        for e in exps:
            g = gcd(g, e)
        if g != 1:
            raise CurveError(f"gcd(m, exponents) = {g}: the cover is reducible")

    def affine_exponents(self) -> list[int]:
        """Exponent of every affine root of f, with multiplicity over points."""
        out = [self.e0] if self.e0 else []
        if self.roots is not None:
            k, e1 = self.roots
            out += [e1] * k
        out += [e for _, e in self.points]
        return out

    @property
    def degree(self) -> int:
        return sum(self.affine_exponents())

    def __str__(self) -> str:
        return format_model(self)


def genus(curve: CurveSpec) -> int:
    m, d = curve.m, curve.degree
    total = -2 * m + sum(m - gcd(m, e) for e in curve.affine_exponents())
    if d % m:
        total += m - gcd(m, d)
    if total % 2:
        raise CurveError(f"odd ramification total for {curve}")
    return total // 2 + 1


@dataclass(frozen=True)
class Differential:
    """x^alpha (x^k - 1)^gamma1 prod (x - c)^gamma_c dx / y^l."""

    alpha: int
    gamma_roots: int
    gamma_points: tuple[tuple[Fraction, int], ...]
    l: int
    roots_k: int | None = None

    @property
    def x_degree(self) -> int:
        k = self.roots_k or 0
        return self.alpha + k * self.gamma_roots + sum(g for _, g in self.gamma_points)

    def __str__(self) -> str:
        parts = []
        if self.alpha:
            parts.append("x" if self.alpha == 1 else f"x^{self.alpha}")
        if self.gamma_roots:
            f = f"(x^{self.roots_k}-1)"
            parts.append(f if self.gamma_roots == 1 else f"{f}^{self.gamma_roots}")
        for c, g in self.gamma_points:
            if g:
                f = _linear(c)
                parts.append(f if g == 1 else f"{f}^{g}")
        num = "*".join(parts + ["dx"])
        den = "y" if self.l == 1 else f"y^{self.l}"
        return f"{num}/{den}"


def _linear(c: Fraction) -> str:
    if c == 0:
        return "x"
    return f"(x-{c})" if c > 0 else f"(x+{-c})"


def differential_basis(curve: CurveSpec) -> list[Differential]:
    """Monomial basis of H^0(C, K_C), ordered by l and then by x-degree.

    Holomorphy above an affine branch point with exponent e forces the
    vanishing order floor(l e / m) there; at infinity the x-degree is at most
    ceil(l D / m) - 2.
    """
    m, d = curve.m, curve.degree
    k = curve.roots[0] if curve.roots else None
    out: list[Differential] = []
    for l in range(1, m):
        a0 = (l * curve.e0) // m
        g1 = (l * curve.roots[1]) // m if curve.roots else 0
        gp = tuple((c, (l * e) // m) for c, e in curve.points)
        fixed = (k or 0) * g1 + sum(g for _, g in gp)
        top = _ceil_div(l * d, m) - 2 - fixed
        for alpha in range(a0, top + 1):
            out.append(Differential(alpha, g1, gp, l, k))
    return out


@dataclass(frozen=True)
class MonomialAutomorphism:
    """(x, y) -> (z^a x, z^b y) with z = exp(2 pi i / N)."""

    order: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"root order must be positive, got {self.order}")
        object.__setattr__(self, "a", self.a % self.order)
        object.__setattr__(self, "b", self.b % self.order)

    @property
    def exact_order(self) -> int:
        return self.order // gcd(self.order, self.a, self.b)

    def __str__(self) -> str:
        return format_automorphism(self)


def check_compatible(curve: CurveSpec, auto: MonomialAutomorphism) -> None:
    """Raise IncompatibleAutomorphism unless f(z^a x) = z^(m b) f(x)."""
    n, a = auto.order, auto.a
    if curve.roots is not None and (a * curve.roots[0]) % n:
        raise IncompatibleAutomorphism(
            f"x -> z^{a} x does not preserve the roots of x^{curve.roots[0]} - 1 (N = {n})"
        )
    if curve.points and a:
        # z^a c is rational only for z^a = -1, which must swap c and -c
        if (2 * a) % n:
            raise IncompatibleAutomorphism(
                f"x -> z^{a} x moves the rational branch points off the rational line (N = {n})"
            )
        table = dict(curve.points)
        for c, e in curve.points:
            if table.get(-c) != e:
                raise IncompatibleAutomorphism(f"x -> -x does not preserve the branch point {c} with exponent {e}")
    if (a * curve.degree - curve.m * auto.b) % n:
        raise IncompatibleAutomorphism(
            f"f(z^{a} x) = z^{a * curve.degree} f(x) but y^{curve.m} picks up z^{curve.m * auto.b} (N = {n})"
        )


def eigen_exponent(form: Differential, auto: MonomialAutomorphism) -> int:
    return (auto.a * (form.x_degree + 1) - auto.b * form.l) % auto.order


def eigencharacter(curve: CurveSpec, auto: MonomialAutomorphism) -> CharacterSpec:
    """Eigenvalue character of the pullback action on the monomial basis."""
    check_compatible(curve, auto)
    return CharacterSpec.from_exponents(auto.order, (eigen_exponent(w, auto) for w in differential_basis(curve)))


# -- named families ------------------------------------------------------

_EXCLUDED_A = {Fraction(v) for v in (0, 1, -1, 2, -2, 3, -3)}


def four_pair_family(a: Fraction | int) -> CurveSpec:
    """y^2 = (x^2 - 1)(x^2 - 4)(x^2 - 9)(x^2 - a^2): genus 3 with the involution x -> -x."""
    a = Fraction(a)
    if a in _EXCLUDED_A:
        raise CurveError(f"a = {a} makes branch points collide")
    pts = [(c, 1) for v in (1, 2, 3, abs(a)) for c in (Fraction(v), -Fraction(v))]
    return CurveSpec(2, points=tuple(pts))


def odd_quintic_family(a: Fraction | int) -> CurveSpec:
    """y^2 = x(x^2 - 1)(x^2 - a^2): genus 2 with the order-4 map (x, y) -> (-x, i y)."""
    a = Fraction(a)
    if a in _EXCLUDED_A:
        raise CurveError(f"a = {a} makes branch points collide")
    pts = [(c, 1) for v in (1, abs(a)) for c in (Fraction(v), -Fraction(v))]
    return CurveSpec(2, e0=1, points=tuple(pts))


# -- text syntax -----------------------------------------------------------

_NUM = r"\d+(?:/\d+)?"
_FACTOR = re.compile(r"\(([^()]*)\)(?:\^(\d+))?|x(?:\^(\d+))?")
_INNER = re.compile(rf"^x(?:\^(\d+))?([+-])({_NUM})$")


def _square_root(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    return Fraction(n, d) if n * n == q.numerator and d * d == q.denominator else None


def parse_model(text: str) -> CurveSpec:
    """Parse models such as ``"y^3 = x(x^5-1)"``, ``"y^2 = x^8-1"``, ``"y^7 = x(x-1)^2"``.

    Supported factors: x^e, (x - c)^e, (x + c)^e, (x^k - 1)^e and (x^2 - s)^e
    with s a rational square.
    """
    s = text.replace(" ", "").replace("*", "")
    lhs, sep, rhs = s.partition("=")
    mm = re.fullmatch(r"y\^(\d+)", lhs)
    if not sep or not mm or not rhs:
        raise CurveError(f"cannot parse model {text!r}; expected 'y^m = f(x)'")
    m = int(mm.group(1))
    if "(" not in rhs and re.search(r"[+-]", rhs):
        rhs = f"({rhs})"
    e0 = 0
    roots: tuple[int, int] | None = None
    points: dict[Fraction, int] = {}
    pos = 0
    while pos < len(rhs):
        fm = _FACTOR.match(rhs, pos)
        if not fm:
            raise CurveError(f"cannot parse factor at {rhs[pos:]!r} in {text!r}")
        pos = fm.end()
        if fm.group(1) is None:
            e0 += int(fm.group(3) or 1)
            continue
        e = int(fm.group(2) or 1)
        im = _INNER.match(fm.group(1))
        if not im:
            raise CurveError(f"unsupported factor ({fm.group(1)}) in {text!r}")
        k = int(im.group(1) or 1)
        c = Fraction(im.group(3))
        if im.group(2) == "+":
            c = -c
        if k == 1:
            if c == 0:
                e0 += e
            else:
                points[c] = points.get(c, 0) + e
        elif c == 1:
            if roots is not None:
                raise CurveError(f"more than one x^k - 1 factor in {text!r}")
            roots = (k, e)
        elif k == 2 and (r := _square_root(c)) is not None and r:
            for p in (r, -r):
                points[p] = points.get(p, 0) + e
        else:
            raise CurveError(f"unsupported factor ({fm.group(1)}) in {text!r}")
    return CurveSpec(m, e0, roots, tuple(points.items()))


_AUTO = re.compile(r"^\((.+),(.+)\)@N=(\d+)$")
_COMP = re.compile(r"^(-)?(?:z(?:\^(\d+))?)?(x|y)$")


def parse_automorphism(text: str) -> tuple[MonomialAutomorphism, str]:
    """Parse ``"(z^3*x, z*y) @ N=15"``; returns the map and a canonical echo."""
    s = text.replace(" ", "").replace("*", "")
    am = _AUTO.match(s)
    if not am:
        raise ValueError(f"cannot parse automorphism {text!r}; expected e.g. '(z^3*x, z*y) @ N=15'")
    n = int(am.group(3))
    if n < 1:
        raise ValueError(f"N must be positive in {text!r}")
    exps = []
    for comp, var in ((am.group(1), "x"), (am.group(2), "y")):
        cm = _COMP.match(comp)
        if not cm or cm.group(3) != var:
            raise ValueError(f"cannot parse component {comp!r} of {text!r}")
        k = int(cm.group(2)) if cm.group(2) else (1 if "z" in comp else 0)
        if cm.group(1):
            if n % 2:
                raise ValueError(f"-{var} needs an even N, got {n}")
            k += n // 2
        exps.append(k)
    auto = MonomialAutomorphism(n, exps[0], exps[1])
    return auto, format_automorphism(auto)


def format_model(curve: CurveSpec) -> str:
    parts = []
    if curve.e0:
        parts.append("x" if curve.e0 == 1 else f"x^{curve.e0}")
    if curve.roots:
        k, e = curve.roots
        f = "(x-1)" if k == 1 else f"(x^{k}-1)"
        parts.append(f if e == 1 else f"{f}^{e}")
    table = dict(curve.points)
    for c, e in curve.points:
        if c < 0 and table.get(-c) == e:
            continue
        if c > 0 and table.get(-c) == e:
            f = f"(x^2-{c * c})"
        else:
            f = _linear(c)
        parts.append(f if e == 1 else f"{f}^{e}")
    if len(parts) == 1 and parts[0].startswith("(") and parts[0].endswith(")"):
        parts = [parts[0][1:-1]]
    return f"y^{curve.m} = {''.join(parts)}"


def format_automorphism(auto: MonomialAutomorphism) -> str:
    def comp(k: int, var: str) -> str:
        if k == 0:
            return var
        return f"z*{var}" if k == 1 else f"z^{k}*{var}"

    return f"({comp(auto.a, 'x')}, {comp(auto.b, 'y')}) @ N={auto.order}"
