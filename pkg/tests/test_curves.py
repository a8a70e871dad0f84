import random
from fractions import Fraction
from math import gcd

import pytest

from jacquot.character import CharacterSpec, galois_orbit, is_faithful
from jacquot.curves import (
    CurveError,
    CurveSpec,
    IncompatibleAutomorphism,
    MonomialAutomorphism,
    differential_basis,
    eigencharacter,
    format_automorphism,
    format_model,
    four_pair_family,
    genus,
    odd_quintic_family,
    parse_automorphism,
    parse_model,
)
from jacquot.engine import curve_character, known_curve_table
from jacquot.lefschetz import build_fix_profile


def holomorphic(curve: CurveSpec, w) -> bool:
    """Local valuation check of x^alpha ... dx / y^l at every branch point and at infinity."""
    m, d = curve.m, curve.degree

    def ok(gamma: int, e: int) -> bool:
        r = m // gcd(m, e)
        return gamma * r + r - 1 - Fraction(w.l * r * e, m) >= 0

    if curve.e0 and not ok(w.alpha, curve.e0):
        return False
    if curve.roots and not ok(w.gamma_roots, curve.roots[1]):
        return False
    gammas = dict(w.gamma_points)
    if any(not ok(gammas[c], e) for c, e in curve.points):
        return False
    r = m // gcd(m, d)
    return -r * w.x_degree - r - 1 + Fraction(w.l * r * d, m) >= 0


@pytest.mark.parametrize(
    "model, g",
    [
        ("y^2 = x(x^9-1)", 4),
        ("y^3 = x(x^5-1)", 4),
        ("y^7 = x(x-1)^2", 3),
        ("y^2 = x^8-1", 3),
        ("y^2 = x(x^8-1)", 4),
        ("y^3 = x(x^3-1)", 3),
        ("y^4 = x(x^3-1)", 3),
    ],
)
def test_genus(model, g):
    assert genus(parse_model(model)) == g


@pytest.mark.parametrize(
    "model, basis",
    [
        ("y^2 = x(x^9-1)", ["dx/y", "x*dx/y", "x^2*dx/y", "x^3*dx/y"]),
        ("y^3 = x(x^5-1)", ["dx/y", "dx/y^2", "x*dx/y^2", "x^2*dx/y^2"]),
        ("y^2 = x^8-1", ["dx/y", "x*dx/y", "x^2*dx/y"]),
    ],
)
def test_basis(model, basis):
    assert sorted(str(w) for w in differential_basis(parse_model(model))) == sorted(basis)


@pytest.mark.parametrize(
    "model, auto, exponents",
    [
        ("y^3 = x(x^5-1)", "(z^3*x, z*y) @ N=15", (1, 2, 4, 7)),
        ("y^2 = x(x^9-1)", "(z^2*x, z*y) @ N=18", (1, 3, 5, 7)),
        ("y^2 = x^8-1", "(z*x, y) @ N=8", (1, 2, 3)),
        ("y^4 = x(x^3-1)", "(z^4*x, z*y) @ N=12", (1, 2, 5)),
    ],
)
def test_eigencharacter(model, auto, exponents):
    chi = eigencharacter(parse_model(model), parse_automorphism(auto)[0])
    assert chi.exponents == exponents


def test_klein_order_seven_model_up_to_relabeling():
    chi = eigencharacter(parse_model("y^7 = x(x-1)^2"), parse_automorphism("(x, z*y) @ N=7")[0])
    assert CharacterSpec.from_exponents(7, (1, 2, 4)) in galois_orbit(chi)


def test_known_curves_reproduce_their_exponents():
    for kc in known_curve_table():
        if kc.exists:
            chi = curve_character(kc)
            assert chi.exponents == kc.exponents
            assert is_faithful(chi)
            assert build_fix_profile(chi) is not None


def _random_curve(rng: random.Random) -> CurveSpec | None:
    m = rng.randint(2, 9)
    npts = rng.randint(1, 5)
    cs = rng.sample(range(-12, 13), npts)
    pts = tuple((Fraction(c, rng.randint(1, 3)), rng.randint(1, m - 1)) for c in cs)
    if len({c for c, _ in pts}) != len(pts):
        return None
    try:
        return CurveSpec(m, points=pts)
    except CurveError:
        return None


def test_random_models_have_genus_many_holomorphic_forms():
    rng = random.Random(7)
    tested = 0
    while tested < 400:
        curve = _random_curve(rng)
        if curve is None:
            continue
        try:
            g = genus(curve)
        except CurveError:
            continue
        basis = differential_basis(curve)
        assert len(basis) == g, curve
        assert all(holomorphic(curve, w) for w in basis), curve
        assert len({(w.l, w.alpha) for w in basis}) == len(basis)
        tested += 1


def test_genus_three_involution_family():
    for a in (Fraction(5), Fraction(1, 2), Fraction(-7, 3), Fraction(4)):
        curve = four_pair_family(a)
        assert genus(curve) == 3
        chi = eigencharacter(curve, parse_automorphism("(-x, -y) @ N=2")[0])
        assert chi.exponents == (0, 0, 1)


def test_genus_two_order_four_family():
    for a in (Fraction(5), Fraction(1, 2), Fraction(7, 3)):
        curve = odd_quintic_family(a)
        assert genus(curve) == 2
        chi = eigencharacter(curve, parse_automorphism("(-x, z*y) @ N=4")[0])
        assert chi.exponents == (1, 3)


@pytest.mark.parametrize("a", [0, 1, -1, 2, -2, 3, -3])
def test_family_guard(a):
    with pytest.raises(CurveError):
        four_pair_family(a)
    with pytest.raises(CurveError):
        odd_quintic_family(a)


@pytest.mark.parametrize(
    "text",
    ["y^2 x^5", "y = x^3-1", "y^2 = ", "y^2 = (x^3+2)", "y^2 = (x-1)(x-1)", "y^4 = x^2(x^2-1)^2", "y^2 = x^2"],
)
def test_parse_model_errors(text):
    with pytest.raises(CurveError):
        parse_model(text)


@pytest.mark.parametrize("text", ["(z*x, z*y)", "(z^3*x, z*y) @ N=", "(z*y, z*x) @ N=4", "(-x, y) @ N=3"])
def test_parse_automorphism_errors(text):
    with pytest.raises(ValueError):
        parse_automorphism(text)


def test_round_trips():
    for model in ("y^3 = x(x^5-1)", "y^2 = x^8-1", "y^7 = x(x-1)^2", "y^2 = x(x^2-1)(x^2-4)"):
        assert format_model(parse_model(model)) == model
    auto, text = parse_automorphism("(z^3 * x, z * y) @ N=15")
    assert text == "(z^3*x, z*y) @ N=15" == format_automorphism(auto)
    assert parse_automorphism("(-x, z*y) @ N=4")[0] == MonomialAutomorphism(4, 2, 1)


def test_incompatible_automorphisms():
    with pytest.raises(IncompatibleAutomorphism):
        eigencharacter(parse_model("y^3 = x(x^3-1)"), parse_automorphism("(z^3*x, z*y) @ N=12")[0])
    with pytest.raises(IncompatibleAutomorphism):
        eigencharacter(parse_model("y^2 = x(x^9-1)"), parse_automorphism("(z^2*x, z^2*y) @ N=18")[0])
    with pytest.raises(IncompatibleAutomorphism):
        eigencharacter(parse_model("y^2 = (x-1)(x-2)(x-3)"), parse_automorphism("(-x, y) @ N=2")[0])


def test_exact_order():
    assert MonomialAutomorphism(12, 4, 2).exact_order == 6
    assert MonomialAutomorphism(15, 3, 1).exact_order == 15
