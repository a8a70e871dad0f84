import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacquot.cyclo import (
    Cyclotomic,
    DivisionByZero,
    cyclotomic_polynomial,
    divisors,
    root_of_unity,
    solve_linear,
    solve_rational,
    totient,
    units,
)


def close(a: Cyclotomic, z: complex) -> bool:
    return abs(a.to_complex() - z) < 1e-9


def test_number_theory_helpers():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert units(12) == [1, 5, 7, 11]
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(1) == (-1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 18])
def test_sum_of_roots_of_unity(n):
    total = sum((root_of_unity(n, k) for k in range(n)), Cyclotomic.zero(n))
    assert total.as_rational() == (1 if n == 1 else 0)


def test_identities():
    i = root_of_unity(4, 1)
    assert i * i == -1
    w = root_of_unity(3, 1)
    assert w * w + w + 1 == 0
    # zeta_6 = -zeta_3^2 across different fields
    assert root_of_unity(6, 1) == -(w * w)
    assert root_of_unity(12, 3) == i
    assert (root_of_unity(8, 1) + root_of_unity(8, 7)) ** 2 == 2


def test_conjugate_and_galois():
    z = root_of_unity(7, 2)
    assert z.conjugate() == root_of_unity(7, 5)
    assert z.galois(3) == root_of_unity(7, 6)
    with pytest.raises(ValueError):
        root_of_unity(12, 1).galois(2)


def test_rational_and_integer_views():
    z = root_of_unity(5, 1)
    assert (z + z.conjugate()).as_rational() is None
    assert (z + z**2 + z**3 + z**4).as_integer() == -1
    assert Cyclotomic.rational(Fraction(3, 2), 6).as_integer() is None


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Cyclotomic.rational(1, 5) / Cyclotomic.zero(5)


def test_eichler_style_column():
    z = root_of_unity(6, 1)
    col = z / (1 - z)
    expected = cmath.exp(2j * cmath.pi / 6)
    assert close(col, expected / (1 - expected))
    assert (col + col.conjugate()).as_rational() == Fraction(-1)


def test_solve_rational_kinds():
    assert solve_rational([[1, 1], [1, -1]], [3, 1]).particular == (2, 1)
    fam = solve_rational([[1, 1]], [2])
    assert fam.kind == "family" and len(fam.basis) == 1
    assert solve_rational([[1, 1], [1, 1]], [1, 2]).kind == "infeasible"
    with pytest.raises(ValueError):
        solve_rational([[1, 1]], [1, 2])


def test_solve_linear_mixed_orders():
    i = root_of_unity(4, 1)
    w = root_of_unity(3, 1)
    rhs = i * 2 + w * 3
    sol = solve_linear([i, w], rhs)
    assert sol.kind == "unique" and sol.particular == (2, 3)


elements = st.tuples(
    st.sampled_from([3, 4, 5, 6, 7, 8, 9, 12]),
    st.lists(st.integers(-5, 5), min_size=12, max_size=12),
)


def make(data):
    n, ws = data
    return Cyclotomic.from_exponents(n, ws[:n])


@settings(max_examples=150, deadline=None)
@given(elements, elements, elements)
def test_field_axioms(a, b, c):
    x, y, z = make(a), make(b), make(c)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    assert close(x * y, x.to_complex() * y.to_complex())
    if not x.is_zero():
        assert x * (1 / x) == 1


@settings(max_examples=100, deadline=None)
@given(elements)
def test_conjugation_is_a_field_automorphism(a):
    x = make(a)
    assert close(x.conjugate(), x.to_complex().conjugate())
    assert close(x * x.conjugate(), abs(x.to_complex()) ** 2)
