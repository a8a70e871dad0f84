from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacquot.character import (
    CharacterSpec,
    age,
    conjugate_character,
    format_character,
    galois_orbit,
    is_faithful,
    is_trivial,
    parse_character,
    power,
    reid_failures,
    satisfies_reid,
    trace_h01,
    trace_h1,
)


def chi(n, exps):
    return CharacterSpec.from_exponents(n, exps)


def test_construction_and_validation():
    c = chi(12, [1, 3, 5])
    assert c.genus == 3 and c.counts[1] == c.counts[3] == c.counts[5] == 1
    assert c.exponents == (1, 3, 5)
    with pytest.raises(ValueError):
        CharacterSpec(4, 2, (1, 0, 0))
    with pytest.raises(ValueError):
        CharacterSpec(3, 2, (1, 0, 0))
    with pytest.raises(ValueError):
        CharacterSpec(3, 0, (1, -1, 0))


def test_power_reexpresses_over_the_element_order():
    c = chi(12, [1, 3, 5])
    assert power(c, 2) == chi(6, [1, 3, 5])
    assert power(c, 4) == chi(3, [1, 0, 2])
    assert power(c, 6) == chi(2, [1, 1, 1])
    assert power(c, 3) == chi(4, [1, 3, 1])
    assert is_trivial(power(c, 12))


def test_traces():
    c = chi(4, [0, 1, 2])
    assert trace_h01(c).as_rational() is None
    assert trace_h1(c).as_rational() == 2 + 0 - 2
    assert trace_h1(chi(2, [1, 1])).as_rational() == -4


def test_faithfulness():
    assert is_faithful(chi(6, [2, 3]))
    assert not is_faithful(chi(6, [2, 4]))
    assert not is_faithful(chi(6, [0, 0]))


def test_age_and_reid():
    assert age(chi(7, [1, 2, 4])) == 1
    assert age(chi(7, [1, 2, 3])) == Fraction(6, 7)
    assert reid_failures(chi(7, [1, 2, 3])) == [1]
    assert satisfies_reid(chi(7, [1, 2, 4]))
    assert reid_failures(chi(2, [0, 0, 1])) == [1]


def test_galois_orbit():
    orbit = {c.exponents for c in galois_orbit(chi(9, [1, 2, 4]))}
    assert orbit == {(1, 2, 4), (2, 4, 8), (4, 7, 8), (1, 2, 5), (1, 5, 7), (5, 7, 8)}
    assert {c.exponents for c in galois_orbit(chi(7, [1, 2, 4]))} == {(1, 2, 4), (3, 5, 6)}


def test_conjugate_character():
    assert conjugate_character(chi(7, [1, 2, 4])) == chi(7, [3, 5, 6])


@pytest.mark.parametrize("text", ["N=12:[1,3,5]", "N=2:[0,0,1]", "N=15:[1,2,4,7]"])
def test_parse_round_trip(text):
    c = parse_character(text)
    assert format_character(c) == text
    assert parse_character(format_character(c)) == c


@pytest.mark.parametrize("text", ["12:[1,3]", "N=0:[1]", "N=4:[1,x]", "N=4:[]"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_character(text)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 40).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, n - 1), min_size=1, max_size=12))))
def test_age_plus_conjugate_age(data):
    n, exps = data
    c = chi(n, exps)
    assert age(c) + age(conjugate_character(c)) == sum(1 for a in exps if a)
