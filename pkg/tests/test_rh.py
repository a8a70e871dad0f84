import pytest

from jacquot.character import CharacterSpec, galois_orbit
from jacquot.eichler import e_tilde_all_powers, e_tilde_for_power
from jacquot.engine import enumerate_candidates, order_bound
from jacquot.lefschetz import Reason, is_prime
from jacquot.rh import (
    AdmissibleSystem,
    admissible_system,
    cy_generators,
    element_order,
    expand_choice,
    r_star,
    rh_check,
    system_for_choice,
    transport,
)

from oracles import order3_inequalities


def chi(n, exps):
    return CharacterSpec.from_exponents(n, exps)


def sweep(max_genus=4):
    for g in range(2, max_genus + 1):
        for n in range(2, order_bound(g) + 1):
            yield from enumerate_candidates(g, n)


def test_element_order():
    assert [element_order(12, s) for s in range(12)] == [1, 12, 6, 4, 3, 12, 2, 12, 3, 4, 6, 12]


@pytest.mark.parametrize(
    "n, s, expected",
    [(6, 2, [(6, 1)]), (4, 2, [(4, 1)]), (7, 1, []), (7, 3, []), (12, 6, [(4, 3), (6, 2), (12, 1)])],
)
def test_cy_generators(n, s, expected):
    assert cy_generators(n, s) == expected


def test_cy_generators_pick_largest_and_identity():
    assert cy_generators(12, 6, pick="largest") == [(4, 9), (6, 10), (12, 11)]
    with pytest.raises(ValueError):
        cy_generators(6, 0)


def test_transport():
    assert transport(12, 1, {1: 1, 5: 2, 7: 3, 11: 4}, 5) == {1: 2, 5: 1, 7: 4, 11: 3}


def test_expand_choice_is_consistent_with_transport():
    c = chi(12, [1, 3, 5])
    choice = {e: e_tilde_for_power(c, 12 // e).solutions[0] for e in (2, 3, 4, 6, 12)}
    r = expand_choice(12, choice)
    assert r[5] == transport(12, 1, r[1], 5)
    assert r[6] == {1: 8}
    assert r[4] == {1: 1, 2: 1} and r[8] == {1: 1, 2: 1}


def test_sextic_rejection():
    c = chi(6, [4, 4, 5])
    system = system_for_choice(c)
    assert system.r_star[2] == {1: 4, 2: -2}
    res = rh_check(c)
    assert not res.realizable and res.rejection.reason is Reason.RH_TILDE and res.rejection.power == 2


def test_order_twelve_system():
    c = chi(12, [1, 3, 5])
    res = rh_check(c)
    assert res.realizable
    system = admissible_system(c)
    assert system.r_star[6] == {1: 6}
    assert system.r_star[4] == {1: 0, 2: 0}
    assert system.r_star[3] == {1: 0, 3: 0}
    assert system.r_star[2] == {1: 0, 5: 0}
    assert system.l[6] == {1: 1}
    assert system.admissible and system.offending() is None


def test_r_star_needs_larger_elements_first():
    c = chi(12, [1, 3, 5])
    full = system_for_choice(c)
    empty = AdmissibleSystem(12, r=full.r)
    with pytest.raises(RuntimeError):
        r_star(empty, 6, 1)


def test_examples():
    assert rh_check(chi(2, [0, 0, 1])).realizable
    assert not rh_check(chi(6, [5, 4, 4])).realizable
    assert rh_check(chi(12, [1, 3, 5])).realizable
    with pytest.raises(ValueError):
        rh_check(chi(6, [2, 4]))
    with pytest.raises(ValueError):
        rh_check(chi(5, [0, 0]))


def test_generator_choice_does_not_matter():
    for c in sweep(4):
        if is_prime(c.order) or e_tilde_all_powers(c) is not None:
            continue
        assert rh_check(c).realizable == rh_check(c, pick="largest").realizable, c


def test_galois_invariance():
    for c in sweep(4):
        verdict = rh_check(c).realizable
        for other in galois_orbit(c):
            assert rh_check(other).realizable == verdict, (c, other)


def test_prime_order_shortcut_agrees_with_full_search():
    for c in sweep(4):
        if is_prime(c.order):
            assert rh_check(c, prime_shortcut=False).realizable == (e_tilde_all_powers(c) is None), c


def test_order_three_inequalities():
    for g in range(2, 6):
        for c in enumerate_candidates(g, 3):
            assert rh_check(c).realizable == order3_inequalities(*c.counts), c
