import random

import pytest

from quivercox import linalg
from quivercox.cartan import CartanMatrix, cartan_of
from quivercox.coxeter import (
    apply,
    brute_force_order,
    coxeter_matrix,
    form_identity_check,
    nakayama_check,
    order,
    random_pairs,
)
from quivercox.errors import NotUnimodular
from quivercox.forms import euler_form, quadratic

from conftest import all_fixtures, linear_a
from reference_data import EX01_CARTAN, EX01_COXETER


def test_worked_example_coxeter():
    assert coxeter_matrix(CartanMatrix(EX01_CARTAN), 2).matrix == EX01_COXETER


def test_one_by_one():
    c = CartanMatrix(((1,),))
    assert coxeter_matrix(c, 1).matrix == ((-1,),)
    assert coxeter_matrix(c, 2).matrix == ((1,),)


def test_a2_coxeter():
    phi = coxeter_matrix(cartan_of(linear_a(2)), 1)
    assert phi.matrix == ((0, -1), (1, -1))
    assert apply(phi, (1, 0)) == (0, 1)
    assert apply(phi, (0, 0)) == (0, 0)


def test_worked_example_orbit_step():
    phi = coxeter_matrix(CartanMatrix(EX01_CARTAN), 2)
    assert apply(phi, (1, 1, 2, 2, 2, 4)) == (0, 9, 12, 0, 12, 16)


def test_not_unimodular():
    with pytest.raises(NotUnimodular):
        coxeter_matrix(CartanMatrix(((2, 0), (0, 1))), 1)


def test_order_examples():
    a2 = coxeter_matrix(cartan_of(linear_a(2)), 1)
    res = order(a2)
    assert res.order == 3 and res.cyclotomic_indices == (3,) and res.verified
    assert not order(coxeter_matrix(CartanMatrix(EX01_CARTAN), 2)).finite
    assert order(linalg.identity(4)).order == 1


def test_order_rejects_non_diagonalizable_cyclotomic():
    # charpoly (x-1)^2 but a Jordan block: infinite order
    res = order(((1, 1), (0, 1)))
    assert res.order is None and res.cyclotomic_indices == (1, 1)


def test_order_minimizes_over_divisors():
    # diag(-1, rotation by 120 degrees): lcm of indices 2 and 3 is 6
    m = ((-1, 0, 0), (0, 0, -1), (0, 1, -1))
    assert order(m).order == 6 == brute_force_order(m)
    # x^2+x+1 twice, semisimple: order 3 although the charpoly is a square
    m = ((0, -1, 0, 0), (1, -1, 0, 0), (0, 0, 0, -1), (0, 0, 1, -1))
    assert order(m).order == 3


@pytest.mark.parametrize("m", range(1, 7))
def test_linear_a_coxeter_order(m):
    phi = coxeter_matrix(cartan_of(linear_a(m)), 1)
    assert order(phi).order == m + 1 == brute_force_order(phi.matrix)


def test_exact_order_parity_is_not_forced_by_odd_degree():
    # the exact order for n = 1 is the Coxeter number m + 1, odd for even m;
    # only some even multiple (twice the order) is guaranteed to annihilate
    for m in range(1, 6):
        phi = coxeter_matrix(cartan_of(linear_a(m)), 1)
        d = order(phi).order
        assert d % 2 == (m + 1) % 2
        assert linalg.matrix_power(phi.matrix, 2 * d) == linalg.identity(m)


def test_order_matches_brute_force_on_fixtures(fixtures):
    for spec in fixtures.values():
        c = cartan_of(spec)
        if c.m > 6:
            continue
        phi = coxeter_matrix(c, spec.degree_n)
        assert order(phi).order == brute_force_order(phi.matrix), spec.name


def test_nakayama_and_form_identities(fixtures):
    for spec in fixtures.values():
        c = cartan_of(spec)
        phi = coxeter_matrix(c, spec.degree_n)
        assert nakayama_check(c, phi)
        assert form_identity_check(c, phi, random_pairs(c.m, 100, seed=1))
        assert form_identity_check(c, phi, [((0,) * c.m, (0,) * c.m)])


def test_a2_form_identity_by_hand():
    c = cartan_of(linear_a(2))
    phi = coxeter_matrix(c, 1)
    assert nakayama_check(c, phi)
    assert apply(phi, (1, 1)) == (-1, 0)
    e = euler_form(c)
    assert e.matrix == ((1, -1), (0, 1))
    assert form_identity_check(c, phi, [((1, 0), (0, 1))])


def test_q_is_phi_invariant(fixtures):
    rng = random.Random(3)
    for spec in fixtures.values():
        c = cartan_of(spec)
        phi = coxeter_matrix(c, spec.degree_n)
        e = euler_form(c)
        for _ in range(30):
            x = tuple(rng.randint(-5, 5) for _ in range(c.m))
            assert quadratic(e, apply(phi, x)) == quadratic(e, x)


def test_form_identity_check_detects_wrong_matrix():
    c = cartan_of(linear_a(3))
    phi = coxeter_matrix(c, 1)
    wrong = type(phi)(linalg.identity(3), 1)
    assert not form_identity_check(c, wrong, random_pairs(3, 20, seed=0))
    assert not nakayama_check(c, wrong)
