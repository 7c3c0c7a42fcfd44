import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from symsextic.exactnum import (CyclotomicElement, OrderMismatchError, cyclo_arith, cyclotomic_polynomial,
                                euler_phi, evaluate_cyclotomic_polynomial, is_rational, multiplicative_order,
                                root_of_unity)

small = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))


def elements(order):
    return st.lists(small, min_size=euler_phi(order), max_size=euler_phi(order)).map(
        lambda cs: CyclotomicElement(order, cs))


def test_root_of_unity_examples():
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(6, 3) == -1
    z = root_of_unity(6, 1)
    assert root_of_unity(6, 2) == z - 1
    assert str(root_of_unity(6, 2)) == "-1 + z6"


@pytest.mark.parametrize("n,k,order", [(6, 1, 6), (6, 2, 3), (6, 3, 2), (12, 4, 3), (12, 6, 2), (12, 5, 12)])
def test_root_of_unity_order(n, k, order):
    assert multiplicative_order(root_of_unity(n, k)) == order


def test_cyclo_arith_examples():
    z = root_of_unity(6, 1)
    assert cyclo_arith(z, root_of_unity(6, 5), "mul") == 1
    assert cyclo_arith(z, z, "sub") == 0
    assert cyclo_arith(CyclotomicElement.one(6), z, "div") == root_of_unity(6, 5)


def test_is_rational():
    assert is_rational(root_of_unity(6, 3)) == -1
    assert is_rational(root_of_unity(6, 1)) is None
    assert is_rational(root_of_unity(6, 1) + root_of_unity(6, 5)) == 1


def test_orders_do_not_mix():
    with pytest.raises(OrderMismatchError):
        root_of_unity(6, 1) + root_of_unity(12, 1)
    with pytest.raises(OrderMismatchError):
        cyclo_arith(root_of_unity(6, 1), root_of_unity(12, 2), "add")
    assert root_of_unity(6, 1).embed(12) == root_of_unity(12, 2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        root_of_unity(6, 1) / CyclotomicElement.zero(6)
    with pytest.raises(ZeroDivisionError):
        CyclotomicElement.zero(12).inverse()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 12])
def test_root_is_a_zero_of_its_cyclotomic_polynomial(n):
    assert evaluate_cyclotomic_polynomial(n, root_of_unity(n, 1)) == 0


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("n", [6, 12])
def test_conjugate_pairs_multiply_to_one(n):
    for k in range(n):
        assert root_of_unity(n, k) * root_of_unity(n, n - k) == 1


def test_rational_hash_agrees_with_fraction():
    c = CyclotomicElement.constant(12, Fraction(3, 4))
    assert c == Fraction(3, 4) and hash(c) == hash(Fraction(3, 4))


def _random_element(rng, order):
    return CyclotomicElement(order, [Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(euler_phi(order))])


@pytest.mark.parametrize("order", [6, 12])
def test_field_axioms_on_random_samples(order):
    rng = random.Random(order)
    for _ in range(1000):
        a, b, c = (_random_element(rng, order) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == 1
            assert (b / a) * a == b


@settings(max_examples=200, deadline=None)
@given(elements(6), elements(6))
def test_inverse_and_division(a, b):
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b
    assert a - a == 0


@settings(max_examples=200, deadline=None)
@given(elements(12))
def test_complex_embedding_is_multiplicative(a):
    b = a * root_of_unity(12, 5) + 1
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-6 * (1 + abs(a.to_complex() * b.to_complex()))
