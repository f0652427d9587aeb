from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from antimatter import Monomial, deglex_compare, monomial_mul, monomial_pow, monomial_proot, potential, potential_at
from antimatter.core import check_prime, format_monomial, smallest_fresh
from antimatter.errors import NonPrimeModulus

from helpers import monomials

half, third = F(1, 2), F(1, 3)
x1 = Monomial.var(1)


def test_monomial_mul_examples():
    assert monomial_mul(Monomial.var(1, half), Monomial.var(1, half)) == x1
    assert monomial_mul(x1, x1) is None
    m = monomial_mul(Monomial.var(1, half), Monomial.var(2, third))
    assert m == Monomial({1: half, 2: third}) and m.potential == F(5, 6)


def test_potential_examples():
    m = Monomial({1: half, 2: third})
    assert potential(Monomial()) == 0
    assert potential(m) == F(5, 6)
    assert potential_at(m, 2) == third
    assert potential_at(m, 7) == 0


@pytest.mark.parametrize("p, m, root", [
    (2, {1: 1}, {1: half}),
    (2, {1: half, 2: half}, {1: F(1, 4), 2: F(1, 4)}),
    (3, {1: third}, {1: F(1, 9)}),
])
def test_proot_examples(p, m, root):
    assert monomial_proot(Monomial(m), p) == Monomial(root)


def test_deglex_examples():
    a = Monomial.var(1, half)
    b = Monomial({1: F(1, 4), 2: half})
    assert deglex_compare(a, b) == -1
    assert deglex_compare(Monomial({1: half, 2: half}), Monomial({1: third, 2: F(2, 3)})) == 1
    assert deglex_compare(b, b) == 0


def test_zero_exponents_are_dropped_and_printing():
    assert Monomial({1: 0, 2: half}) == Monomial.var(2, half)
    assert format_monomial(Monomial({2: 1, 1: half})) == "x1^(1/2)x2"
    assert format_monomial(Monomial()) == "1"


def test_primes_and_fresh_indices():
    assert check_prime(7) == 7
    for bad in (0, 1, 4, 9, -3):
        with pytest.raises(NonPrimeModulus):
            check_prime(bad)
    assert smallest_fresh({1, 3}, 2) == [2, 4]
    assert smallest_fresh(set(), 2) == [1, 2]


@given(monomials(), monomials(), monomials())
def test_mul_associative_commutative(a, b, c):
    assert monomial_mul(a, b) == monomial_mul(b, a)
    ab = monomial_mul(a, b)
    bc = monomial_mul(b, c)
    left = None if ab is None else monomial_mul(ab, c)
    right = None if bc is None else monomial_mul(a, bc)
    assert left == right
    if a.potential + b.potential + c.potential > 1:
        assert left is None


@given(monomials(), monomials())
def test_potential_additive(a, b):
    m = monomial_mul(a, b)
    if m is not None:
        assert m.potential == a.potential + b.potential


@given(monomials(), st.sampled_from([2, 3, 5]))
def test_proot_then_power(m, p):
    r = monomial_proot(m, p)
    assert r.potential * p == m.potential
    if m.potential <= 1:
        assert monomial_pow(r, p) == m
        acc = Monomial()
        for _ in range(p):
            acc = monomial_mul(acc, r)
        assert acc == m


@given(monomials(), monomials(), monomials())
def test_deglex_total_order(a, b, c):
    assert deglex_compare(a, b) == -deglex_compare(b, a)
    assert (deglex_compare(a, b) == 0) == (a == b)
    if deglex_compare(a, b) <= 0 and deglex_compare(b, c) <= 0:
        assert deglex_compare(a, c) <= 0
    ac, bc = monomial_mul(a, c), monomial_mul(b, c)
    if ac is not None and bc is not None:
        assert deglex_compare(ac, bc) == deglex_compare(a, b)
