import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from antimatter import (
    FpPoly,
    RingElem,
    RPoly,
    SubringSpec,
    kill_variables,
    reduce_mod_M,
    rpoly_is_unit,
    survive_witness,
    unit_coeff_degree,
)
from antimatter.core import Monomial
from antimatter.errors import ZeroProduct

from helpers import elem, poly, poly_tuples, subring_elements, x

h = elem(2, x1="1/2")


def test_mul_examples():
    assert poly(h, h) * poly(h) == poly(x(1), x(1))
    yz = poly(x(3), x(2))
    assert (yz * yz).is_zero()
    assert (poly(h, 1) * RPoly.zero(2)).is_zero()


def test_reduce_examples():
    f = RPoly([RingElem.one(3) + x(1, 3), RingElem.scalar(2, 3) + x(2, 3)], 3)
    assert reduce_mod_M(f) == FpPoly([1, 2], 3)
    assert reduce_mod_M(poly(x(1), x(2))).is_zero()
    assert reduce_mod_M(poly(x(1), 0, 1)) == FpPoly([0, 0, 1], 2)


def test_kill_examples():
    g = poly(h, x(1, 2, F(1, 3)))
    padded = g + poly(x(3), x(2))
    assert kill_variables(padded, {2, 3}) == poly(x(3), x(2))
    f = poly(x(1), x(2))
    assert kill_variables(f, {1, 2}) == f
    assert kill_variables(f, set()).is_zero()


def test_unit_coeff_degree_and_units():
    assert unit_coeff_degree(poly(1, x(1), 1, x(2))) == 2
    assert unit_coeff_degree(poly(x(1), x(2))) is None
    assert unit_coeff_degree(RPoly.const(RingElem.scalar(5, 7))) == 0
    assert rpoly_is_unit(poly(1, x(1)))
    assert not rpoly_is_unit(RPoly.t(2))
    assert not rpoly_is_unit(poly(x(1)))


def test_survive_examples():
    w = survive_witness(poly(h, x(1)), poly(0, elem(2, x2="1/2")))
    assert (w.j, w.j_prime, w.degree, w.total_potential) == (0, 1, 1, 1)
    assert w.product_monomial == Monomial({1: F(1, 2), 2: F(1, 2)})
    w = survive_witness(poly(1, x(1)), poly(x(2)))
    assert (w.j, w.j_prime, w.product_monomial) == (0, 0, Monomial.var(2))
    with pytest.raises(ZeroProduct):
        survive_witness(poly(h), poly(elem(2, x1="3/4")))


def test_printing():
    assert str(poly(h, 0, x(1) + 1)) == "(x1^(1/2)) + (x1 + 1)t^2"
    assert str(RPoly.zero(2)) == "0"


@given(poly_tuples(2))
def test_reduce_is_homomorphism(t):
    f, g = t
    assert reduce_mod_M(f * g) == reduce_mod_M(f) * reduce_mod_M(g)
    assert reduce_mod_M(f + g) == reduce_mod_M(f) + reduce_mod_M(g)


@given(poly_tuples(2), st.sets(st.integers(1, 3)))
def test_kill_is_homomorphism(t, keep):
    f, g = t
    assert kill_variables(f * g, keep) == kill_variables(f, keep) * kill_variables(g, keep)
    assert kill_variables(f + g, keep) == kill_variables(f, keep) + kill_variables(g, keep)


@given(poly_tuples(2))
def test_survive_property(t):
    f, g = t
    fg = f * g
    if fg.is_zero():
        return
    w = survive_witness(f, g)
    assert fg[w.degree].coefficient(w.product_monomial) != 0
    assert w.total_potential == f.min_potential() + g.min_potential() == fg.min_potential()


def test_unit_iff_invertible_exhaustive():
    # A(x1, d=2, p=2), degree <= 1, inverses sought up to degree 2
    els = subring_elements(SubringSpec(2, (1,), 2))
    polys = [RPoly(cs, 2) for n in (1, 2) for cs in itertools.product(els, repeat=n)]
    inverses = [RPoly(cs, 2) for n in (1, 2, 3) for cs in itertools.product(els, repeat=n)]
    one = RPoly.t(2, 0)
    for f in polys:
        if f.is_zero():
            continue
        has_inverse = any(f * g == one for g in inverses)
        assert has_inverse == rpoly_is_unit(f), f
