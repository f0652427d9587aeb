"""Shared generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from antimatter import Monomial, RingElem, RPoly, SubringSpec, algebra


def elem(p, const=0, **terms):
    """``elem(2, 1, x1="1/2")`` is ``1 + x1^(1/2)``; keys may join variables: ``x1_x2="1/4,1/2"``."""
    out = []
    for key, exps in terms.items():
        idx = [int(v[1:]) for v in key.split("_")]
        es = [Fraction(e) for e in str(exps).split(",")]
        out.append((Monomial(dict(zip(idx, es))), 1))
    return RingElem(p, const, out)


def x(i, p=2, e=1):
    return RingElem.var(i, p, Fraction(e))


def poly(*coeffs, p=2):
    return RPoly([c if isinstance(c, RingElem) else RingElem.scalar(c, p) for c in coeffs], p)


def subring_elements(spec: SubringSpec):
    alg = algebra(spec)
    return [alg.to_elem(v) for v in alg.elements()]


def random_elem(rng: random.Random, spec: SubringSpec) -> RingElem:
    alg = algebra(spec)
    return alg.to_elem([rng.randrange(spec.p) for _ in range(alg.B)])


def random_poly(rng: random.Random, spec: SubringSpec, max_degree: int) -> RPoly:
    n = rng.randint(0, max_degree)
    return RPoly([random_elem(rng, spec) for _ in range(n + 1)], spec.p)


SPECS = [
    SubringSpec(2, (1,), 2),
    SubringSpec(2, (1, 2), 2),
    SubringSpec(3, (1, 2), 2),
    SubringSpec(2, (1, 2, 3), 3),
    SubringSpec(5, (1,), 4),
]


@st.composite
def elements(draw, specs=SPECS):
    spec = draw(st.sampled_from(specs))
    alg = algebra(spec)
    return alg.to_elem(draw(st.lists(st.integers(0, spec.p - 1), min_size=alg.B, max_size=alg.B)))


@st.composite
def element_tuples(draw, n, specs=SPECS):
    spec = draw(st.sampled_from(specs))
    alg = algebra(spec)
    vec = st.lists(st.integers(0, spec.p - 1), min_size=alg.B, max_size=alg.B)
    return tuple(alg.to_elem(draw(vec)) for _ in range(n))


@st.composite
def poly_tuples(draw, n, max_degree=3, specs=SPECS):
    spec = draw(st.sampled_from(specs))
    alg = algebra(spec)
    vec = st.lists(st.integers(0, spec.p - 1), min_size=alg.B, max_size=alg.B)
    out = []
    for _ in range(n):
        k = draw(st.integers(0, max_degree))
        out.append(RPoly([alg.to_elem(draw(vec)) for _ in range(k + 1)], spec.p))
    return tuple(out)


@st.composite
def monomials(draw, max_vars=3, max_den=6):
    n = draw(st.integers(0, max_vars))
    exps = {}
    for v in draw(st.lists(st.integers(0, 5), min_size=n, max_size=n, unique=True)):
        exps[v] = Fraction(draw(st.integers(1, max_den)), draw(st.integers(1, max_den)))
    return Monomial(exps)
