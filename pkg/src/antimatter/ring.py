"""Canonical-form arithmetic in the truncated quotient ring.

An element is ``c + sum(e_i * X_i)`` with ``c`` in F_p and distinct monomials
``X_i`` of potential in (0, 1].  Monomials of potential > 1 are dropped at
construction, so two elements are equal in the ring iff they are equal as
Python values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .core import (
    MONOMIAL_ONE,
    Monomial,
    check_prime,
    format_monomial,
    monomial_mul,
    monomial_pow,
    monomial_proot,
    scalar_inverse,
)
from .errors import ModulusMismatch, NotAUnit, NotNilpotent, ZeroInput


class RingElem:
    __slots__ = ("p", "const", "terms", "_hash")

    def __init__(self, p: int, const: int = 0, terms: Mapping[Monomial, int] | Iterable = ()):
        check_prime(p)
        self.p = p
        self.const = const % p
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for m, c in items:
            if m is None or m.potential > 1:
                continue
            if m.is_one():
                self.const = (self.const + c) % p
                continue
            acc[m] = (acc.get(m, 0) + c) % p
        self.terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def scalar(cls, c: int, p: int) -> "RingElem":
        return cls(p, c)

    @classmethod
    def zero(cls, p: int) -> "RingElem":
        return cls(p, 0)

    @classmethod
    def one(cls, p: int) -> "RingElem":
        return cls(p, 1)

    @classmethod
    def mono(cls, m: Monomial, p: int, coeff: int = 1) -> "RingElem":
        return cls(p, 0, [(m, coeff)])

    @classmethod
    def var(cls, index: int, p: int, exponent=1, coeff: int = 1) -> "RingElem":
        return cls.mono(Monomial.var(index, exponent), p, coeff)

    # -- structure ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.const == 0 and not self.terms

    def is_unit(self) -> bool:
        return self.const != 0

    def nilpotent_part(self) -> "RingElem":
        return RingElem(self.p, 0, self.terms)

    def monomials(self) -> list[Monomial]:
        """Nonconstant monomials in descending deglex order."""
        return sorted(self.terms, key=Monomial.deglex_key, reverse=True)

    def variables(self) -> set[int]:
        return {v for m in self.terms for v in m.variables()}

    def denominator(self) -> int:
        return math.lcm(1, *(m.denominator() for m in self.terms))

    def min_potential(self) -> Optional[Fraction]:
        """Minimal potential over all monomials, the constant counting as 0."""
        if self.const:
            return Fraction(0)
        if not self.terms:
            return None
        return min(m.potential for m in self.terms)

    def coefficient(self, m: Monomial) -> int:
        if m.is_one():
            return self.const
        return self.terms.get(m, 0)

    def items(self):
        """``(monomial, coeff)`` pairs including the constant as monomial 1."""
        out = [(MONOMIAL_ONE, self.const)] if self.const else []
        return out + list(self.terms.items())

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "RingElem"):
        if self.p != other.p:
            raise ModulusMismatch(f"mixing p={self.p} and p={other.p}")

    def _coerce(self, other) -> "RingElem":
        if isinstance(other, int):
            return RingElem(self.p, other)
        if isinstance(other, RingElem):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return RingElem(self.p, self.const + other.const, terms)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.p, -self.const, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        acc: dict[Monomial, int] = {}
        for ma, ca in self.items():
            for mb, cb in other.items():
                m = monomial_mul(ma, mb)
                if m is not None:
                    acc[m] = acc.get(m, 0) + ca * cb
        return RingElem(p, 0, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return elem_inverse(self) ** (-k)
        result = RingElem.one(self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.p == other.p and self.const == other.const and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.const, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"RingElem(p={self.p}, {format_elem(self)!r})"

    def __str__(self):
        return format_elem(self)


def format_elem(a: RingElem) -> str:
    """Descending deglex order, constant last; coefficient 1 is omitted."""
    parts = []
    for m in a.monomials():
        c = a.terms[m]
        parts.append(format_monomial(m) if c == 1 else f"{c}*{format_monomial(m)}")
    if a.const or not parts:
        parts.append(str(a.const))
    return " + ".join(parts)


def elem_add(a: RingElem, b: RingElem) -> RingElem:
    return a + b


def elem_mul(a: RingElem, b: RingElem) -> RingElem:
    return a * b


def is_unit(a: RingElem) -> bool:
    return a.is_unit()


def is_nilpotent(a: RingElem) -> bool:
    return not a.is_unit()


def nilpotency_index(a: RingElem) -> int:
    """Smallest k >= 1 with a**k == 0, by iterated multiplication."""
    if a.is_unit():
        raise NotNilpotent(f"{a} is a unit")
    if a.is_zero():
        return 1
    k, power = 1, a
    while not power.is_zero():
        power = power * a
        k += 1
    return k


def elem_inverse(a: RingElem) -> RingElem:
    """Inverse via the finite geometric series in the nilpotent part."""
    if not a.is_unit():
        raise NotAUnit(f"{a} has zero constant term")
    p = a.p
    c_inv = scalar_inverse(a.const, p)
    n = a.nilpotent_part()
    if n.is_zero():
        return RingElem.scalar(c_inv, p)
    q = n * (-c_inv % p)
    total = RingElem.one(p)
    power = RingElem.one(p)
    for _ in range(nilpotency_index(n) - 1):
        power = power * q
        total = total + power
    return total * c_inv


@dataclass(frozen=True)
class NilCertificate:
    min_potential: Fraction
    N: int
    bound_exponent: int
    exact_index: int

    def to_json(self) -> dict:
        return {
            "min_potential": f"{self.min_potential.numerator}/{self.min_potential.denominator}",
            "N": self.N,
            "bound_exponent": self.bound_exponent,
            "exact_index": self.exact_index,
        }


def frobenius_power(a: RingElem, k: int) -> RingElem:
    """``a ** (p**k)`` computed termwise (valid in characteristic p)."""
    p = a.p
    q = p**k
    terms = []
    for m, c in a.terms.items():
        terms.append((monomial_pow(m, q), pow(c, q, p)))
    return RingElem(p, pow(a.const, q, p), terms)


def nil_certificate(a: RingElem) -> NilCertificate:
    if a.is_zero() or a.is_unit():
        raise NotNilpotent(f"{a} is zero or a unit")
    p = a.p
    m = a.min_potential()
    N = 0
    while p**N * m <= 1:
        N += 1
    bound = p**N
    if not frobenius_power(a, N).is_zero():
        raise AssertionError("Frobenius bound failed")  # pragma: no cover
    exact = nilpotency_index(a)
    if not (a**exact).is_zero() or (a ** (exact - 1)).is_zero() or exact > bound:
        raise AssertionError("nilpotency index check failed")  # pragma: no cover
    return NilCertificate(m, N, bound, exact)


def elem_proot(a: RingElem) -> RingElem:
    """Termwise p-th root; ``elem_proot(a) ** p == a`` for every a."""
    if a.is_zero():
        raise ZeroInput("p-th root of 0 is not used")
    p = a.p
    return RingElem(p, a.const, [(monomial_proot(m, p), c) for m, c in a.terms.items()])


def divisor_chain(a: RingElem, k: int) -> list[RingElem]:
    if a.is_zero():
        raise ZeroInput("divisor chain of 0")
    if a.is_unit():
        raise NotNilpotent("divisor chains start at a nonunit")
    if k < 0:
        raise ValueError("k must be nonnegative")
    chain = [a]
    for _ in range(k):
        chain.append(elem_proot(chain[-1]))
    return chain


def min_potential_witness(a: RingElem) -> tuple[Fraction, Monomial]:
    """Minimal potential of ``a`` and the tie-broken monomial attaining it.

    Among minimal-potential monomials the exponent of the lowest-indexed
    variable is maximised, then the next one, and so on; this is the deglex
    maximum of the tied set.  A nonzero constant is the monomial 1.
    """
    if a.is_zero():
        raise ZeroInput("witness of 0")
    if a.const:
        return Fraction(0), MONOMIAL_ONE
    m = a.min_potential()
    tied = [mono for mono in a.terms if mono.potential == m]
    return m, max(tied, key=Monomial.deglex_key)
