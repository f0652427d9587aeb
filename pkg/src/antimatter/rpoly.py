"""Polynomials in t over the truncated ring, and the maps out of R[t].

Coefficients are dense, low degree first, trailing zeros trimmed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import Monomial, check_prime, monomial_mul
from .errors import ModulusMismatch, ZeroInput, ZeroProduct
from .fp import FpPoly
from .ring import RingElem, min_potential_witness


class RPoly:
    __slots__ = ("p", "coeffs", "_hash")

    def __init__(self, coeffs: Sequence[RingElem], p: Optional[int] = None):
        coeffs = list(coeffs)
        if p is None:
            if not coeffs:
                raise ValueError("p is required for the zero polynomial")
            p = coeffs[0].p
        check_prime(p)
        for c in coeffs:
            if c.p != p:
                raise ModulusMismatch(f"coefficient over p={c.p} in polynomial over p={p}")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.p = p
        self.coeffs = tuple(coeffs)
        self._hash = None

    @classmethod
    def zero(cls, p: int) -> "RPoly":
        return cls((), p)

    @classmethod
    def const(cls, a: RingElem) -> "RPoly":
        return cls((a,), a.p)

    @classmethod
    def t(cls, p: int, k: int = 1) -> "RPoly":
        return cls([RingElem.zero(p)] * k + [RingElem.one(p)], p)

    @property
    def degree(self) -> Optional[int]:
        """Degree in t; ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> RingElem:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RingElem.zero(self.p)

    def __len__(self):
        return len(self.coeffs)

    def variables(self) -> set[int]:
        out: set[int] = set()
        for c in self.coeffs:
            out |= c.variables()
        return out

    def denominator(self) -> int:
        return math.lcm(1, *(c.denominator() for c in self.coeffs))

    def in_M(self) -> bool:
        """True iff every coefficient lies in the maximal ideal."""
        return all(not c.is_unit() for c in self.coeffs)

    def min_potential(self) -> Optional[Fraction]:
        pots = [c.min_potential() for c in self.coeffs if not c.is_zero()]
        return min(pots) if pots else None

    def _other(self, other) -> "RPoly":
        if isinstance(other, RPoly):
            if other.p != self.p:
                raise ModulusMismatch(f"mixing p={self.p} and p={other.p}")
            return other
        if isinstance(other, RingElem):
            return RPoly.const(other)
        if isinstance(other, int):
            return RPoly.const(RingElem.scalar(other, self.p))
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return RPoly([self[i] + other[i] for i in range(n)], self.p)

    __radd__ = __add__

    def __neg__(self):
        return RPoly([-c for c in self.coeffs], self.p)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RPoly.zero(self.p)
        out = [RingElem.zero(self.p)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return RPoly(out, self.p)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = RPoly.t(self.p, 0)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, RPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"RPoly(p={self.p}, {format_rpoly(self)!r})"

    def __str__(self):
        return format_rpoly(self)


def format_rpoly(f: RPoly) -> str:
    """``(c0) + (c1)t + (c2)t^2``, skipping zero coefficients."""
    if f.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(f.coeffs):
        if c.is_zero():
            continue
        tpart = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        parts.append(f"({c}){tpart}")
    return " + ".join(parts)


def rpoly_add(f: RPoly, g: RPoly) -> RPoly:
    return f + g


def rpoly_mul(f: RPoly, g: RPoly) -> RPoly:
    return f * g


def reduce_mod_M(f: RPoly) -> FpPoly:
    """Image in F_p[t]: keep the constant term of every coefficient."""
    return FpPoly([c.const for c in f.coeffs], f.p)


def lift_fp(fbar: FpPoly) -> RPoly:
    """F_p[t] -> R[t] as polynomials with constant coefficients."""
    p = fbar.p
    return RPoly([RingElem.scalar(c, p) for c in fbar.coeffs], p)


def kill_elem(a: RingElem, keep: Iterable[int]) -> RingElem:
    keep = set(keep)
    return RingElem(a.p, a.const, {m: c for m, c in a.terms.items() if set(m.variables()) <= keep})


def kill_variables(f: RPoly, keep: Iterable[int]) -> RPoly:
    """Image modulo the ideal generated by all variables outside ``keep``."""
    keep = set(keep)
    return RPoly([kill_elem(c, keep) for c in f.coeffs], f.p)


def unit_coeff_degree(f: RPoly) -> Optional[int]:
    """Largest i with f_i a unit, or ``None`` when f lies in M[t]."""
    for i in range(len(f) - 1, -1, -1):
        if f.coeffs[i].is_unit():
            return i
    return None


def rpoly_is_unit(f: RPoly) -> bool:
    if f.is_zero() or not f.coeffs[0].is_unit():
        return False
    return all(not c.is_unit() for c in f.coeffs[1:])


@dataclass(frozen=True)
class SurviveWitness:
    j: int
    j_prime: int
    z1: Monomial
    z2: Monomial
    product_monomial: Monomial
    total_potential: Fraction
    coefficient: int

    @property
    def degree(self) -> int:
        return self.j + self.j_prime


def _min_potential_degree(f: RPoly) -> tuple[Fraction, int]:
    m = f.min_potential()
    if m is None:
        raise ZeroInput("witness of the zero polynomial")
    j = max(i for i, c in enumerate(f.coeffs) if not c.is_zero() and c.min_potential() == m)
    return m, j


def survive_witness(f: RPoly, g: RPoly) -> SurviveWitness:
    """The surviving product monomial of the two tie-broken minimal monomials.

    ``j`` is the largest degree of ``f`` whose coefficient attains the global
    minimal potential of ``f`` (likewise ``j'`` for ``g``); inside those
    coefficients the minimal monomials are tie-broken by
    :func:`min_potential_witness`.  Their product appears in ``f*g`` at degree
    ``j + j'`` with a nonzero coefficient.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroProduct("f*g == 0")
    mf, j = _min_potential_degree(f)
    mg, jp = _min_potential_degree(g)
    if mf + mg > 1:
        raise ZeroProduct(f"minimal potentials {mf} + {mg} exceed 1, so f*g == 0")
    _, z1 = min_potential_witness(f.coeffs[j])
    _, z2 = min_potential_witness(g.coeffs[jp])
    prod = monomial_mul(z1, z2)
    fg = f * g
    coeff = fg[j + jp].coefficient(prod)
    if coeff == 0:
        raise AssertionError(f"witness {prod} did not survive in degree {j + jp}")  # pragma: no cover
    return SurviveWitness(j, jp, z1, z2, prod, mf + mg, coeff)
