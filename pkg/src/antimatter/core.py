"""Prime-field scalars and rational-exponent monomials.

A monomial is a product ``x_i^(a_i)`` over finitely many variable indices with
strictly positive rational exponents.  Its *potential* is the exponent sum.
Inside the truncated algebra every monomial of potential > 1 is zero, so
:func:`monomial_mul` returns ``None`` for such products.

Exponents are :class:`fractions.Fraction` throughout; nothing here touches
floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional

import gmpy2

from .errors import NonPrimeModulus, ZeroInput

ONE = Fraction(1)
ZERO = Fraction(0)


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2 or not gmpy2.is_prime(p):
        raise NonPrimeModulus(f"modulus {p!r} is not prime")
    return p


def scalar(value: int, p: int) -> int:
    """Reduce an integer literal into ``[0, p)``."""
    return value % p


def scalar_inverse(value: int, p: int) -> int:
    value %= p
    if value == 0:
        raise ZeroDivisionError("0 has no inverse in F_p")
    return pow(value, -1, p)


def scalar_proot(value: int, p: int) -> int:
    # Frobenius is the identity on F_p, so it is its own inverse.
    return value % p


def as_exponent(value) -> Fraction:
    e = Fraction(value)
    if e < 0:
        raise ValueError(f"negative exponent {e}")
    return e


class Monomial:
    """Immutable monomial; ``exps`` is a sorted tuple of ``(var, Fraction)``."""

    __slots__ = ("exps", "_potential", "_hash")

    def __init__(self, exponents: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[int, Fraction] = {}
        for var, e in items:
            if not isinstance(var, int) or var < 0:
                raise ValueError(f"variable index must be a nonnegative int, got {var!r}")
            acc[var] = acc.get(var, ZERO) + as_exponent(e)
        self.exps = tuple(sorted((v, e) for v, e in acc.items() if e != 0))
        self._potential = sum((e for _, e in self.exps), ZERO)
        self._hash = hash(self.exps)

    @classmethod
    def var(cls, index: int, exponent=1) -> "Monomial":
        return cls({index: exponent})

    @property
    def potential(self) -> Fraction:
        return self._potential

    def exponent(self, var: int) -> Fraction:
        for v, e in self.exps:
            if v == var:
                return e
        return ZERO

    def variables(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.exps)

    def is_one(self) -> bool:
        return not self.exps

    def denominator(self) -> int:
        """lcm of the exponent denominators (1 for the empty monomial)."""
        return math.lcm(1, *(e.denominator for _, e in self.exps))

    def deglex_key(self):
        # Equal potential: compare exponent vectors by ascending variable
        # index; the larger exponent at the first difference ranks higher.
        return (self._potential, tuple((-v, e) for v, e in self.exps))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        return self.deglex_key() < other.deglex_key()

    def __repr__(self):
        return f"Monomial({dict(self.exps)!r})"

    def __str__(self):
        return format_monomial(self)


MONOMIAL_ONE = Monomial()


def format_exponent(e: Fraction) -> str:
    return f"{e.numerator}/{e.denominator}"


def format_monomial(m: Monomial) -> str:
    if m.is_one():
        return "1"
    parts = []
    for v, e in m.exps:
        parts.append(f"x{v}" if e == 1 else f"x{v}^({format_exponent(e)})")
    return "".join(parts)


def potential(m: Monomial) -> Fraction:
    return m.potential


def potential_at(m: Monomial, i: int) -> Fraction:
    return m.exponent(i)


def monomial_mul(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """Product in the truncated algebra; ``None`` stands for zero.

    A product of potential exactly 1 survives.
    """
    if a.potential + b.potential > 1:
        return None
    if not a.exps:
        return b
    if not b.exps:
        return a
    return Monomial(a.exps + b.exps)


def monomial_pow(m: Monomial, k: int) -> Optional[Monomial]:
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return MONOMIAL_ONE
    if m.potential * k > 1:
        return None
    return Monomial((v, e * k) for v, e in m.exps)


def monomial_proot(m: Optional[Monomial], p: int) -> Monomial:
    if m is None:
        raise ZeroInput("p-th root of the zero monomial")
    return Monomial((v, e / p) for v, e in m.exps)


def deglex_compare(a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as ``a`` is below, equal to, or above ``b``."""
    ka, kb = a.deglex_key(), b.deglex_key()
    return (ka > kb) - (ka < kb)


def smallest_fresh(used: Iterable[int], count: int) -> list[int]:
    """The ``count`` smallest positive indices not in ``used``."""
    taken = set(used)
    out: list[int] = []
    i = 1
    while len(out) < count:
        if i not in taken:
            out.append(i)
        i += 1
    return out
