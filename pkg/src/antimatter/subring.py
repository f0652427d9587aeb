"""Finite truncated subrings A(vars, d, p).

``A`` is spanned over F_p by the monomials in the given variables whose
exponents are multiples of 1/d and whose potential is at most 1.  Every
concrete polynomial lives in such a subring, which makes exhaustive search
possible.  Basis elements carry an integer *level* = potential * d; the
maximal ideal is spanned by levels 1..d, so its (d+1)-th power vanishes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .core import Monomial, check_prime, monomial_mul, smallest_fresh
from .errors import NotInSubring, ZeroInput
from .ring import RingElem
from .rpoly import RPoly


@dataclass(frozen=True)
class SubringSpec:
    p: int
    variables: tuple[int, ...]
    denominator: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "variables", tuple(sorted(set(self.variables))))
        if self.denominator < 1:
            raise ValueError("denominator must be positive")

    @property
    def basis_size(self) -> int:
        n, d = len(self.variables), self.denominator
        return math.comb(n + d, n)

    def size(self) -> int:
        return self.p**self.basis_size

    def refined(self, factor: int) -> "SubringSpec":
        return SubringSpec(self.p, self.variables, self.denominator * factor)

    def with_variables(self, extra: Iterable[int]) -> "SubringSpec":
        return SubringSpec(self.p, tuple(self.variables) + tuple(extra), self.denominator)

    def contains_monomial(self, m: Monomial) -> bool:
        return set(m.variables()) <= set(self.variables) and self.denominator % m.denominator() == 0

    def contains(self, a: RingElem) -> bool:
        return a.p == self.p and all(self.contains_monomial(m) for m in a.terms)

    def contains_poly(self, f: RPoly) -> bool:
        return all(self.contains(c) for c in f.coeffs) and f.p == self.p

    def to_json(self) -> dict:
        return {"p": self.p, "variables": list(self.variables), "denominator": self.denominator}


def ambient_subring(f: RPoly, extra_vars: int = 0, refine: int = 1) -> SubringSpec:
    """Smallest spec holding ``f``, plus ``extra_vars`` fresh variables.

    The denominator is the lcm of the exponent denominators of ``f`` times
    ``refine``.  Fresh variables are the smallest positive unused indices.
    """
    if f.is_zero():
        raise ZeroInput("ambient subring of the zero polynomial")
    used = f.variables()
    fresh = smallest_fresh(used, extra_vars)
    return SubringSpec(f.p, tuple(sorted(used)) + tuple(fresh), f.denominator() * refine)


class FiniteAlgebra:
    """Basis, levels and multiplication table of a :class:`SubringSpec`.

    Elements are tuples of length ``B`` over ``range(p)``; index 0 is the
    constant 1.  Basis order is ascending deglex, so levels are
    nondecreasing along the basis.
    """

    def __init__(self, spec: SubringSpec):
        self.spec = spec
        self.p = spec.p
        d = spec.denominator
        n = len(spec.variables)
        monos = []
        for ks in itertools.product(range(d + 1), repeat=n):
            if sum(ks) <= d:
                monos.append(Monomial({v: Fraction(k, d) for v, k in zip(spec.variables, ks) if k}))
        monos.sort(key=Monomial.deglex_key)
        self.basis: list[Monomial] = monos
        self.index = {m: i for i, m in enumerate(monos)}
        self.B = len(monos)
        self.level = [int(m.potential * d) for m in monos]
        self.by_level = [[i for i in range(self.B) if self.level[i] == k] for k in range(d + 1)]
        self.mult = [[-1] * self.B for _ in range(self.B)]
        for i, a in enumerate(monos):
            for j, b in enumerate(monos):
                m = monomial_mul(a, b)
                if m is not None:
                    self.mult[i][j] = self.index[m]

    @property
    def d(self) -> int:
        return self.spec.denominator

    def to_vec(self, a: RingElem) -> tuple[int, ...]:
        v = [0] * self.B
        for m, c in a.items():
            i = self.index.get(m)
            if i is None:
                raise NotInSubring(f"{m} is not in {self.spec}")
            v[i] = c
        return tuple(v)

    def to_elem(self, v: Sequence[int]) -> RingElem:
        return RingElem(self.p, 0, [(self.basis[i], c) for i, c in enumerate(v) if c])

    def poly_to_vecs(self, f: RPoly) -> list[tuple[int, ...]]:
        return [self.to_vec(c) for c in f.coeffs]

    def vecs_to_poly(self, vs: Sequence[Sequence[int]]) -> RPoly:
        return RPoly([self.to_elem(v) for v in vs], self.p)

    def mul(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.B
        for i, ca in enumerate(a):
            if not ca:
                continue
            row = self.mult[i]
            for j, cb in enumerate(b):
                if cb:
                    k = row[j]
                    if k >= 0:
                        out[k] += ca * cb
        p = self.p
        return tuple(x % p for x in out)

    def poly_mul(self, f: Sequence[Sequence[int]], g: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
        if not f or not g:
            return []
        out = [[0] * self.B for _ in range(len(f) + len(g) - 1)]
        for i, a in enumerate(f):
            for j, b in enumerate(g):
                prod = self.mul(a, b)
                acc = out[i + j]
                for k, c in enumerate(prod):
                    if c:
                        acc[k] += c
        p = self.p
        res = [tuple(x % p for x in row) for row in out]
        while res and not any(res[-1]):
            res.pop()
        return res

    def valuation(self, v: Sequence[int]) -> int | None:
        """Lowest level carrying a nonzero coordinate (None for 0)."""
        levels = [self.level[i] for i, c in enumerate(v) if c]
        return min(levels) if levels else None

    def elements(self):
        """Every element in canonical (lexicographic coordinate) order."""
        for v in itertools.product(range(self.p), repeat=self.B):
            yield v


@lru_cache(maxsize=64)
def algebra(spec: SubringSpec) -> FiniteAlgebra:
    return FiniteAlgebra(spec)
