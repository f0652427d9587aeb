"""Univariate polynomials over F_p.

Coefficients are stored low degree first, trailing zeros trimmed; the zero
polynomial is the empty tuple and has degree -1.

Factorization defaults to trial division by monic polynomials in increasing
degree.  At the sizes used here (degree <= 12, p <= 7) this is exhaustive
and obviously correct, which is what the atom certificates lean on.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .core import check_prime, scalar_inverse
from .errors import BothZero, DegreeZero, ModulusMismatch


class FpPoly:
    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: Sequence[int], p: int):
        check_prime(p)
        c = [x % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls((), p)

    @classmethod
    def constant(cls, c: int, p: int) -> "FpPoly":
        return cls((c,), p)

    @classmethod
    def t(cls, p: int, k: int = 1) -> "FpPoly":
        return cls((0,) * k + (1,), p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lc() == 1

    def monic(self) -> "FpPoly":
        if not self.coeffs:
            return self
        inv = scalar_inverse(self.lc(), self.p)
        return FpPoly([c * inv for c in self.coeffs], self.p)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _other(self, other) -> "FpPoly":
        if isinstance(other, int):
            return FpPoly((other,), self.p)
        if other.p != self.p:
            raise ModulusMismatch(f"mixing p={self.p} and p={other.p}")
        return other

    def __add__(self, other):
        other = self._other(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly([self[i] + other[i] for i in range(n)], self.p)

    __radd__ = __add__

    def __neg__(self):
        return FpPoly([-c for c in self.coeffs], self.p)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if not self.coeffs or not other.coeffs:
            return FpPoly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(out, self.p)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = FpPoly.constant(1, self.p)
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        other = self._other(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        rem = list(self.coeffs)
        q = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        inv = scalar_inverse(other.lc(), p)
        dd = other.degree
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] % p
            if c == 0:
                continue
            f = c * inv % p
            q[k - dd] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dd + j] -= f * b
        return FpPoly(q, p), FpPoly(rem[:dd] if dd > 0 else [], p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "FpPoly") -> bool:
        return (other % self).is_zero()

    def __eq__(self, other):
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"FpPoly({list(self.coeffs)}, p={self.p})"

    def __str__(self):
        return format_fp(self)


def format_fp(f: FpPoly) -> str:
    """Descending degree, no spaces: ``t^2+2t+1``."""
    if f.is_zero():
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
            continue
        mono = "t" if k == 1 else f"t^{k}"
        parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts)


def fp_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic gcd by Euclid."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def fp_bezout(a: FpPoly, b: FpPoly) -> tuple[FpPoly, FpPoly]:
    """``(u, v)`` with ``u*a + v*b == fp_gcd(a, b)``."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    p = a.p
    r0, r1 = a, b
    s0, s1 = FpPoly.constant(1, p), FpPoly.zero(p)
    t0, t1 = FpPoly.zero(p), FpPoly.constant(1, p)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = scalar_inverse(r0.lc(), p)
    u, v = s0 * inv, t0 * inv
    assert u * a + v * b == r0.monic()
    return u, v


def monic_polys(p: int, degree: int) -> Iterator[FpPoly]:
    """All monic polynomials of exactly ``degree``, in lexicographic order."""
    for tail in itertools.product(range(p), repeat=degree):
        yield FpPoly(tail[::-1] + (1,), p)


def polys_up_to(p: int, degree: int) -> Iterator[FpPoly]:
    """Every polynomial of degree <= ``degree`` (including 0)."""
    for coeffs in itertools.product(range(p), repeat=degree + 1):
        yield FpPoly(coeffs, p)


def fp_factor(f: FpPoly, method: str = "trial") -> tuple[int, list[tuple[FpPoly, int]]]:
    """Factor ``f`` as ``unit * prod(q**e)`` with monic irreducible ``q``.

    Returns ``(unit, [(q, e), ...])`` ordered by degree then coefficients.
    ``method="ddf"`` splits by distinct degree first and then trial-divides
    each equal-degree block.
    """
    if f.degree < 1:
        raise DegreeZero(f"cannot factor {f}")
    unit = f.lc()
    g = f.monic()
    if method == "trial":
        factors = _trial_division(g)
    elif method == "ddf":
        factors = []
        sqfree = squarefree_decomposition(g)
        for part, mult in sqfree:
            for block, k in distinct_degree(part):
                for q, e in _trial_division(block, min_degree=k):
                    factors.append((q, e * mult))
        factors.sort(key=lambda qe: (qe[0].degree, qe[0].coeffs[::-1]))
    else:
        raise ValueError(f"unknown method {method!r}")
    return unit, factors


def _trial_division(g: FpPoly, min_degree: int = 1) -> list[tuple[FpPoly, int]]:
    p = g.p
    out: list[tuple[FpPoly, int]] = []
    k = min_degree
    while g.degree >= 2 * k:
        for q in monic_polys(p, k):
            e = 0
            while True:
                quo, rem = divmod(g, q)
                if not rem.is_zero():
                    break
                g, e = quo, e + 1
            if e:
                out.append((q, e))
        k += 1
    if g.degree >= 1:
        out.append((g, 1))
    return out


def derivative(f: FpPoly) -> FpPoly:
    return FpPoly([i * c for i, c in enumerate(f.coeffs)][1:], f.p)


def _pth_root(f: FpPoly) -> FpPoly:
    # f(t) = g(t^p); Frobenius is trivial on F_p coefficients
    p = f.p
    return FpPoly(f.coeffs[::p], p)


def squarefree_decomposition(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Monic squarefree parts with multiplicities (Yun's algorithm, char p)."""
    p = f.p
    f = f.monic()
    out: list[tuple[FpPoly, int]] = []

    def rec(g: FpPoly, mult: int):
        if g.degree < 1:
            return
        dg = derivative(g)
        if dg.is_zero():
            rec(_pth_root(g), mult * p)
            return
        c = fp_gcd(g, dg)
        w = g // c
        i = 1
        while w.degree >= 1:
            y = fp_gcd(w, c)
            z = w // y
            if z.degree >= 1:
                out.append((z.monic(), i * mult))
            i += 1
            w, c = y, c // y
        if c.degree >= 1:
            rec(_pth_root(c), mult * p)

    rec(f, 1)
    return out


def distinct_degree(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Split a monic squarefree ``f`` into products of equal-degree irreducibles."""
    p = f.p
    out = []
    t = FpPoly.t(p)
    h = t
    k = 0
    while f.degree >= 1:
        k += 1
        if f.degree < 2 * k:
            out.append((f, f.degree))
            break
        h = _powmod(h, p, f)
        g = fp_gcd(f, h - t)
        if g.degree >= 1:
            out.append((g, k))
            f = f // g
            h = h % f if f.degree >= 1 else h
    return out


def _powmod(base: FpPoly, e: int, mod: FpPoly) -> FpPoly:
    result = FpPoly.constant(1, base.p)
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def fp_is_irreducible(f: FpPoly) -> bool:
    if f.degree < 1:
        return False
    _, factors = fp_factor(f)
    return len(factors) == 1 and factors[0][1] == 1


def format_factorization(unit: int, factors: list[tuple[FpPoly, int]]) -> str:
    """``(t+1)^2 * (t^2+t+1)``; a non-1 unit is printed first."""
    parts = [] if unit == 1 else [str(unit)]
    for q, e in factors:
        parts.append(f"({q})" if e == 1 else f"({q})^{e}")
    return " * ".join(parts)
