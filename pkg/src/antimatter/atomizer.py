"""Factor nonzero nonunits of R[t] into strong atoms.

Dispatch:

* ``UnitCoeff``: some coefficient is a unit.  The image in F_p[t] is
  factored, coprime groups are split by Hensel lifting, prime powers try the
  p-th power pattern and then a bounded search.  At most ``n`` factors come
  out, ``n`` being the top unit-coefficient degree.
* ``MSplit``: ``f`` lies in M[t] and splits as ``g*h`` inside M[t]; the
  answer is ``(g + y t + z)(h + y t + z)`` for two fresh variables.
* ``MNoSplit``: otherwise ``f = g*h`` with ``h`` in M[t] and ``g`` of
  maximal image degree, and each side is handled as above.

All searches happen in one finite subring fixed at the top-level call.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import smallest_fresh
from .errors import NoUnitCoeff, NotInM, NotInSubring, TooLarge, VerificationError, ZeroOrUnit
from .fp import fp_factor
from .hensel import hensel_split
from .oracle import (
    AtomCertificate,
    Constraint,
    SearchBudget,
    Verdict,
    certify_strong_atom,
    search_factorization,
)
from .ring import RingElem, elem_proot
from .rpoly import RPoly, reduce_mod_M, rpoly_is_unit, unit_coeff_degree
from .subring import SubringSpec, ambient_subring

CASES = ("UnitCoeff", "MSplit", "MNoSplit", "AlreadyUnit", "Zero")


@dataclass
class Atomization:
    input: RPoly
    case_tag: str
    factors: list
    bound: int
    certificates: list
    spec: SubringSpec
    budget: SearchBudget
    seed: int = 0
    complete: bool = True

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def within_bound(self) -> bool:
        return self.length <= self.bound

    @property
    def all_certified(self) -> bool:
        return all(c.verdict is Verdict.CertifiedWithinBudget for c in self.certificates)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "input": str(self.input),
            "case": self.case_tag,
            "factors": [str(g) for g in self.factors],
            "bound": self.bound,
            "length": self.length,
            "within_bound": self.within_bound,
            "complete": self.complete,
            "certificates": [c.to_json() for c in self.certificates],
            "replay": {
                "seed": self.seed,
                "spec": self.spec.to_json(),
                "budget": self.budget.to_json(),
            },
        }


class _Context:
    """Everything fixed for one atomization."""

    def __init__(self, budget: SearchBudget, spec: SubringSpec, seed: int):
        self.budget = budget
        self.spec = spec
        self.seed = seed
        self.complete = True

    def local_spec(self, f: RPoly) -> SubringSpec:
        return SubringSpec(self.spec.p, tuple(sorted(f.variables() | set(self.spec.variables))),
                           self.spec.denominator)

    def search(self, f: RPoly, constraint: Constraint):
        try:
            return _search(f, self.budget, constraint, self.local_spec(f), self.seed).factors
        except TooLarge:
            self.complete = False
            return None

    def certify(self, f: RPoly, keep=None) -> AtomCertificate:
        try:
            return _certify(f, self.budget, self.local_spec(f), None if keep is None else tuple(keep), self.seed)
        except TooLarge as exc:
            self.complete = False
            return AtomCertificate(f, self.budget, self.local_spec(f), Verdict.Uncertified,
                                   replay_seed=self.seed, reason=str(exc))


@lru_cache(maxsize=4096)
def _search(f, budget, constraint, spec, seed):
    return search_factorization(f, budget, constraint, spec, seed)


@lru_cache(maxsize=4096)
def _certify(f, budget, spec, keep, seed):
    return certify_strong_atom(f, budget, spec, keep, seed)


# ---------------------------------------------------------------------------
# case 1


def _pth_root(f: RPoly) -> Optional[RPoly]:
    """``g`` with ``g**p == f`` via coefficientwise roots, if the shape allows."""
    p = f.p
    if any(not c.is_zero() for k, c in enumerate(f.coeffs) if k % p):
        return None
    roots = []
    for k in range(0, len(f.coeffs), p):
        c = f.coeffs[k]
        roots.append(RingElem.zero(p) if c.is_zero() else elem_proot(c))
    g = RPoly(roots, p)
    return g if g**p == f else None


def _case1(f: RPoly, ctx: _Context) -> list:
    fbar = reduce_mod_M(f)
    _, facs = fp_factor(fbar)
    if len(facs) >= 2:
        q, e = facs[0]
        u_bar = q**e
        v_bar = fbar // u_bar
        u, v = hensel_split(f, u_bar, v_bar, ctx.local_spec(f))
        return _case1(u, ctx) + _case1(v, ctx)
    q, e = facs[0]
    if e == 1:
        return [f]
    if e % f.p == 0:
        g = _pth_root(f)
        if g is not None and ctx.local_spec(g).contains_poly(g):
            return _case1(g, ctx) * f.p
    split = ctx.search(f, Constraint.BothNonunit)
    if split is None:
        return [f]
    g, h = split
    return _case1(g, ctx) + _case1(h, ctx)


def case1_unit_coeff(f: RPoly, budget: SearchBudget, spec: Optional[SubringSpec] = None, seed: int = 0) -> list:
    n = unit_coeff_degree(f)
    if n is None:
        raise NoUnitCoeff(f"{f} has no unit coefficient")
    if n == 0:
        raise ZeroOrUnit(f"{f} is a unit")
    ctx = _Context(budget, spec or ambient_subring(f, 0, budget.refine_denominator), seed)
    return _case1(f, ctx)


# ---------------------------------------------------------------------------
# case 2


def _pad_variables(*polys: RPoly) -> tuple[int, int]:
    used: set[int] = set()
    for g in polys:
        used |= g.variables()
    y, z = smallest_fresh(used, 2)
    return y, z


def case2_pad(g: RPoly, h: RPoly, fresh: Optional[tuple[int, int]] = None) -> tuple[RPoly, RPoly]:
    """``(g + y t + z, h + y t + z)`` for fresh ``y, z``; the product is ``g*h``."""
    if g.p != h.p:
        raise ValueError("mixed characteristics")
    if not (g.in_M() and h.in_M()):
        raise NotInM("both factors must lie in M[t]")
    y, z = fresh if fresh is not None else _pad_variables(g, h)
    if {y, z} & (g.variables() | h.variables()):
        raise ValueError(f"x{y}, x{z} are not fresh for {g} and {h}")
    p = g.p
    pad = RPoly([RingElem.var(z, p), RingElem.var(y, p)], p)
    return g + pad, h + pad


def _padded(g: RPoly, h: RPoly, avoid: set[int], ctx: _Context) -> tuple[list, list]:
    y, z = smallest_fresh(avoid | g.variables() | h.variables(), 2)
    a, b = case2_pad(g, h, (y, z))
    return [a, b], [ctx.certify(a, keep=(y, z)), ctx.certify(b, keep=(y, z))]


# ---------------------------------------------------------------------------
# case 3


def _case3(f: RPoly, ctx: _Context) -> tuple[list, list]:
    split = ctx.search(f, Constraint.UnitTimesM)
    if split is None:
        return [f], [ctx.certify(f)]
    g, h = split
    left = _case1(g, ctx)
    certs = [ctx.certify(a) for a in left]
    inner = ctx.search(h, Constraint.BothInM)
    if inner is None:
        return left + [h], certs + [ctx.certify(h)]
    right, rcerts = _padded(inner[0], inner[1], f.variables() | g.variables(), ctx)
    return left + right, certs + rcerts


def case3_mixed(f: RPoly, budget: SearchBudget, spec: Optional[SubringSpec] = None, seed: int = 0) -> list:
    if not f.in_M() or f.is_zero():
        raise NotInM(f"{f} is not a nonzero element of M[t]")
    ctx = _Context(budget, spec or ambient_subring(f, 0, budget.refine_denominator), seed)
    factors, _ = _case3(f, ctx)
    return factors


# ---------------------------------------------------------------------------


def atomize(
    f: RPoly,
    budget: Optional[SearchBudget] = None,
    base: Optional[SubringSpec] = None,
    seed: int = 0,
) -> Atomization:
    """Factor ``f`` into strong atoms certified within ``budget``.

    Searches run in ``base`` refined by ``budget.refine_denominator`` (the
    subring of ``f`` when ``base`` is omitted).  Factors whose certification
    exceeds the budget are kept but flagged ``Uncertified``.
    """
    budget = budget or SearchBudget()
    if f.is_zero():
        raise ZeroOrUnit("cannot atomize 0")
    if rpoly_is_unit(f):
        raise ZeroOrUnit(f"{f} is a unit")
    if base is None:
        spec = ambient_subring(f, 0, budget.refine_denominator)
    else:
        spec = base.refined(budget.refine_denominator)
        if not (spec.p == f.p and all(spec.denominator % c.denominator() == 0 for c in f.coeffs)):
            raise NotInSubring(f"{f} is not in {spec}")
    ctx = _Context(budget, spec, seed)

    n = unit_coeff_degree(f)
    if n is not None:
        case, bound = "UnitCoeff", max(1, n)
        factors = _case1(f, ctx)
        certs = [ctx.certify(g) for g in factors]
    else:
        bound = f.degree + 2
        split = ctx.search(f, Constraint.BothInM)
        if split is not None:
            case = "MSplit"
            factors, certs = _padded(split[0], split[1], f.variables(), ctx)
        else:
            case = "MNoSplit"
            factors, certs = _case3(f, ctx)

    product = RPoly.t(f.p, 0)
    for g in factors:
        if rpoly_is_unit(g):
            raise VerificationError(f"factor {g} is a unit")
        product = product * g
    if product != f:
        raise VerificationError(f"factors of {f} multiply to {product}")
    return Atomization(f, case, factors, bound, certs, spec, budget, seed, ctx.complete)


__all__ = [
    "Atomization",
    "atomize",
    "case1_unit_coeff",
    "case2_pad",
    "case3_mixed",
]
