"""Exhaustive, certificate-producing search over finite truncated subrings.

``find_factorization`` decides whether ``f = g*h`` with ``deg g, deg h <= D``
and both factors drawn from ``A[t]`` for a finite subring ``A``, under one of
three side conditions.  Three interchangeable methods are provided:

``graded`` (default)
    Enumerates only the part of ``g`` that can influence the product and
    solves for ``h`` by linear algebra.  Sound because of two facts:
    the reduction mod M is a ring map (so ``gbar`` divides ``fbar``), and the
    minimal potential is additive on nonzero products (so with
    ``v(f) = m`` every split has ``v(g) + v(h) = m``, and levels of ``g``
    above ``d - v(h)`` multiply ``h`` to zero).  Factor order and scalar
    multiples are quotiented out.
``linear``
    Enumerates every admissible ``g`` (after mod-M pruning only) and solves
    for ``h`` linearly.
``brute``
    Enumerates both ``g`` and ``h``.  Only usable on tiny subrings.

Fresh variables never create factorizations: killing them is a ring map that
fixes ``f``, keeps degrees and keeps nonunits nonunits.  Searches therefore
run over the variables of ``f`` and record the reduction.
"""

from __future__ import annotations

import enum
import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import NotACandidate, NotInSubring, TooLarge
from .fp import FpPoly, monic_polys
from .linalg import solve_mod_p
from .ring import RingElem
from .rpoly import RPoly, kill_variables, reduce_mod_M, rpoly_is_unit
from .subring import FiniteAlgebra, SubringSpec, algebra, ambient_subring

DEFAULT_MAX_CANDIDATES = 10**8


def default_max_candidates() -> int:
    return int(os.environ.get("ANTIMATTER_MAX_CANDIDATES", DEFAULT_MAX_CANDIDATES))


@dataclass(frozen=True)
class SearchBudget:
    max_factor_degree: int = 2
    fresh_variables: int = 2
    refine_denominator: int = 2
    max_candidates: int = field(default_factory=default_max_candidates)

    def __post_init__(self):
        for name in ("max_factor_degree", "fresh_variables", "max_candidates"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.refine_denominator < 1:
            raise ValueError("refine_denominator must be positive")

    def to_json(self) -> dict:
        return {
            "max_factor_degree": self.max_factor_degree,
            "fresh_variables": self.fresh_variables,
            "refine_denominator": self.refine_denominator,
            "max_candidates": self.max_candidates,
        }


class Constraint(str, enum.Enum):
    BothNonunit = "BothNonunit"
    BothInM = "BothInM"
    UnitTimesM = "UnitTimesM"


class Verdict(str, enum.Enum):
    CertifiedWithinBudget = "CertifiedWithinBudget"
    FactorFound = "FactorFound"
    Uncertified = "Uncertified"


class Associateness(str, enum.Enum):
    StrongAssociate = "StrongAssociate"
    AssociateOnly = "AssociateOnly"
    NotAssociate = "NotAssociate"


# ---------------------------------------------------------------------------
# enumeration and associateness


def enumerate_elements(spec: SubringSpec, max_candidates: Optional[int] = None) -> Iterator[RingElem]:
    if max_candidates is None:
        max_candidates = default_max_candidates()
    if spec.size() > max_candidates:
        raise TooLarge(f"{spec} has {spec.size()} elements > {max_candidates}")
    alg = algebra(spec)
    for v in alg.elements():
        yield alg.to_elem(v)


def _mult_matrix(alg: FiniteAlgebra, a: Sequence[int]) -> np.ndarray:
    """Matrix of ``c -> c*a`` on coordinates."""
    M = np.zeros((alg.B, alg.B), dtype=np.int64)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j in range(alg.B):
            k = alg.mult[j][i]
            if k >= 0:
                M[k, j] += ca
    return M % alg.p


def divides(a: RingElem, b: RingElem, spec: SubringSpec, unit: bool = False) -> Optional[RingElem]:
    """Some ``c`` in the subring with ``c*a == b`` (a unit ``c`` if ``unit``)."""
    alg = algebra(spec)
    va, vb = alg.to_vec(a), alg.to_vec(b)
    x0, kernel = solve_mod_p(_mult_matrix(alg, va), np.array(vb), alg.p)
    if x0 is None:
        return None
    if unit and x0[0] % alg.p == 0:
        k = next((k for k in kernel if k[0] % alg.p), None)
        if k is None:
            return None
        x0 = (x0 + k) % alg.p
    return alg.to_elem([int(c) for c in x0])


def are_associate(a: RingElem, b: RingElem, spec: SubringSpec, method: str = "linear",
                  max_candidates: Optional[int] = None) -> Associateness:
    """Strong associateness (unit multiple) versus equal principal ideals.

    ``method="linear"`` decides both divisibilities over the whole multiplier
    space by solving linear systems; ``method="scan"`` walks every multiplier.
    """
    if not (spec.contains(a) and spec.contains(b)):
        raise NotInSubring(f"{a} or {b} is not in {spec}")
    if method == "scan":
        return _associate_scan(a, b, spec, max_candidates)
    if divides(a, b, spec, unit=True) is not None:
        return Associateness.StrongAssociate
    if divides(a, b, spec) is not None and divides(b, a, spec) is not None:
        return Associateness.AssociateOnly
    return Associateness.NotAssociate


def _associate_scan(a, b, spec, max_candidates) -> Associateness:
    a_to_b = b_to_a = unit_found = False
    for c in enumerate_elements(spec, max_candidates):
        if c * a == b:
            a_to_b = True
            if c.is_unit():
                unit_found = True
                break
        if c * b == a:
            b_to_a = True
    if unit_found:
        return Associateness.StrongAssociate
    if a_to_b and b_to_a:
        return Associateness.AssociateOnly
    return Associateness.NotAssociate


# ---------------------------------------------------------------------------
# factorization search


@dataclass
class SearchResult:
    factors: Optional[tuple[RPoly, RPoly]]
    enumerated_count: int
    search_space: int
    spec: SubringSpec
    method: str
    constraint: Constraint
    notes: list = field(default_factory=list)


def _pad(vecs: list, n: int, B: int) -> list:
    return list(vecs) + [(0,) * B] * (n - len(vecs))


class _Problem:
    """One search instance in coordinates."""

    def __init__(self, alg: FiniteAlgebra, F: list, D: int, constraint: Constraint):
        self.alg = alg
        self.p = alg.p
        self.B = alg.B
        self.d = alg.d
        self.D = D
        self.constraint = constraint
        self.F = F
        self.rows = 2 * D + 1
        self.feasible = len(F) <= self.rows
        rhs = np.zeros(self.rows * self.B, dtype=np.int64)
        for k, v in enumerate(F[: self.rows]):
            rhs[k * self.B:(k + 1) * self.B] = v
        self.rhs = rhs
        self.fbar = FpPoly([v[0] for v in F], self.p)
        levels = [alg.valuation(v) for v in F if any(v)]
        self.m = min(levels)

    # unknown layouts are lists of (t-degree, basis index)
    def layout(self, lo: int, hi: int) -> list[tuple[int, int]]:
        idx = [i for i in range(self.B) if lo <= self.alg.level[i] <= hi]
        return [(j, i) for j in range(self.D + 1) for i in idx]

    def solve_h(self, g: dict, h_layout: list) -> tuple[Optional[np.ndarray], list]:
        """Solve ``g*h = F`` for ``h`` supported on ``h_layout``."""
        B, p = self.B, self.p
        col = {key: n for n, key in enumerate(h_layout)}
        M = np.zeros((self.rows * B, len(h_layout)), dtype=np.int64)
        mult = self.alg.mult
        for (i, a), c in g.items():
            row = mult[a]
            for (j, b), n in col.items():
                k = row[b]
                if k >= 0:
                    M[(i + j) * B + k, n] += c
        return solve_mod_p(M, self.rhs, p)

    def to_poly(self, coords: dict) -> RPoly:
        vecs = [[0] * self.B for _ in range(self.D + 1)]
        for (j, i), c in coords.items():
            vecs[j][i] = int(c) % self.p
        return self.alg.vecs_to_poly(vecs)


def _gbar_choices(prob: _Problem, order_desc: bool) -> list[FpPoly]:
    """Admissible monic images of g (nonconstant)."""
    p, D = prob.p, prob.D
    degrees = range(1, D + 1)
    out = []
    for k in (reversed(degrees) if order_desc else degrees):
        for q in monic_polys(p, k):
            if prob.m == 0:
                n = prob.fbar.degree
                if not (k < n and n - k <= D and q.divides(prob.fbar)):
                    continue
            out.append(q)
    return out


def _nonzero_normalized(p: int, n: int) -> Iterator[tuple[int, ...]]:
    """Nonzero vectors whose first nonzero entry is 1."""
    for v in itertools.product(range(p), repeat=n):
        first = next((c for c in v if c), 0)
        if first == 1:
            yield v


@dataclass
class _Shard:
    a: int
    key: tuple
    init: dict          # fixed coordinates of g (its lowest-level part)
    free: list          # remaining relevant coordinates of g
    h_layout: list

    def size(self, p: int) -> int:
        return p ** len(self.free)


def _graded_shards(prob: _Problem) -> list[_Shard]:
    m, d, p = prob.m, prob.d, prob.p
    c = prob.constraint
    if c is Constraint.UnitTimesM:
        a_values = [0] if m >= 1 else []
    elif c is Constraint.BothInM:
        a_values = list(range(1, m // 2 + 1))
    else:
        a_values = list(range(0, m // 2 + 1))
    shards = []
    for a in a_values:
        b = m - a
        h_layout = prob.layout(b, d - a)
        if a == 0:
            free = prob.layout(1, d - b)
            for q in _gbar_choices(prob, order_desc=c is Constraint.UnitTimesM):
                init = {(j, 0): q[j] for j in range(q.degree + 1) if q[j]}
                shards.append(_Shard(a, ("gbar",) + q.coeffs, init, free, h_layout))
        else:
            init_layout = prob.layout(a, a)
            free = prob.layout(a + 1, d - b)
            for v in _nonzero_normalized(p, len(init_layout)):
                init = {key: x for key, x in zip(init_layout, v) if x}
                shards.append(_Shard(a, ("init", a) + v, init, free, h_layout))
    return shards


def _linear_shards(prob: _Problem) -> list[_Shard]:
    """Every admissible g; only the mod-M condition is used for pruning."""
    c, d = prob.constraint, prob.d
    all_m = prob.layout(1, d)
    shards = []
    if c is Constraint.BothInM:
        shards.append(_Shard(1, ("inM",), {}, all_m, prob.layout(1, d)))
        return shards
    h_layout = prob.layout(1, d) if c is Constraint.UnitTimesM else prob.layout(0, d)
    if c is Constraint.UnitTimesM and prob.m == 0:
        return []
    gbars = _gbar_choices(prob, order_desc=c is Constraint.UnitTimesM)
    for q in gbars:
        init = {(j, 0): q[j] for j in range(q.degree + 1) if q[j]}
        shards.append(_Shard(0, ("gbar",) + q.coeffs, init, all_m, h_layout))
    if c is Constraint.BothNonunit and prob.m > 0:
        # fbar == 0: up to swapping the factors, g lies in M[t]
        shards.append(_Shard(1, ("inM",), {}, all_m, h_layout))
    return shards


def _h_admissible(prob: _Problem, shard: _Shard, x0: np.ndarray, kernel: list) -> Optional[np.ndarray]:
    """A solution whose h is a nonunit (BothNonunit), or None."""
    if prob.constraint is not Constraint.BothNonunit:
        return x0
    p = prob.p
    pos = [n for n, (j, i) in enumerate(shard.h_layout) if i == 0]
    if not pos:
        return x0

    def image(v):
        return [int(v[n]) % p for n in pos]

    def is_unit_image(img):
        return img[0] != 0 and not any(img[1:])

    if not is_unit_image(image(x0)):
        return x0
    for k in kernel:
        ik = image(k)
        if not any(ik):
            continue
        if any(ik[1:]):
            return (x0 + k) % p
        lam = (-image(x0)[0] * pow(ik[0], -1, p)) % p
        return (x0 + lam * k) % p
    return None


def _run_shard(prob: _Problem, shard: _Shard, first_only: bool = True):
    """Return (count, solution-or-None) for one shard."""
    p = prob.p
    count = 0
    for values in itertools.product(range(p), repeat=len(shard.free)):
        count += 1
        g = dict(shard.init)
        for key, x in zip(shard.free, values):
            if x:
                g[key] = x
        if not g:
            continue
        x0, kernel = prob.solve_h(g, shard.h_layout)
        if x0 is None:
            continue
        sol = _h_admissible(prob, shard, x0, kernel)
        if sol is None:
            continue
        h = {key: int(x) for key, x in zip(shard.h_layout, sol) if int(x) % p}
        if first_only:
            return count, (g, h)
    return count, None


def _run_shard_job(args):
    prob, shard = args
    return _run_shard(prob, shard)


def _brute(prob: _Problem, max_candidates: int) -> tuple[int, Optional[tuple[dict, dict]]]:
    alg, p, D = prob.alg, prob.p, prob.D
    n = alg.B * (D + 1)
    total = p ** (2 * n)
    if total > max_candidates:
        raise TooLarge(f"brute force space {total} > {max_candidates}")
    polys = []
    for flat in itertools.product(range(p), repeat=n):
        vecs = [flat[j * alg.B:(j + 1) * alg.B] for j in range(D + 1)]
        while vecs and not any(vecs[-1]):
            vecs.pop()
        polys.append((flat, vecs))
    target = [tuple(v) for v in prob.F]
    count = 0
    for gflat, g in polys:
        if not _admissible_factor(prob, g, first=True):
            continue
        for hflat, h in polys:
            count += 1
            if not _admissible_factor(prob, h, first=False):
                continue
            if alg.poly_mul(g, h) == target:
                gd = {(j, i): c for j, v in enumerate(g) for i, c in enumerate(v) if c}
                hd = {(j, i): c for j, v in enumerate(h) for i, c in enumerate(v) if c}
                return count, (gd, hd)
    return count, None


def _admissible_factor(prob: _Problem, vecs: list, first: bool) -> bool:
    if not vecs:
        return False
    image = [v[0] for v in vecs]
    in_M = not any(image)
    unit = bool(image[0]) and not any(image[1:])
    c = prob.constraint
    if c is Constraint.BothNonunit:
        return not unit
    if c is Constraint.BothInM:
        return in_M
    return (not in_M and not unit) if first else in_M


def _search_space(prob: _Problem, shards: list[_Shard]) -> int:
    return sum(s.size(prob.p) for s in shards)


def search_factorization(
    f: RPoly,
    budget: SearchBudget,
    constraint: Constraint = Constraint.BothNonunit,
    spec: Optional[SubringSpec] = None,
    seed: int = 0,
    method: str = "graded",
    workers: int = 1,
    drop_fresh: bool = True,
) -> SearchResult:
    """Search ``A[t]`` for ``f = g*h`` under ``constraint`` and ``budget``.

    ``spec`` defaults to the subring of ``f`` refined by the budget.  Shards
    (one per choice of the lowest part of ``g``) are visited in canonical
    order; a nonzero ``seed`` shuffles shards of equal priority.
    ``drop_fresh=False`` keeps variables of ``spec`` absent from ``f``,
    which only serves to test that they never help.
    """
    constraint = Constraint(constraint)
    if f.is_zero():
        raise NotACandidate("zero polynomial")
    if spec is None:
        spec = ambient_subring(f, 0, budget.refine_denominator)
    notes = []
    fresh = set(spec.variables) - f.variables()
    if fresh and drop_fresh:
        notes.append({"kind": "drop-fresh-variables", "variables": sorted(fresh)})
        spec = SubringSpec(spec.p, tuple(sorted(f.variables())), spec.denominator)
    if budget.fresh_variables:
        notes.append({"kind": "fresh-variables-irrelevant", "count": budget.fresh_variables})
    if not spec.contains_poly(f):
        raise NotInSubring(f"{f} is not in {spec}")
    alg = algebra(spec)
    prob = _Problem(alg, alg.poly_to_vecs(f), budget.max_factor_degree, constraint)
    result = SearchResult(None, 0, 0, spec, method, constraint, notes)
    if not prob.feasible:
        notes.append({"kind": "degree", "detail": "deg f exceeds 2*max_factor_degree"})
        return result

    if method == "brute":
        count, sol = _brute(prob, budget.max_candidates)
        result.enumerated_count = result.search_space = count
        if sol:
            result.factors = (prob.to_poly(sol[0]), prob.to_poly(sol[1]))
        return _verified(result, f)

    shards = _graded_shards(prob) if method == "graded" else _linear_shards(prob)
    if method not in ("graded", "linear"):
        raise ValueError(f"unknown method {method!r}")
    space = _search_space(prob, shards)
    result.search_space = space
    if space > budget.max_candidates:
        raise TooLarge(f"search space {space} > max_candidates {budget.max_candidates}")
    shards = _order_shards(shards, seed)

    if workers > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_shard_job, [(prob, s) for s in shards]))
        for count, sol in outcomes:
            result.enumerated_count += count
            if sol and result.factors is None:
                result.factors = (prob.to_poly(sol[0]), prob.to_poly(sol[1]))
        return _verified(result, f)

    for shard in shards:
        count, sol = _run_shard(prob, shard)
        result.enumerated_count += count
        if sol:
            result.factors = (prob.to_poly(sol[0]), prob.to_poly(sol[1]))
            break
    return _verified(result, f)


def _order_shards(shards: list[_Shard], seed: int) -> list[_Shard]:
    if not seed:
        return shards
    rng = random.Random(seed)
    groups: dict = {}
    order = []
    for s in shards:
        key = (s.a, len(s.init))
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(s)
    out = []
    for key in order:
        g = groups[key]
        rng.shuffle(g)
        out.extend(g)
    return out


def _verified(result: SearchResult, f: RPoly) -> SearchResult:
    if result.factors is not None:
        g, h = result.factors
        if g * h != f:
            raise AssertionError(f"search returned a wrong factorization of {f}")  # pragma: no cover
        c = result.constraint
        if c is Constraint.BothNonunit:
            assert not rpoly_is_unit(g) and not rpoly_is_unit(h)
        elif c is Constraint.BothInM:
            assert g.in_M() and h.in_M()
        else:
            assert not g.in_M() and not rpoly_is_unit(g) and h.in_M()
    return result


def find_factorization(
    f: RPoly,
    budget: SearchBudget,
    constraint: Constraint = Constraint.BothNonunit,
    spec: Optional[SubringSpec] = None,
    seed: int = 0,
    method: str = "graded",
) -> Optional[tuple[RPoly, RPoly]]:
    return search_factorization(f, budget, constraint, spec, seed, method).factors


# ---------------------------------------------------------------------------
# certificates


@dataclass
class AtomCertificate:
    subject: RPoly
    budget: SearchBudget
    spec: SubringSpec
    verdict: Verdict
    factors: Optional[tuple[RPoly, RPoly]] = None
    enumerated_count: int = 0
    search_space: int = 0
    replay_seed: int = 0
    method: str = "graded"
    reductions: list = field(default_factory=list)
    reason: str = ""

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CertifiedWithinBudget

    def to_json(self) -> dict:
        out = {
            "schema": 1,
            "subject": str(self.subject),
            "p": self.spec.p,
            "variables": list(self.spec.variables),
            "denominator": self.spec.denominator,
            "degree_bound": self.budget.max_factor_degree,
            "fresh_vars": self.budget.fresh_variables,
            "verdict": self.verdict.value,
            "enumerated_count": self.enumerated_count,
            "search_space": self.search_space,
            "method": self.method,
            "replay_seed": self.replay_seed,
            "reductions": self.reductions,
        }
        if self.factors is not None:
            out["factors"] = [str(g) for g in self.factors]
        if self.reason:
            out["reason"] = self.reason
        return out


def certify_strong_atom(
    f: RPoly,
    budget: SearchBudget,
    spec: Optional[SubringSpec] = None,
    keep: Optional[Sequence[int]] = None,
    seed: int = 0,
    method: str = "graded",
) -> AtomCertificate:
    """Bounded strong-atom certificate for ``f``.

    With ``keep`` the image of ``f`` modulo all variables outside ``keep`` is
    certified first: a nonunit split of ``f`` maps to a nonunit split of the
    image, so a certified image certifies ``f``.  Otherwise (or if the image
    splits) ``f`` is searched directly.
    """
    if f.is_zero() or rpoly_is_unit(f):
        raise NotACandidate(f"{f} is zero or a unit, not a candidate atom")
    if spec is None:
        spec = ambient_subring(f, 0, budget.refine_denominator)
    nominal = spec.with_variables(_fresh_for(spec, f, budget.fresh_variables))
    reductions: list = []
    if keep is not None:
        image = kill_variables(f, keep)
        if not image.is_zero() and not rpoly_is_unit(image):
            sub = SubringSpec(spec.p, tuple(v for v in spec.variables if v in set(keep)), spec.denominator)
            res = search_factorization(image, budget, Constraint.BothNonunit, sub, seed, method)
            step = {"kind": "kill-variables", "keep": sorted(keep), "image": str(image),
                    "image_verdict": "FactorFound" if res.factors else "CertifiedWithinBudget",
                    "enumerated_count": res.enumerated_count}
            reductions.append(step)
            if res.factors is None:
                return AtomCertificate(f, budget, nominal, Verdict.CertifiedWithinBudget, None,
                                       res.enumerated_count, res.search_space, seed, method,
                                       reductions + res.notes, "image certified")
    res = search_factorization(f, budget, Constraint.BothNonunit, spec, seed, method)
    verdict = Verdict.FactorFound if res.factors else Verdict.CertifiedWithinBudget
    reason = ""
    if res.factors is None and res.enumerated_count == 0 and not reduce_mod_M(f).is_zero():
        reason = "image admits no nontrivial split"
    return AtomCertificate(f, budget, nominal, verdict, res.factors, res.enumerated_count,
                           res.search_space, seed, method, reductions + res.notes, reason)


def _fresh_for(spec: SubringSpec, f: RPoly, count: int) -> list[int]:
    from .core import smallest_fresh

    return smallest_fresh(set(spec.variables) | f.variables(), count)
