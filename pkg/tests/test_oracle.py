import itertools
import random

import pytest

from antimatter import (
    Associateness,
    Constraint,
    RPoly,
    SearchBudget,
    SubringSpec,
    Verdict,
    are_associate,
    certify_strong_atom,
    elem_proot,
    find_factorization,
    rpoly_is_unit,
    search_factorization,
)
from antimatter.errors import NotACandidate, TooLarge

from helpers import elem, poly, random_elem, subring_elements, x

h = elem(2, x1="1/2")


def _valid(f, g, k, c):
    assert g * k == f
    if c is Constraint.BothNonunit:
        return not rpoly_is_unit(g) and not rpoly_is_unit(k)
    if c is Constraint.BothInM:
        return g.in_M() and k.in_M()
    return not g.in_M() and not rpoly_is_unit(g) and k.in_M()


def test_find_examples():
    assert find_factorization(poly(x(1)), SearchBudget(), Constraint.BothInM) == (poly(h), poly(h))
    spec = SubringSpec(2, (1,), 2)
    assert find_factorization(poly(x(1), 1), SearchBudget(1, 0), Constraint.BothNonunit, spec) is None
    g, k = find_factorization(poly(x(1), 0, 1), SearchBudget())
    assert g * k == poly(x(1), 0, 1)
    assert g == k == poly(h, 1)


def test_certify_examples():
    spec = SubringSpec(2, (1, 2), 2)
    cert = certify_strong_atom(poly(x(1), x(2)), SearchBudget(2, 0), spec)
    assert cert.verdict is Verdict.CertifiedWithinBudget and cert.enumerated_count > 0
    cert = certify_strong_atom(poly(x(1)), SearchBudget())
    assert cert.verdict is Verdict.FactorFound and cert.factors == (poly(h), poly(h))
    with pytest.raises(NotACandidate):
        certify_strong_atom(poly(1, x(1)), SearchBudget())


def _small_cases():
    for spec, D in [(SubringSpec(2, (1,), 2), 1), (SubringSpec(3, (1,), 1), 1), (SubringSpec(2, (1, 2), 1), 1)]:
        els = subring_elements(spec)
        for cs in itertools.product(els, repeat=D + 1):
            f = RPoly(cs, spec.p)
            if not f.is_zero() and not rpoly_is_unit(f):
                yield spec, D, f


@pytest.mark.parametrize("constraint", list(Constraint))
def test_three_routes_agree(constraint):
    """Graded search, linear search and full brute force decide identically."""
    checked = 0
    for spec, D, f in _small_cases():
        budget = SearchBudget(D, 0)
        found = {}
        for method in ("graded", "linear", "brute"):
            res = search_factorization(f, budget, constraint, spec, method=method)
            if res.factors:
                assert _valid(f, *res.factors, constraint)
            found[method] = res.factors is not None
        assert len(set(found.values())) == 1, (str(f), found)
        checked += 1
    assert checked > 100


def test_graded_and_linear_agree_at_degree_two():
    spec = SubringSpec(2, (1,), 2)
    els = subring_elements(spec)
    rng = random.Random(3)
    for _ in range(60):
        f = RPoly([rng.choice(els) for _ in range(3)], 2)
        if f.is_zero() or rpoly_is_unit(f):
            continue
        for c in Constraint:
            a = search_factorization(f, SearchBudget(2, 0), c, spec).factors
            b = search_factorization(f, SearchBudget(2, 0), c, spec, method="linear").factors
            assert (a is None) == (b is None)


def test_fresh_variables_never_help():
    """Searching with an extra variable finds a split exactly when the reduced search does."""
    wide = SubringSpec(2, (1, 2), 1)
    narrow = SubringSpec(2, (1,), 1)
    for cs in itertools.product(subring_elements(narrow), repeat=2):
        f = RPoly(cs, 2)
        if f.is_zero() or rpoly_is_unit(f):
            continue
        for c in Constraint:
            full = search_factorization(f, SearchBudget(1, 0), c, wide, method="brute", drop_fresh=False)
            reduced = search_factorization(f, SearchBudget(1, 0), c, wide)
            assert reduced.spec == SubringSpec(2, tuple(sorted(f.variables())), 1)
            assert (full.factors is None) == (reduced.factors is None), (str(f), c)


def test_symmetry_and_monotonicity():
    f = poly(x(1), x(1))
    small = search_factorization(f, SearchBudget(1, 0, 2), Constraint.BothInM)
    g, k = small.factors
    assert k * g == f
    large = search_factorization(f, SearchBudget(2, 0, 2), Constraint.BothInM)
    assert large.factors is not None
    refined = search_factorization(f, SearchBudget(1, 0, 4), Constraint.BothInM)
    assert refined.factors is not None


def test_seed_and_workers_keep_the_verdict():
    f = poly(x(1), x(2))
    spec = SubringSpec(2, (1, 2), 2)
    base = search_factorization(f, SearchBudget(2, 0), spec=spec)
    for seed in (1, 7):
        other = search_factorization(f, SearchBudget(2, 0), spec=spec, seed=seed)
        assert other.factors is None and other.enumerated_count == base.enumerated_count
    par = search_factorization(f, SearchBudget(2, 0), spec=spec, workers=2)
    assert par.factors is None and par.enumerated_count == base.enumerated_count
    g = poly(x(1), 0, 1)
    for seed in (0, 3):
        u, v = find_factorization(g, SearchBudget(), seed=seed)
        assert u * v == g


def test_budget_guard():
    with pytest.raises(TooLarge):
        search_factorization(poly(x(1), x(2)), SearchBudget(2, 0, 2, max_candidates=5))


def test_env_override(monkeypatch):
    monkeypatch.setenv("ANTIMATTER_MAX_CANDIDATES", "7")
    assert SearchBudget().max_candidates == 7


def test_associate_examples():
    spec = SubringSpec(2, (1,), 2)
    assert are_associate(h, h, spec) is Associateness.StrongAssociate
    assert are_associate(x(1), h, spec) is Associateness.NotAssociate
    zero = elem(2)
    assert are_associate(zero, zero, spec) is Associateness.StrongAssociate


@pytest.mark.parametrize("spec", [SubringSpec(2, (1,), 4), SubringSpec(3, (1,), 2), SubringSpec(2, (1, 2), 2)])
def test_associate_linear_matches_scan(spec):
    els = subring_elements(spec)
    rng = random.Random(1)
    pairs = [(rng.choice(els), rng.choice(els)) for _ in range(60)]
    pairs += [(a, a * u) for a in els[:8] for u in els[-3:]]
    for a, b in pairs:
        assert are_associate(a, b, spec) is are_associate(a, b, spec, method="scan")


def test_root_is_never_associate():
    spec = SubringSpec(3, (1,), 6)
    for _ in range(10):
        z = random_elem(random.Random(_), SubringSpec(3, (1,), 2)) * elem(3, x1="1/2")
        if z.is_zero():
            continue
        r = elem_proot(z)
        assert are_associate(z, r, spec, method="scan") is Associateness.NotAssociate
