"""Acceptance criteria; each test prints one ``PASS``/``FAIL`` line.

Plain ``pytest`` shows the lines in an "acceptance criteria" summary section;
``python tests/test_acceptance.py`` prints them directly.
"""

from __future__ import annotations

import io
import itertools
import json
import random
import sys
import time
from contextlib import redirect_stdout
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from antimatter import (  # noqa: E402
    Associateness,
    FpPoly,
    RingElem,
    RPoly,
    SearchBudget,
    SubringSpec,
    Verdict,
    are_associate,
    atomize,
    certify_strong_atom,
    elem_inverse,
    elem_proot,
    fp_factor,
    hensel_split,
    nil_certificate,
    reduce_mod_M,
    rpoly_is_unit,
    survive_witness,
    unit_coeff_degree,
)
from antimatter.cli import main  # noqa: E402
from antimatter.fp import monic_polys  # noqa: E402
from antimatter.schemas import validate  # noqa: E402

from helpers import random_elem, subring_elements  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"
REPORT: list[str] = []


def _report(number: int, title: str, ok: bool, seconds: float, limit: float, detail: str) -> bool:
    within = seconds < limit
    status = "PASS" if ok and within else "FAIL"
    line = f"ACCEPTANCE {number} {status}: {title} ({detail}; {seconds:.2f}s, limit {limit:g}s)"
    REPORT.append(line)
    print(line)
    return ok and within


def criterion_1():
    spec = SubringSpec(2, (1, 2), 2)
    counts = {"zero": 0, "unit": 0, "nilpotent": 0}
    ok = True
    for a in subring_elements(spec):
        kinds = []
        if a.is_zero():
            kinds.append("zero")
        if a.is_unit():
            ok &= a * elem_inverse(a) == RingElem.one(2)
            kinds.append("unit")
        if not a.is_zero() and not a.is_unit():
            c = nil_certificate(a)
            ok &= (a**c.bound_exponent).is_zero() and c.exact_index <= c.bound_exponent
            ok &= (a**c.exact_index).is_zero() and not (a ** (c.exact_index - 1)).is_zero()
            kinds.append("nilpotent")
        ok &= len(kinds) == 1
        counts[kinds[0]] += 1
    ok &= sum(counts.values()) == 64
    return ok, f"{counts}"


def criterion_2():
    rng = random.Random(2)
    done = scanned = 0
    ok = True
    while done < 100:
        p = rng.choice([2, 3])
        d = rng.choice([2, 3, 4])
        variables = rng.choice([(1,), (1, 2)])
        z = random_elem(rng, SubringSpec(p, variables, d))
        if z.is_zero() or z.is_unit():
            continue
        r = elem_proot(z)
        ok &= r**p == z
        ambient = SubringSpec(p, variables, d * p)
        verdict = are_associate(z, r, ambient)
        ok &= verdict is Associateness.NotAssociate
        if ambient.size() <= 3**7:
            ok &= are_associate(z, r, ambient, method="scan") is verdict
            scanned += 1
        done += 1
    return ok, f"100 nonunits, all NotAssociate to their roots; {scanned} also by multiplier scan"


def criterion_3():
    rng = random.Random(3)
    specs = [SubringSpec(2, (1, 2, 3), 3), SubringSpec(3, (1, 2), 4), SubringSpec(2, (1, 2), 6)]
    pairs = tries = 0
    ok = True
    while pairs < 500:
        tries += 1
        spec = rng.choice(specs)

        def sparse_poly():
            coeffs = []
            for _ in range(rng.randint(1, 4)):
                c = random_elem(rng, spec) if rng.random() < 0.7 else RingElem.zero(spec.p)
                coeffs.append(RingElem(spec.p, 0, c.terms) if rng.random() < 0.8 else c)
            return RPoly(coeffs, spec.p)

        f, g = sparse_poly(), sparse_poly()
        fg = f * g
        if fg.is_zero():
            continue
        w = survive_witness(f, g)
        ok &= fg[w.degree].coefficient(w.product_monomial) != 0
        ok &= w.total_potential == f.min_potential() + g.min_potential()
        ok &= w.product_monomial.potential == w.total_potential
        ok &= fg.min_potential() == w.total_potential
        pairs += 1
    return ok, f"500 pairs with nonzero product ({tries} drawn)"


def criterion_4():
    f = RPoly([RingElem.var(1, 2), RingElem.var(2, 2)], 2)
    cert = certify_strong_atom(f, SearchBudget(2, 0, 1), SubringSpec(2, (1, 2), 2))
    ok = cert.verdict is Verdict.CertifiedWithinBudget
    return ok, f"verdict {cert.verdict.value}, enumerated_count {cert.enumerated_count}"


def criterion_5():
    base = SubringSpec(2, (1,), 2)
    els = subring_elements(base)
    budget = SearchBudget(2, 2, 2)
    total = bad = 0
    cases: dict = {}
    for cs in itertools.product(els, repeat=3):
        f = RPoly(cs, 2)
        if f.is_zero() or rpoly_is_unit(f):
            continue
        total += 1
        a = atomize(f, budget, base=base)
        cases[a.case_tag] = cases.get(a.case_tag, 0) + 1
        prod = RPoly.t(2, 0)
        for g in a.factors:
            prod = prod * g
        n = unit_coeff_degree(f)
        bound = max(1, n) if n is not None else f.degree + 2
        good = prod == f and len(a.factors) <= bound and a.complete and a.all_certified
        bad += not good
    return bad == 0 and total == 447, f"{total} inputs, cases {cases}, {bad} failures"


def criterion_6():
    els = [a for a in subring_elements(SubringSpec(2, (1,), 2)) if not a.is_unit()]
    spec = SubringSpec(2, (1,), 2)
    checked = 0
    ok = True
    for k in range(1, 5):
        for fbar in monic_polys(2, k):
            _, facs = fp_factor(fbar)
            if len(facs) < 2:
                continue
            powers = [q**e for q, e in facs]
            for r in range(1, len(powers)):
                for group in itertools.combinations(range(len(powers)), r):
                    if 0 not in group:
                        continue
                    u_bar = FpPoly.constant(1, 2)
                    for i in group:
                        u_bar = u_bar * powers[i]
                    v_bar = fbar // u_bar
                    for noise in itertools.product(els, repeat=k + 1):
                        f = RPoly([RingElem.scalar(c, 2) + n for c, n in zip(fbar.coeffs, noise)], 2)
                        u, v = hensel_split(f, u_bar, v_bar, spec)
                        ok &= u * v == f and reduce_mod_M(u) == u_bar
                        checked += 1
    return ok, f"{checked} lifts re-multiplied exactly"


def criterion_7():
    checked = 0
    ok = True
    for p in (2, 3):
        for k in range(1, 7):
            for f in monic_polys(p, k):
                unit, facs = fp_factor(f)
                prod = FpPoly.constant(unit, p)
                for q, e in facs:
                    prod = prod * q**e
                    for j in range(1, q.degree // 2 + 1):
                        ok &= not any(d.divides(q) for d in monic_polys(p, j))
                ok &= prod == f
                checked += 1
    return ok, f"{checked} monic polynomials reconstructed"


GOLDEN_CASES = {
    "atomize_x1": ["atomize", "(x1)", "--p", "2", "--seed", "0"],
    "nilindex": ["nilindex", "x1^(1/2)", "--p", "2", "--seed", "0"],
    "witness": ["witness", "(x1^(1/2)) + (x1)t", "(x2^(1/2))t", "--p", "2", "--seed", "0"],
}


def criterion_8():
    ok = True
    for name, argv in GOLDEN_CASES.items():
        for suffix, extra in (("txt", []), ("json", ["--json"])):
            buf = io.StringIO()
            with redirect_stdout(buf):
                status = main(argv + extra)
            ok &= status == 0 and buf.getvalue() == (GOLDEN / f"{name}.{suffix}").read_text()
            if suffix == "json":
                validate(json.loads(buf.getvalue()))
    return ok, "3 commands, text and JSON byte-identical, JSON schema-valid"


CRITERIA = [
    (1, "dichotomy over A({1,2}, 2, 2)", criterion_1, 1),
    (2, "p-th roots are proper nonassociate divisors", criterion_2, 10),
    (3, "surviving monomial, 500 fuzzed pairs", criterion_3, 10),
    (4, "x1 + x2 t certified strong atom", criterion_4, 300),
    (5, "length bounds, exhaustive sweep", criterion_5, 1800),
    (6, "Hensel exactness, exhaustive", criterion_6, 120),
    (7, "F_p[t] factorization, exhaustive", criterion_7, 60),
    (8, "CLI golden outputs", criterion_8, 60),
]


@pytest.fixture(autouse=True)
def _default_cap(monkeypatch):
    monkeypatch.delenv("ANTIMATTER_MAX_CANDIDATES", raising=False)


@pytest.mark.parametrize("number, title, fn, limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, limit):
    start = time.perf_counter()
    ok, detail = fn()
    seconds = time.perf_counter() - start
    assert _report(number, title, ok, seconds, limit, detail)


if __name__ == "__main__":
    results = []
    for number, title, fn, limit in CRITERIA:
        start = time.perf_counter()
        ok, detail = fn()
        results.append(_report(number, title, ok, time.perf_counter() - start, limit, detail))
    sys.exit(0 if all(results) else 1)
