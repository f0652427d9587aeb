"""Atomize every nonzero nonunit of A(vars, d, p)[t] up to a degree and tabulate.

Checks, per input: exact product, the length bound for its case, and that
every factor is certified within the budget.  Example::

    python scripts/sweep_lengths.py --degree 2 --refine 2
"""

from __future__ import annotations

import itertools
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

from _config import parse_config

from antimatter import RPoly, SearchBudget, SubringSpec, atomize, rpoly_is_unit, unit_coeff_degree
from antimatter.subring import algebra


@dataclass
class SweepConfig:
    p: int = 2
    variables: tuple = (1,)
    denominator: int = 2
    degree: int = 2
    factor_degree: int = 2
    fresh: int = 2
    refine: int = 2
    seed: int = 0
    json_out: str = ""


def run(cfg: SweepConfig) -> dict:
    base = SubringSpec(cfg.p, cfg.variables, cfg.denominator)
    alg = algebra(base)
    elements = [alg.to_elem(v) for v in alg.elements()]
    budget = SearchBudget(cfg.factor_degree, cfg.fresh, cfg.refine)
    cases, lengths, failures = Counter(), Counter(), []
    start = time.perf_counter()
    for cs in itertools.product(elements, repeat=cfg.degree + 1):
        f = RPoly(cs, cfg.p)
        if f.is_zero() or rpoly_is_unit(f):
            continue
        a = atomize(f, budget, base=base, seed=cfg.seed)
        cases[a.case_tag] += 1
        lengths[(a.case_tag, a.length)] += 1
        prod = RPoly.t(cfg.p, 0)
        for g in a.factors:
            prod = prod * g
        n = unit_coeff_degree(f)
        bound = max(1, n) if n is not None else f.degree + 2
        if prod != f or a.length > bound or not a.all_certified:
            failures.append(str(f))
    return {
        "config": asdict(cfg),
        "inputs": sum(cases.values()),
        "cases": dict(cases),
        "lengths": {f"{c}:{n}": k for (c, n), k in sorted(lengths.items())},
        "failures": failures,
        "seconds": round(time.perf_counter() - start, 2),
    }


def main():
    cfg = parse_config(SweepConfig, __doc__.splitlines()[0])
    result = run(cfg)
    print(f"inputs: {result['inputs']}  seconds: {result['seconds']}")
    print(f"cases: {result['cases']}")
    for key, count in result["lengths"].items():
        print(f"  {key:>14}  {count}")
    print(f"failures: {len(result['failures'])}")
    for f in result["failures"][:20]:
        print(f"  {f}")
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump(result, fh, indent=2)
    return 1 if result["failures"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
