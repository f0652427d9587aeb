"""Bounded strong-atom certificates for x1 + x2 t across subrings and degree bounds.

Reports the verdict, the number of enumerated candidates and the time for
each (d, degree) pair, optionally re-deciding small cases with the slower
unpruned route.  Example::

    python scripts/certify_two_variable.py --denominators 1 2 3 4 --degrees 1 2
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from _config import parse_config

from antimatter import RingElem, RPoly, SearchBudget, SubringSpec, TooLarge, certify_strong_atom


@dataclass
class CertifyConfig:
    p: int = 2
    denominators: tuple = (1, 2, 3, 4)
    degrees: tuple = (1, 2)
    max_candidates: int = 10**7
    cross_check_limit: int = 20000
    seed: int = 0


def main():
    cfg = parse_config(CertifyConfig, __doc__.splitlines()[0])
    p = cfg.p
    f = RPoly([RingElem.var(1, p), RingElem.var(2, p)], p)
    print(f"subject: {f}   p = {p}")
    print(f"{'d':>3} {'deg':>4} {'verdict':>22} {'enumerated':>11} {'seconds':>8}  cross-check")
    status = 0
    for d in cfg.denominators:
        for k in cfg.degrees:
            spec = SubringSpec(p, (1, 2), d)
            budget = SearchBudget(k, 0, 1, cfg.max_candidates)
            start = time.perf_counter()
            try:
                cert = certify_strong_atom(f, budget, spec, seed=cfg.seed)
            except TooLarge:
                print(f"{d:>3} {k:>4} {'too large':>22}")
                continue
            seconds = time.perf_counter() - start
            check = "-"
            try:
                small = SearchBudget(k, 0, 1, cfg.cross_check_limit)
                other = certify_strong_atom(f, small, spec, method="linear")
                check = "agrees" if other.verdict is cert.verdict else "DISAGREES"
                status |= check != "agrees"
            except TooLarge:
                pass
            print(f"{d:>3} {k:>4} {cert.verdict.value:>22} {cert.enumerated_count:>11} {seconds:>8.2f}  {check}")
    return status


if __name__ == "__main__":
    raise SystemExit(main())
