"""Unit/nilpotent dichotomy over a finite subring, with nilpotency statistics.

For every element: zero, unit (inverse verified) or nilpotent (certificate
verified).  Tabulates exact nilpotency index against the p^N bound.
Example::

    python scripts/dichotomy.py --p 3 --variables 1 2 --denominator 2
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from _config import parse_config

from antimatter import RingElem, SubringSpec, elem_inverse, enumerate_elements, nil_certificate


@dataclass
class DichotomyConfig:
    p: int = 2
    variables: tuple = (1, 2)
    denominator: int = 2


def main():
    cfg = parse_config(DichotomyConfig, __doc__.splitlines()[0])
    spec = SubringSpec(cfg.p, cfg.variables, cfg.denominator)
    kinds, pairs = Counter(), Counter()
    for a in enumerate_elements(spec):
        if a.is_zero():
            kinds["zero"] += 1
        elif a.is_unit():
            assert a * elem_inverse(a) == RingElem.one(cfg.p)
            kinds["unit"] += 1
        else:
            c = nil_certificate(a)
            assert c.exact_index <= c.bound_exponent
            kinds["nilpotent"] += 1
            pairs[(str(c.min_potential), c.exact_index, c.bound_exponent)] += 1
    print(f"subring: p={spec.p} vars={list(spec.variables)} d={spec.denominator}  ({spec.size()} elements)")
    print(dict(kinds))
    print(f"{'min potential':>14} {'exact index':>12} {'bound p^N':>10} {'count':>6}")
    for (m, k, b), n in sorted(pairs.items(), key=lambda kv: (kv[0][2], kv[0][1])):
        print(f"{m:>14} {k:>12} {b:>10} {n:>6}")


if __name__ == "__main__":
    main()
