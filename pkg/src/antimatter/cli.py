"""Command-line front end: ``antimatter <command> ARGS [--p P] [--json] ...``.

Exit status: 0 on success, 1 on user error, 2 when a computed factorization
fails its product check.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import schemas
from .atomizer import atomize
from .core import format_exponent
from .errors import AntimatterError, ParseError, VerificationError
from .fp import format_factorization, fp_factor
from .oracle import SearchBudget, certify_strong_atom, default_max_candidates, enumerate_elements
from .parse import parse_element, parse_expression
from .ring import divisor_chain, elem_proot, nil_certificate
from .rpoly import kill_variables, reduce_mod_M, survive_witness
from .subring import SubringSpec


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2, help="prime characteristic (default 2)")
    common.add_argument("--json", action="store_true", help="emit JSON (schema 1)")
    common.add_argument("--budget-degree", type=_nonneg, default=2, help="max t-degree of each factor")
    common.add_argument("--budget-fresh", type=_nonneg, default=2, help="fresh variables allowed")
    common.add_argument("--budget-refine", type=_nonneg, default=2, help="denominator refinement factor")
    common.add_argument("--max-candidates", type=_nonneg, default=None,
                        help="search cap (default $ANTIMATTER_MAX_CANDIDATES or 10^8)")
    common.add_argument("--seed", type=int, default=0, help="shard order; 0 is canonical")

    parser = _Parser(prog="antimatter", description="Exact arithmetic and strong-atom factorization in R[t].")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_, *args):
        p = sub.add_parser(name, parents=[common], help=help_)
        for a in args:
            p.add_argument(a)
        return p

    cmd("eval", "print the canonical form", "expr")
    cmd("mul", "multiply two expressions", "a", "b")
    cmd("nilindex", "nilpotency certificate of an element", "element")
    cmd("proot", "p-th root of an element", "element")
    cmd("chain", "divisor chain by repeated p-th roots", "element").add_argument("--k", type=_nonneg, default=3)
    cmd("witness", "surviving minimal monomial of f*g", "f", "g")
    red = cmd("reduce", "image mod M (or modulo killed variables)", "f")
    red.add_argument("--keep", type=_int_list, default=None, help="kill every variable not listed")
    cmd("atomize", "factor into strong atoms", "f")
    cert = cmd("certify", "bounded strong-atom certificate", "f")
    cert.add_argument("--vars", type=_int_list, default=None, help="subring variables (default: those of f)")
    cert.add_argument("--denominator", type=int, default=None, help="subring denominator (default: refined)")
    cert.add_argument("--keep", type=_int_list, default=None, help="certify via the image keeping these variables")
    cert.add_argument("--method", choices=["graded", "linear", "brute"], default="graded")
    en = sub.add_parser("enumerate", parents=[common], help="list a finite subring")
    en.add_argument("--vars", type=_int_list, required=True)
    en.add_argument("--denominator", type=int, required=True)
    en.add_argument("--count", action="store_true", help="print only the number of elements")
    return parser


def _budget(args) -> SearchBudget:
    cap = args.max_candidates if args.max_candidates is not None else default_max_candidates()
    return SearchBudget(args.budget_degree, args.budget_fresh, max(1, args.budget_refine), cap)


def _show(f) -> str:
    return str(f[0]) if (f.degree or 0) == 0 else str(f)


def _run(args) -> tuple[dict, list[str]]:
    """Return the JSON document and the text lines for one command."""
    p = args.p
    c = args.command
    if c == "eval":
        f = parse_expression(args.expr, p)
        return {"result": _show(f)}, [_show(f)]
    if c == "mul":
        f = parse_expression(args.a, p) * parse_expression(args.b, p)
        return {"result": _show(f)}, [_show(f)]
    if c == "proot":
        r = elem_proot(parse_element(args.element, p))
        return {"result": str(r)}, [str(r)]
    if c == "nilindex":
        a = parse_element(args.element, p)
        cert = nil_certificate(a)
        m = format_exponent(cert.min_potential)
        doc = {"element": str(a), "min_potential": m, "N": cert.N,
               "bound_exponent": cert.bound_exponent, "exact_index": cert.exact_index}
        return doc, [f"element: {a}", f"min potential m = {m}", f"N = {cert.N}",
                     f"bound p^N = {cert.bound_exponent}", f"exact index = {cert.exact_index}"]
    if c == "chain":
        chain = divisor_chain(parse_element(args.element, p), args.k)
        return {"chain": [str(a) for a in chain]}, [f"c{i} = {a}" for i, a in enumerate(chain)]
    if c == "witness":
        w = survive_witness(parse_expression(args.f, p), parse_expression(args.g, p))
        doc = {"j": w.j, "j_prime": w.j_prime, "z1": str(w.z1), "z2": str(w.z2),
               "monomial": str(w.product_monomial), "degree": w.degree,
               "total_potential": format_exponent(w.total_potential), "coefficient": w.coefficient}
        return doc, [f"j = {w.j}", f"j' = {w.j_prime}", f"z1 = {w.z1}", f"z2 = {w.z2}",
                     f"monomial = {w.product_monomial}", f"degree = {w.degree}",
                     f"total potential = {doc['total_potential']}", f"coefficient = {w.coefficient}"]
    if c == "reduce":
        f = parse_expression(args.f, p)
        if args.keep is not None:
            k = kill_variables(f, args.keep)
            return {"image": str(f), "killed": _show(k)}, [_show(k)]
        img = reduce_mod_M(f)
        fact = None
        if img.degree is not None and img.degree >= 1:
            fact = format_factorization(*fp_factor(img))
        lines = [f"image: {img}"] + ([f"factorization: {fact}"] if fact else [])
        return {"image": str(img), "factorization": fact}, lines
    if c == "atomize":
        a = atomize(parse_expression(args.f, p), _budget(args), seed=args.seed)
        lines = [f"input: {a.input}", f"case: {a.case_tag}", "factors:"]
        for i, (g, cert) in enumerate(zip(a.factors, a.certificates), 1):
            lines.append(f"  {i}. {g}  [{cert.verdict.value}, {cert.enumerated_count} candidates]")
        ok = "ok" if a.within_bound else "EXCEEDED"
        lines.append(f"length {a.length} <= bound {a.bound}: {ok}")
        lines.append("product check: ok")
        return a.to_json(), lines
    if c == "certify":
        f = parse_expression(args.f, p)
        budget = _budget(args)
        spec = None
        if args.vars is not None or args.denominator is not None:
            variables = args.vars if args.vars is not None else sorted(f.variables())
            d = args.denominator if args.denominator is not None else f.denominator() * budget.refine_denominator
            spec = SubringSpec(p, tuple(variables), d)
        cert = certify_strong_atom(f, budget, spec, args.keep, args.seed, args.method)
        lines = [f"subject: {f}", f"verdict: {cert.verdict.value}",
                 f"subring: p={cert.spec.p} vars={list(cert.spec.variables)} d={cert.spec.denominator}",
                 f"degree bound: {budget.max_factor_degree}, fresh: {budget.fresh_variables}",
                 f"enumerated: {cert.enumerated_count}"]
        if cert.factors:
            lines.append(f"factors: {cert.factors[0]} | {cert.factors[1]}")
        return cert.to_json(), lines
    if c == "enumerate":
        spec = SubringSpec(p, tuple(args.vars), args.denominator)
        cap = args.max_candidates if args.max_candidates is not None else default_max_candidates()
        elems = [str(a) for a in enumerate_elements(spec, cap)]
        doc = {"spec": spec.to_json(), "count": len(elems)}
        if args.count:
            return doc, [str(len(elems))]
        doc["elements"] = elems
        return doc, elems
    raise _UsageError(f"unknown command {c}")  # pragma: no cover


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        doc, lines = _run(args)
    except _UsageError as exc:
        return _fail("UsageError", str(exc), want_json, 1)
    except ParseError as exc:
        return _fail("ParseError", exc.pretty() if not want_json else str(exc), want_json, 1)
    except VerificationError as exc:
        return _fail("VerificationError", str(exc), want_json, 2)
    except AntimatterError as exc:
        return _fail(type(exc).__name__, str(exc), want_json, 1)
    if args.json:
        out = {"schema": schemas.SCHEMA_VERSION, "command": args.command, **doc}
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return 0


def _fail(kind: str, message: str, want_json: bool, status: int) -> int:
    if want_json:
        print(json.dumps({"schema": schemas.SCHEMA_VERSION, "error": kind, "message": message}, sort_keys=True))
    else:
        print(f"{kind}: {message}" if not message.startswith("error:") else message, file=sys.stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
