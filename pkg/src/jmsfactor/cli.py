"""Command line interface.

Exit codes: 0 success, 1 a verification or identity check failed,
2 bad usage or input (including characteristic 2 and composite moduli).
"""
from __future__ import annotations

import argparse
import math
import sys

from .analysis import (CharacterTable, check_identities, delta_survey, identity_ids,
                       jacobi_sigma)
from .errors import DimensionMismatch, JMSError, MalformedInput
from .field import Field, field_from_string
from .formats import (dump_json, load_json, operator_from_json,
                      report_to_json, word_from_json, word_to_json)
from .factor import factorize
from .jordan import unit_index
from .transvect import TransvectionSpec, transvection_operator, word_standard_tau
from .words import verify

OK, FAILED, USAGE = 0, 1, 2


def _field(args) -> Field | None:
    return field_from_string(args.field) if getattr(args, "field", None) else None


def _unit(text: str) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in text.replace("(", "").replace(")", "").split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 'i,j', got {text!r}") from exc
    return i, j


def cmd_factorize(args) -> int:
    f = _field(args)
    T = operator_from_json(load_json(args.input), f, args.n)
    rep = factorize(T, strategy=args.strategy)
    dump_json(report_to_json(rep), args.output)
    if args.stats:
        print(f"length {rep.length}  build {rep.stats['build_seconds']:.3f}s  "
              f"verify {rep.stats['verify_seconds']:.3f}s", file=sys.stderr)
    return OK if rep.verified else FAILED


def cmd_verify(args) -> int:
    w = word_from_json(load_json(args.input))
    T = operator_from_json(load_json(args.target))
    f = _field(args)
    if f is not None and (w.field != f or T.field != f):
        raise MalformedInput(f"inputs are not over {f}")
    if args.n is not None and w.n != args.n:
        raise DimensionMismatch(f"word has n = {w.n}, expected {args.n}")
    rep = verify(w, T)
    print(f"verified {str(rep.verified).lower()}  length {rep.length}")
    return OK if rep.verified else FAILED


def cmd_check(args) -> int:
    f = _field(args) or Field()
    results = check_identities(args.identity, f, args.n, samples=args.samples, seed=args.seed)
    width = max(len(r.identity) for r in results)
    for r in results:
        line = f"{r.identity:<{width}}  {r.field:<6} n={r.n}  {'pass' if r.passed else 'FAIL'}"
        if r.counterexample:
            line += f"  {r.counterexample}"
        print(line)
    if args.output:
        dump_json([r.as_dict() for r in results], args.output)
    return OK if all(r.passed for r in results) else FAILED


def cmd_survey(args) -> int:
    Field(args.p)  # rejects 2 and composite p
    if args.what == "delta":
        s = delta_survey(args.p, args.n)
        print(f"p={s.p} n={s.n} generators={[v for v, _ in s.generators]} "
              f"order={s.order} of {s.p - 1} {'full' if s.full else 'PROPER SUBGROUP'}")
        for g in sorted(s.table):
            print(f"  {g}: {list(s.table[g])}")
        return OK if s.full else FAILED
    table = CharacterTable.build(args.p)
    ok = True
    print(f"p={args.p} m={args.m} generator={table.generator} sqrt(p)={math.sqrt(args.p):.6f}")
    for j in range(1, args.p - 1):
        s = jacobi_sigma(args.p, args.m, j, table)
        good = abs(s.magnitude - s.expected_magnitude) <= 1e-6
        if args.p >= 5:
            good = good and s.magnitude < args.p - 2
        ok &= good
        print(f"  j={j:<3} |Sigma|={s.magnitude:.6f}  {s.classification.value:<13} "
              f"{'ok' if good else 'MISMATCH'}")
    return OK if ok else FAILED


def cmd_transvection(args) -> int:
    f = _field(args) or Field()
    t = f(args.t)
    w = word_standard_tau(args.n, args.target, args.source, t, method=args.method)
    spec = TransvectionSpec(unit_index(args.n, *args.target), unit_index(args.n, *args.source), t.value)
    rep = verify(w, transvection_operator(f, args.n, spec))
    dump_json(word_to_json(w), args.output)
    if args.stats:
        print(f"length {len(w)}  verified {str(rep.verified).lower()}", file=sys.stderr)
    return OK if rep.verified else FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jmsfactor",
                                 description="Write linear maps on n x n matrices as compositions "
                                             "of Jordan multiplication operators.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, need_n=False):
        p.add_argument("--field", help="'Q' or 'Fp:<p>' (p an odd prime)")
        p.add_argument("--n", type=int, required=need_n, help="matrix size n (operators are n^2 x n^2)")

    p = sub.add_parser("factorize", help="factor an operator matrix read from JSON")
    common(p)
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.add_argument("--stats", action="store_true", help="print word length and timings")
    p.add_argument("--strategy", choices=["diagonal", "idempotents"], default="diagonal")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("verify", help="check that a word evaluates to a target operator")
    common(p)
    p.add_argument("--input", required=True, help="word JSON")
    p.add_argument("--target", required=True, help="operator JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="run the exact identity suite")
    common(p)
    p.add_argument("--identity", default="all", help="identity id or 'all': " + ", ".join(identity_ids()))
    p.add_argument("--samples", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_check, n=2)

    p = sub.add_parser("survey", help="determinant subgroup or character-sum tables")
    p.add_argument("what", choices=["delta", "jacobi"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=2)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("transvection", help="emit a word for E_b -> E_b + t E_a")
    common(p, need_n=True)
    p.add_argument("--target", type=_unit, required=True, help="unit a as 'i,j'")
    p.add_argument("--source", type=_unit, required=True, help="unit b as 'k,l'")
    p.add_argument("--t", default="1")
    p.add_argument("--method", choices=["direct", "corner-basis"], default="direct")
    p.add_argument("--output")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_transvection)
    return ap


def _glue_scalar_values(argv):
    # argparse takes "-1/3" for an option; bind such values to --t explicitly
    out = []
    it = iter(argv)
    for a in it:
        if a == "--t":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--t={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = ap.parse_args(_glue_scalar_values(argv))
    try:
        return args.func(args)
    except JMSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
