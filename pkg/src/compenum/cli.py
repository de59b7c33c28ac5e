"""Command line front end.

One subcommand per library artifact: exact counts, series prefixes,
extracted recurrences (JSON, round-trippable into `nth`), numeric
closed forms, the three-column mod-3 table, joint length counts, and
the verification suites.

Exit status: 0 on success, 1 when a verification report fails, 2 on
usage or parse errors (diagnostics on standard error).  Output is
deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from mpmath import mp

from . import closedform, genfun, oracle
from .bivariate import bivariate_table
from .partset import SetSpecError, parse_setspec
from .recurrence import LinearRecurrence, recurrence_from_gf

DISPLAY_DIGITS = 12


def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text):
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _real_str(x):
    return mp.nstr(x, DISPLAY_DIGITS)


def _complex_str(z):
    if z.imag == 0:
        return mp.nstr(z.real, DISPLAY_DIGITS)
    return mp.nstr(z, DISPLAY_DIGITS)


def _gf_recurrence(setspec):
    return recurrence_from_gf(genfun.composition_gf(parse_setspec(setspec)))


# -- subcommand handlers ----------------------------------------------------


def cmd_count(args, parser):
    A = parse_setspec(args.setspec)
    print(genfun.count(A, args.n))
    return 0


def cmd_series(args, parser):
    A = parse_setspec(args.setspec)
    coeffs = genfun.composition_series(A, args.limit)
    if args.format == "csv":
        print(",".join(str(c) for c in coeffs))
    elif args.format == "json":
        print(json.dumps(list(coeffs)))
    else:
        for n, c in enumerate(coeffs):
            print(n, c)
    return 0


def cmd_recurrence(args, parser):
    rec = _gf_recurrence(args.setspec)
    if args.format == "json":
        print(json.dumps(rec.to_dict()))
    else:
        print(f"order: {rec.order}")
        print("coeffs: " + ", ".join(str(c) for c in rec.coeffs))
        print(
            "corrections: "
            + (", ".join(f"{i}:{v}" for i, v in rec.corrections) or "none")
        )
        print("initial: " + ", ".join(str(t) for t in rec.initial_terms))
    return 0


def _poly_part_str(poly_part):
    pieces = []
    for i, q in enumerate(poly_part):
        if q == 0:
            continue
        if i == 0:
            pieces.append(str(q))
        elif i == 1:
            pieces.append(f"{q}*x")
        else:
            pieces.append(f"{q}*x^{i}")
    return " + ".join(pieces) if pieces else "0"


def cmd_closed_form(args, parser):
    gf = genfun.composition_gf(parse_setspec(args.setspec))
    pf = closedform.partial_fractions(gf, args.digits)
    print(f"generating function: {gf.reduce()}")
    print(f"polynomial part: {_poly_part_str(pf.poly_part)}")
    if not pf.poles:
        print("poles: none (coefficients terminate)")
        return 0
    report = closedform.dominance_report(gf, args.digits)
    rows = zip(pf.poles, pf.residue_coeffs, report.classifications)
    for i, (pole, res, label) in enumerate(rows, start=1):
        print(
            f"pole {i}: {_complex_str(pole.value)}  "
            f"residue {_complex_str(res)}  "
            f"modulus {_real_str(pole.modulus)}  [{label}]"
        )
    print(f"growth rate: {_real_str(report.growth_rate)}")
    print(f"unique dominant pole: {'yes' if report.unique_dominant else 'no'}")
    print(
        "nearest-integer rounding valid: "
        + ("yes" if report.nearest_integer_valid else "no")
    )
    return 0


def cmd_eval_closed(args, parser):
    gf = genfun.composition_gf(parse_setspec(args.setspec))
    pf = closedform.partial_fractions(gf, args.digits)
    value, _ = closedform.eval_closed(pf, args.n)
    print(_real_str(value))
    return 0


def cmd_nth(args, parser):
    if args.recurrence_file:
        if len(args.operands) != 1:
            parser.error("with --recurrence-file, give just n")
        with open(args.recurrence_file, encoding="utf-8") as fh:
            rec = LinearRecurrence.from_dict(json.load(fh))
        n = _parse_operand_n(args.operands[0], parser)
    else:
        if len(args.operands) != 2:
            parser.error("expected: nth <setspec> <n> (or nth <n> --recurrence-file F)")
        rec = _gf_recurrence(args.operands[0])
        n = _parse_operand_n(args.operands[1], parser)
    if args.mod is not None:
        if args.mod < 2:
            parser.error("--mod must be >= 2")
        print(rec.nth_mod(n, args.mod))
    else:
        print(rec.nth(n))
    return 0


def _parse_operand_n(text, parser):
    try:
        return _nonneg(text)
    except argparse.ArgumentTypeError as exc:
        parser.error(f"argument n: {exc}")


def cmd_bylength(args, parser):
    A = parse_setspec(args.setspec)
    row = bivariate_table(A, args.n).row(args.n)
    for m, c in enumerate(row):
        print(m, c)
    return 0


def cmd_table(args, parser):
    if not args.mod3:
        parser.error("pass --mod3 (the only table currently available)")
    limit = args.limit
    columns = []
    for spec in ("not:ap:1:3", "not:ap:2:3", "not:mod:3:0"):
        columns.append(_gf_recurrence(spec).terms(limit))
    for n in range(1, limit + 1):
        print(f"{n},{columns[0][n]},{columns[1][n]},{columns[2][n]}")
    return 0


def _verify_reports(args, parser):
    family = args.family
    limit = args.limit
    if family == "thm1":
        return [oracle.verify_theorem("thm1", limit)]
    if family == "thm2":
        ks = [args.k] if args.k is not None else range(2, 7)
        return [oracle.verify_theorem("thm2", limit, k=k) for k in ks]
    if family == "thm3":
        if args.k is None and args.m is None:
            return [
                oracle.verify_theorem("thm3", limit, k=k, m=m)
                for k in range(2, 7)
                for m in range(2, k)
            ]
        return [oracle.verify_theorem("thm3", limit, k=args.k, m=args.m)]
    if family == "cayley":
        return [oracle.verify_cayley_shift(limit)]
    if family == "zeilberger":
        if args.a is None and args.b is None:
            return [
                oracle.verify_sills_zeilberger(a, b, limit)
                for a in range(1, 5)
                for b in range(1, 5)
            ]
        a = args.a if args.a is not None else 1
        b = args.b if args.b is not None else 2
        return [oracle.verify_sills_zeilberger(a, b, limit)]
    if family == "oracle":
        rng = random.Random(args.seed)
        cap = min(limit, 16)  # enumeration is exponential in the limit
        return [
            oracle.verify_triangle(oracle.random_partset(rng), limit=cap)
            for _ in range(10)
        ]
    # family == "all"
    return list(oracle.run_verification_suite(args.seed, limit))


def cmd_verify(args, parser):
    reports = _verify_reports(args, parser)
    lenient = args.family == "all"
    expected = [
        lenient and oracle.expected_discrepancy(rep) for rep in reports
    ]
    overall = all(rep.passed or exp for rep, exp in zip(reports, expected))
    if args.format == "json":
        payload = {
            "passed": overall,
            "reports": [
                dict(rep.to_dict(), expected_discrepancy=exp)
                for rep, exp in zip(reports, expected)
            ],
        }
        print(json.dumps(payload))
    else:
        for rep, exp in zip(reports, expected):
            if rep.passed:
                status = "PASS"
            elif exp:
                status = "FAIL, documented"
            else:
                status = "FAIL"
            params = " ".join(f"{key}={val}" for key, val in rep.params.items())
            print(f"[{status}] {rep.name} {params}")
            for check in rep.checks:
                if check.passed:
                    print(f"    check pass: {check.name} ({len(check.rows)} rows)")
                else:
                    f = check.first_failure
                    print(
                        f"    check FAIL: {check.name}; first mismatch "
                        f"n={f.n}: lhs={f.lhs} rhs={f.rhs}"
                    )
            for note in rep.findings:
                print(f"    note: {note}")
        print("verification " + ("passed" if overall else "FAILED"))
    return 0 if overall else 1


# -- parser -----------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="compenum",
        description=(
            "Exact enumeration of integer compositions whose parts are "
            "restricted to, or must avoid, an eventually periodic set."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of compositions of n")
    p.add_argument("setspec")
    p.add_argument("n", type=_nonneg)
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("series", help="count series c(0)..c(limit)")
    p.add_argument("setspec")
    p.add_argument("--limit", type=_nonneg, default=20)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("recurrence", help="linear recurrence for the counts")
    p.add_argument("setspec")
    p.add_argument("--format", choices=("json", "plain"), default="json")
    p.set_defaults(handler=cmd_recurrence)

    p = sub.add_parser(
        "closed-form", help="poles, residues, and dominance of the count series"
    )
    p.add_argument("setspec")
    p.add_argument("--digits", type=int, default=50)
    p.set_defaults(handler=cmd_closed_form)

    p = sub.add_parser("eval-closed", help="evaluate the numeric closed form at n")
    p.add_argument("setspec")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--digits", type=int, default=50)
    p.set_defaults(handler=cmd_eval_closed)

    p = sub.add_parser("nth", help="single term, exact or modular")
    p.add_argument("operands", nargs="+", metavar="setspec/n")
    p.add_argument("--mod", type=int)
    p.add_argument("--recurrence-file", help="JSON recurrence instead of a setspec")
    p.set_defaults(handler=cmd_nth)

    p = sub.add_parser("bylength", help="counts of n split by number of parts")
    p.add_argument("setspec")
    p.add_argument("n", type=_nonneg)
    p.set_defaults(handler=cmd_bylength)

    p = sub.add_parser("table", help="three-column table of mod-3 count families")
    p.add_argument("--mod3", action="store_true")
    p.add_argument("--limit", type=_positive, default=20)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("verify", help="run a verification report family")
    p.add_argument(
        "family",
        choices=("thm1", "thm2", "thm3", "cayley", "zeilberger", "oracle", "all"),
    )
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=_positive, default=25)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its diagnostic (exit 2) or help (exit 0)
        return exc.code if exc.code is not None else 0
    try:
        return args.handler(args, parser)
    except SystemExit as exc:  # parser.error inside a handler
        return exc.code if exc.code is not None else 0
    except SetSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, closedform.ClosedFormError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
