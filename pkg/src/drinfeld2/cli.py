"""Command-line interface.

Subcommands operating on a single module (charpoly, classify, endring) take
the defining data via --p --s --n --gamma-T --g --delta; field elements are
comma-separated base-p digits, low degree first.  Subcommands operating on an
isogeny-class family (census, chi, realize) take the prime P (as a polynomial
over F_q, either 'T^2+1' or the coefficient list '1,0,1') or --d to select
the least monic irreducible of that degree, together with --m.

Exit codes: 0 success, 1 domain error (bad mathematical input), 2 usage
error, 3 discrepancies found under --strict.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import census as census_mod
from . import frobenius
from .classify import classify as classify_module, endomorphism_order
from .drinfeld import DrinfeldModule
from .ff import FieldError, IncompatibleFieldError, ext_make, field_make
from .ore import OreDomainError
from .polyring import (
    PolyDomainError,
    is_irreducible,
    least_irreducible_poly,
    poly_from_str,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_STRICT = 3

DOMAIN_ERRORS = (
    FieldError,
    IncompatibleFieldError,
    PolyDomainError,
    OreDomainError,
    frobenius.CharPolyError,
    census_mod.RealizationBoundError,
    ValueError,
    ZeroDivisionError,
)


def _add_module_args(sub):
    sub.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    sub.add_argument("--s", type=int, default=1, help="q = p^s (default 1)")
    sub.add_argument("--n", type=int, required=True, help="L = F_{q^n}")
    sub.add_argument(
        "--gamma-T", required=True, help="gamma(T) in L, base-p digits '2,1,...'"
    )
    sub.add_argument("--g", required=True, help="t coefficient of Phi_T")
    sub.add_argument("--delta", required=True, help="t^2 coefficient, nonzero")


def _add_family_args(sub):
    sub.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    sub.add_argument("--s", type=int, default=1, help="q = p^s (default 1)")
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--P", dest="P", help="monic irreducible P, e.g. 'T^2+1' or '1,0,1'")
    group.add_argument(
        "--d", type=int, help="use the least monic irreducible of this degree"
    )
    sub.add_argument("--m", type=int, required=True, help="n = m * deg P")


def _add_output_args(sub):
    sub.add_argument(
        "--output", choices=("json", "csv", "plain"), default="json",
        help="output format (default json)",
    )
    sub.add_argument("--out", help="write output to this file instead of stdout")
    sub.add_argument("--seed", type=int, help="seed for any randomized checks")
    sub.add_argument(
        "--strict", action="store_true",
        help="exit with status 3 if any discrepancy is reported",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="drinfeld2",
        description="Exact arithmetic for rank-2 Drinfeld F_q[T]-modules.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (
        ("charpoly", "Frobenius characteristic polynomial of one module"),
        ("classify", "full per-module classification report"),
        ("endring", "endomorphism-order data read off the discriminant"),
    ):
        sub = subs.add_parser(name, help=helptext)
        _add_module_args(sub)
        _add_output_args(sub)

    for name, helptext in (
        ("census", "enumerate admissible isogeny classes for (q, P, m)"),
        ("chi", "count distinct Euler-Poincare divisors for (q, P, m)"),
        ("realize", "brute-force which classes occur over F_{q^(md)}"),
    ):
        sub = subs.add_parser(name, help=helptext)
        _add_family_args(sub)
        _add_output_args(sub)

    return parser


def _build_module(args):
    base = field_make(args.p, args.s)
    ext = ext_make(base, args.n)
    gamma = ext.from_str(args.gamma_T)
    g = ext.from_str(args.g)
    delta = ext.from_str(args.delta)
    return DrinfeldModule(ext, gamma, g, delta)


def _resolve_P(args):
    base = field_make(args.p, args.s)
    if args.P is not None:
        P = poly_from_str(base, args.P)
        if P.is_constant() or P.lc() != base.one or not is_irreducible(P):
            raise PolyDomainError("P must be monic irreducible of degree >= 1")
    else:
        if args.d < 1:
            raise PolyDomainError("--d must be >= 1")
        P = least_irreducible_poly(base, args.d)
    if args.m < 1:
        raise PolyDomainError("--m must be >= 1")
    return P


def _emit(args, payload, plain_lines, csv_text=None):
    if args.output == "json":
        text = json.dumps(payload, indent=2)
    elif args.output == "csv":
        if csv_text is None:
            text = "\n".join(
                "%s,%s" % (k, json.dumps(v)) for k, v in _flatten(payload)
            )
        else:
            text = csv_text
    else:
        text = "\n".join(plain_lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, prefix + k + "." if prefix else k + ".")
        return
    yield prefix.rstrip("."), obj


def _cmd_charpoly(args):
    dm = _build_module(args)
    cp = frobenius.charpoly(dm)
    payload = {"module": dm.to_json(), "charpoly": cp.to_json()}
    lines = ["module: %r" % dm, "charpoly: %s" % cp]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_classify(args):
    dm = _build_module(args)
    report = classify_module(dm)
    payload = {"module": dm.to_json(), "report": report.to_json()}
    lines = [
        "module: %r" % dm,
        "charpoly: %s" % report.charpoly,
        "supersingular: %s" % report.is_supersingular,
        "height: %d" % report.height,
        "disc: %s" % report.disc,
        "end ring kind: %s" % report.end_ring_kind.value,
        "chi: %s" % report.chi,
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_endring(args):
    dm = _build_module(args)
    cp = frobenius.charpoly(dm)
    kind, g, omega, conductors, flagged = endomorphism_order(cp)
    payload = {
        "module": dm.to_json(),
        "charpoly": cp.to_json(),
        "end_ring_kind": kind.value,
        "conductor_g": None if g is None else g.to_human(),
        "omega": None if omega is None else omega.to_human(),
        "admissible_conductors": [f.to_human() for f in conductors],
        "non_coprime_conductors": [f.to_human() for f in flagged],
    }
    lines = [
        "module: %r" % dm,
        "charpoly: %s" % cp,
        "end ring kind: %s" % kind.value,
        "conductor g: %s" % g,
        "omega: %s" % omega,
        "admissible conductors: %s" % ", ".join(str(f) for f in conductors),
        "flagged (divisible by P): %s" % ", ".join(str(f) for f in flagged),
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _report_lines(report):
    lines = [
        "q=%d d=%d m=%d case=%s" % (report.q, report.d, report.m, report.case),
        "ordinary: %d" % report.ordinary_count,
        "supersingular (c=0): %d" % report.ss2_count,
        "supersingular (other): %d" % report.ss3_count,
        "supersingular (square): %d" % report.ss4_count,
        "total: %d" % report.total,
        "formula total: %s" % report.formula_total,
        "chi distinct: %s" % report.chi_distinct_enumerative,
        "chi formula: %s" % report.chi_formula,
    ]
    if report.realized_distinct is not None:
        lines.append("realized distinct: %d" % report.realized_distinct)
        lines.append("ordinary coverage: %s" % report.realized_ordinary_coverage)
    for note in report.discrepancies:
        lines.append("discrepancy: %s" % note)
    return lines


def _census_like(args, do_realize):
    P = _resolve_P(args)
    report = census_mod.full_report(P, args.m, do_realize=do_realize)
    csv_text = census_mod.CSV_HEADER + "\n" + census_mod.csv_row(report)
    _emit(args, report.to_json(), _report_lines(report), csv_text=csv_text)
    if args.strict and report.discrepancies:
        return EXIT_STRICT
    return EXIT_OK


def _cmd_census(args):
    return _census_like(args, do_realize=False)


def _cmd_realize(args):
    return _census_like(args, do_realize=True)


def _cmd_chi(args):
    P = _resolve_P(args)
    count, groups = census_mod.chi_census(P, args.m)
    closed = census_mod.chi_formula(P.field.order, int(P.deg), args.m)
    discrepancies = []
    closed_int = census_mod._rational_to_report(closed, "chi_formula", discrepancies)
    if closed_int is not None and closed_int != count:
        discrepancies.append(
            "chi_formula %d != enumerative chi count %d" % (closed_int, count)
        )
    payload = {
        "q": P.field.order,
        "P": P.to_human(),
        "m": args.m,
        "chi_distinct_enumerative": count,
        "chi_formula": closed_int,
        "class_sizes": sorted(len(v) for v in groups.values()),
        "discrepancies": discrepancies,
    }
    lines = [
        "q=%d P=%s m=%d" % (P.field.order, P, args.m),
        "chi distinct: %d" % count,
        "chi formula: %s" % closed_int,
    ] + ["discrepancy: %s" % note for note in discrepancies]
    _emit(args, payload, lines)
    if args.strict and discrepancies:
        return EXIT_STRICT
    return EXIT_OK


_COMMANDS = {
    "charpoly": _cmd_charpoly,
    "classify": _cmd_classify,
    "endring": _cmd_endring,
    "census": _cmd_census,
    "chi": _cmd_chi,
    "realize": _cmd_realize,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return _COMMANDS[args.command](args)
    except DOMAIN_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
