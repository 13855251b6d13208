"""Command-line interface.

Exit codes: 0 success / true verdict, 1 false verdict, 2 usage or input
error, 3 enumeration cap exceeded.  All outputs are pure functions of argv
(seeds included), so identical invocations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import census, css, csst, fqlinear, hermitian, statevec
from .fqlinear import EnumerationCapError
from .galois import field_from_order, make_field

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _parse_field(args):
    if args.q is not None:
        return field_from_order(args.q)
    if args.p is None or args.e is None:
        raise ValueError("specify either --q or both --p and --e")
    modulus = None
    if args.modulus:
        modulus = [int(c) for c in args.modulus.replace(",", " ").split()]
    return make_field(args.p, args.e, modulus)


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def cmd_code(args) -> int:
    if args.action == "sample":
        fld = _parse_field(args)
        rng = np.random.default_rng(args.seed)
        code = fqlinear.sample_code(fld, args.n, args.k, rng)
        _emit(fqlinear.dumps_code(code), args.out)
        return EXIT_OK
    # info
    code = fqlinear.load_code(args.file)
    dual_code = fqlinear.dual(code)
    report = {
        "schema": "qcsst-code-v1",
        "q": code.q,
        "n": code.n,
        "k": code.k,
        "d": fqlinear.min_distance(code, cap=args.enum_cap),
        "dual_k": dual_code.k,
        "dual_d": fqlinear.min_distance(dual_code, cap=args.enum_cap),
    }
    _emit(_json_dump(report), args.out)
    return EXIT_OK


def cmd_css(args) -> int:
    c1 = fqlinear.load_code(args.c1)
    c2 = fqlinear.load_code(args.c2)
    code = css.make_css(c1, c2, cap=args.enum_cap)
    _emit(_json_dump(css.css_report(code)), args.out)
    return EXIT_OK


def cmd_csst(args) -> int:
    c1 = fqlinear.load_code(args.c1)
    c2 = fqlinear.load_code(args.c2)
    report = csst.is_csst(c1, c2, cap=args.enum_cap)
    payload = {"schema": "qcsst-csst-check-v1", "csst": report.to_json(),
               "bounds": None, "css": None}
    if report.verdict:
        code = css.make_css(c1, c2, cap=args.enum_cap)
        payload["css"] = css.css_report(code)
        try:
            payload["bounds"] = csst.check_rate_distance_bounds(
                code, report, cap=args.enum_cap).to_json()
        except EnumerationCapError:
            payload["bounds"] = "unavailable: distance enumeration cap exceeded"
    _emit(_json_dump(payload), args.out)
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_density(args) -> int:
    est = census.estimate_pair_density(args.n, args.k1, args.k2, args.alpha,
                                       args.beta, args.q, args.N, args.seed)
    bound = census.density_lower_bound(args.n, args.k1, args.k2, args.alpha,
                                       args.beta, args.q)
    lines = ["# qcsst-density-v1", census.DENSITY_CSV_HEADER,
             census.density_csv_row(est, bound)]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_weightword(args) -> int:
    est = census.estimate_weightword_density(args.n, args.k, args.omega,
                                             args.q, args.N, args.seed)
    lines = ["# qcsst-weightword-v1", census.WEIGHTWORD_CSV_HEADER,
             census.weightword_csv_row(est)]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_hermitian(args) -> int:
    curve = hermitian.build_curve(args.q)
    result = hermitian.hermitian_csst(curve, args.m)
    payload = result.to_json()
    if args.emit_codes:
        os.makedirs(args.emit_codes, exist_ok=True)
        c1_path = os.path.join(args.emit_codes, f"hermitian_q{args.q}_m{args.m}_c1.code")
        c2_path = os.path.join(args.emit_codes, f"hermitian_q{args.q}_m{args.m}_c2.code")
        fqlinear.save_code(result.css.c1, c1_path)
        fqlinear.save_code(result.css.c2, c2_path)
        payload["emitted"] = {"c1": c1_path, "c2": c2_path}
    _emit(_json_dump(payload), args.out)
    return EXIT_OK if result.certification.verdict else EXIT_FALSE


def cmd_statevec(args) -> int:
    c1 = fqlinear.load_code(args.c1)
    c2 = fqlinear.load_code(args.c2)
    ok, resid = statevec.verify_cs_steane_equivalence(
        c1, c2, tol=args.tol, cap=args.dense_cap)
    payload = {"schema": "qcsst-statevec-v1", "equivalent": ok,
               "max_residual": resid, "tolerance": args.tol}
    _emit(_json_dump(payload), args.out)
    return EXIT_OK if ok else EXIT_FALSE


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def _add_field_args(sub) -> None:
    sub.add_argument("--q", type=int, help="field order (prime power)")
    sub.add_argument("--p", type=int, help="characteristic")
    sub.add_argument("--e", type=int, help="extension degree")
    sub.add_argument("--modulus", help="comma-separated modulus coefficients, "
                                       "low degree first")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcsst",
        description="CSS / CSS-T quantum codes from classical codes over GF(q)")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("code", help="sample or inspect classical codes")
    acts = p.add_subparsers(dest="action", required=True)
    s = acts.add_parser("sample", help="uniformly random [n, k] code")
    _add_field_args(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_code)
    i = acts.add_parser("info", help="parameters of a code file")
    i.add_argument("file")
    i.add_argument("--enum-cap", type=int, default=fqlinear.DEFAULT_ENUM_CAP)
    i.add_argument("--out")
    i.set_defaults(func=cmd_code)

    p = subs.add_parser("css", help="build a CSS code from a nested pair")
    acts = p.add_subparsers(dest="action", required=True)
    b = acts.add_parser("build")
    b.add_argument("--c1", required=True)
    b.add_argument("--c2", required=True)
    b.add_argument("--enum-cap", type=int, default=fqlinear.DEFAULT_ENUM_CAP)
    b.add_argument("--out")
    b.set_defaults(func=cmd_css)

    p = subs.add_parser("csst", help="certify a CSS-T pair")
    acts = p.add_subparsers(dest="action", required=True)
    c = acts.add_parser("check")
    c.add_argument("--c1", required=True)
    c.add_argument("--c2", required=True)
    c.add_argument("--enum-cap", type=int, default=fqlinear.DEFAULT_ENUM_CAP)
    c.add_argument("--out")
    c.set_defaults(func=cmd_csst)

    p = subs.add_parser("density", help="Monte Carlo pair-density experiment")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_density)

    p = subs.add_parser("weightword", help="Monte Carlo fixed-weight-word experiment")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--omega", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_weightword)

    p = subs.add_parser("hermitian", help="Hermitian-curve CSS-T family")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--emit-codes", metavar="DIR")
    p.add_argument("--out")
    p.set_defaults(func=cmd_hermitian)

    p = subs.add_parser("statevec", help="dense-state verification")
    acts = p.add_subparsers(dest="action", required=True)
    v = acts.add_parser("verify")
    v.add_argument("--c1", required=True)
    v.add_argument("--c2", required=True)
    v.add_argument("--tol", type=float, default=statevec.STATE_TOL)
    v.add_argument("--dense-cap", type=int, default=statevec.DEFAULT_STATE_CAP)
    v.add_argument("--out")
    v.set_defaults(func=cmd_statevec)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
