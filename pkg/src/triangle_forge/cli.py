"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import constructions as C
from .config import override_caps
from .engine import Triangle
from .numerics import display_value, format_value
from .nu_rho import nu, rho
from .paths import format_path, parse_path
from .perm_oracle import beta_bruteforce, entringer_bruteforce, nu_bruteforce, phi
from .verification import exact_xi_integral, mc_xi_integral, verify_suite

FORMATS = ("plain", "csv", "json")
INJECT_FAILURE_ENV = "TRIANGLE_FORGE_INJECT_FAILURE"


class UsageError(Exception):
    pass


def render_triangle(tri: Triangle, fmt: str) -> str:
    if fmt == "json":
        return tri.to_json() + "\n"
    cells = [[display_value(v) for v in row] for row in tri.rows]
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(cells)
        return buf.getvalue()
    width = max((len(r) for r in cells), default=0)
    widths = [max((len(r[m]) for r in cells if len(r) > m), default=0) for m in range(width)]
    lines = [" ".join(c.rjust(widths[m]) for m, c in enumerate(row)) for row in cells]
    return "".join(line + "\n" for line in lines)


def render_sequence(terms: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{"index": i, "value": format_value(v)} for i, v in terms]) + "\n"
    if fmt == "csv":
        return "".join(f"{i},{display_value(v)}\n" for i, v in terms)
    return " ".join(display_value(v) for _, v in terms) + "\n"


def _parse_perm(text: str) -> tuple[int, ...]:
    body = text.strip().removeprefix("(").removesuffix(")")
    try:
        sigma = tuple(int(t) for t in body.split(","))
    except ValueError:
        raise UsageError(f"malformed permutation: {text!r}") from None
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise UsageError(f"not a permutation of 1..{len(sigma)}: {text!r}")
    return sigma


def _parse_path_arg(text: str):
    try:
        return parse_path(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_triangle(args) -> int:
    tri = C.named_triangle(args.name, args.rows)
    sys.stdout.write(render_triangle(tri, args.format))
    return 0


def cmd_seq(args) -> int:
    sys.stdout.write(render_sequence(C.sequence(args.name, args.count), args.format))
    return 0


def cmd_verify(args) -> int:
    extra = []
    if os.environ.get(INJECT_FAILURE_ENV):
        extra.append(("injected failure", "", lambda: (0, 1)))
    report = verify_suite(args.depth, extra_checks=extra)
    if args.format == "json":
        sys.stdout.write(report.to_json() + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "parameters", "expected", "actual", "passed", "elapsed"])
        for r in report.records:
            w.writerow([r.name, r.parameters, r.expected, r.actual, r.passed, f"{r.elapsed:.4f}"])
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(report.to_table() + "\n")
    return 0 if report.ok else 1


def cmd_oracle(args) -> int:
    if args.what == "phi":
        out = format_path(phi(_parse_perm(args.perm)))
    elif args.what == "nu":
        p = _parse_path_arg(args.path)
        out = str(nu_bruteforce(p) if args.brute else nu(p))
    elif args.what == "rho":
        out = str(rho(_parse_path_arg(args.path)))
    elif args.what == "beta":
        out = str(beta_bruteforce(args.n))
    else:
        out = str(entringer_bruteforce(args.n, args.k))
    sys.stdout.write(out + "\n")
    return 0


def cmd_mc(args) -> int:
    est = mc_xi_integral(args.n, args.samples, args.seed, workers=args.workers)
    exact = exact_xi_integral(args.n)
    z = (est.estimate - float(exact)) / est.standard_error if est.standard_error else 0.0
    if args.format == "json":
        sys.stdout.write(json.dumps({
            "n": args.n, "estimate": est.estimate, "standard_error": est.standard_error,
            "samples": est.samples, "seed": est.seed, "exact": str(exact), "z": z,
        }) + "\n")
    else:
        sys.stdout.write(
            f"n={args.n} estimate={est.estimate:.8f} stderr={est.standard_error:.2e} "
            f"exact={exact} ({float(exact):.8f}) z={z:+.2f}\n"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triangle-forge",
        description="Matrix-generated number triangles, path weights and zeta(2n) coefficients.",
    )
    parser.add_argument("--cap", type=int, help="path enumeration cap (overrides $TRIANGLE_FORGE_CAP)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="print a named triangle")
    p.add_argument("name", choices=[t.value for t in C.TriangleId])
    p.add_argument("-r", "--rows", type=int, default=6)
    p.add_argument("-f", "--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("seq", help="print the first terms of a named sequence")
    p.add_argument("name", choices=[s.value for s in C.SequenceId])
    p.add_argument("-c", "--count", type=int, default=10)
    p.add_argument("-f", "--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="run the cross-method verification suite")
    p.add_argument("-d", "--depth", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("-f", "--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force and exact spot checks")
    osub = p.add_subparsers(dest="what", required=True)
    q = osub.add_parser("phi", help="step word of a permutation, e.g. 2,1,4,5,3")
    q.add_argument("perm")
    q = osub.add_parser("nu", help="preimage count of a path, e.g. '(0,0)' or 'U F D'")
    q.add_argument("path")
    q.add_argument("--brute", action="store_true", help="count by sweeping the symmetric group")
    q = osub.add_parser("rho", help="product weight of a path")
    q.add_argument("path")
    q = osub.add_parser("beta", help="zig-zag number by brute force")
    q.add_argument("n", type=int)
    q = osub.add_parser("entringer", help="Entringer number E(n, k) by brute force")
    q.add_argument("n", type=int)
    q.add_argument("k", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("mc", help="Monte Carlo estimate of the cyclic-min integral")
    p.add_argument("n", type=int)
    p.add_argument("--samples", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=20240607)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-f", "--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_mc)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    caps = {} if args.cap is None else {"paths": args.cap}
    try:
        with override_caps(**caps):
            return args.func(args)
    except (UsageError, ValueError, ArithmeticError) as exc:
        # CapExceeded is a ValueError
        print(f"triangle-forge: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
