"""Command line front end: ``quadcf <command> ...``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from quadcf.approx import check_best_approximation, check_half_q_squared, check_legendre
from quadcf.core_cf import alt_representation, convergents, rational_cf
from quadcf.errors import InvariantViolation
from quadcf.observations import verify_rules
from quadcf.scan import PREDICATES, ScanConfig, main_scan
from quadcf.sqrtn import sqrt_cf
from quadcf.surd import QuadraticSurd, expand


def parse_target(text: str) -> QuadraticSurd:
    """``sqrt41``, ``sqrt(41)``, ``41`` or ``golden``."""
    text = text.strip().lower()
    if text in ("golden", "phi"):
        return QuadraticSurd.make(1, 5, 2)
    m = re.fullmatch(r"(?:sqrt\(?)?(\d+)\)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"cannot parse target {text!r}")
    return QuadraticSurd.make(0, int(m.group(1)), 1)


def cmd_expand(args) -> int:
    print(sqrt_cf(args.N).to_json())
    return 0


def cmd_expand_surd(args) -> int:
    s = QuadraticSurd.make(args.p, args.d, args.q)
    out = expand(s).to_dict()
    out["surd"] = {"P": str(s.P), "D": str(s.D), "Q": str(s.Q)}
    print(json.dumps(out))
    return 0


def cmd_rational(args) -> int:
    if args.den == 0:
        raise ValueError("denominator must be nonzero")
    x = Fraction(args.num, args.den)
    cf = rational_cf(x)
    out = {
        "value": f"{x.numerator}/{x.denominator}",
        "cf": [str(a) for a in cf.digits],
        "alt": [str(a) for a in alt_representation(cf).digits],
        "convergents": [f"{c.numerator}/{c.denominator}" for c in convergents(cf, len(cf))],
    }
    print(json.dumps(out))
    return 0


def cmd_scan(args) -> int:
    checks = tuple(args.checks.split(",")) if args.checks else tuple(PREDICATES)
    cfg = ScanConfig(
        N_min=args.min,
        N_max=args.max,
        checks=checks,
        out=args.out,
        emit_digits_max=args.emit_digits,
        jobs=args.jobs,
        strict=args.strict,
    )
    return main_scan(cfg)


def cmd_verify(args) -> int:
    report = verify_rules(args.n_max)
    print(report.to_json() if args.json else report.to_table())
    return 0 if report.ok else 1


def cmd_approx(args) -> int:
    x = args.target
    reports = [
        check_best_approximation(x, args.upto_index),
        check_half_q_squared(x, args.upto_index),
        check_legendre(x, args.qmax),
    ]
    print(json.dumps([r.to_dict() for r in reports], indent=2))
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadcf",
        description="Exact continued fractions of rationals, quadratic surds and sqrt(N).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="periodic continued fraction of sqrt(N)")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("expand-surd", help="expansion of (P + sqrt(D))/Q")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, default=1)
    p.set_defaults(func=cmd_expand_surd)

    p = sub.add_parser("rational", help="finite continued fraction of num/den")
    p.add_argument("num", type=int)
    p.add_argument("den", type=int)
    p.set_defaults(func=cmd_rational)

    p = sub.add_parser("scan", help="scan a range of N against the period predicates")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--checks", help=f"comma-separated subset of: {','.join(PREDICATES)}")
    p.add_argument("--strict", action="store_true", help="conjecture failures set exit status 1")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="JSON-lines report path")
    p.add_argument("--emit-digits", type=int, default=64,
                   help="write full periods up to this length (default 64)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-observations", help="check the (n, j) class rules")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("approx-check", help="exact checks of convergent approximation theorems")
    p.add_argument("--target", type=parse_target, required=True, help="sqrtN or golden")
    p.add_argument("--qmax", type=int, default=1000)
    p.add_argument("--upto-index", type=int, default=10)
    p.set_defaults(func=cmd_approx)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
