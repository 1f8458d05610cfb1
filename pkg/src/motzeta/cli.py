"""Command line interface.

Exit status: 0 success, 1 failed verification (or no rational fit),
2 usage / parse / input error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import formats
from .dsl import MotiveSyntaxError, parse_motive
from .ffcount import (
    BudgetExceeded,
    NoRationalFit,
    PreconditionError,
    check_functional_equation,
    check_weil_bound,
    counts_tower,
    reconstruct_zeta,
    verify_lefschetz,
)
from .motive import ZetaContext, eval_zeta, point_counts
from .witt import ghost, w_add, w_mul, w_neg

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="motzeta", description="Exact zeta functions, Witt vectors and point counts.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeta", help="zeta function of a motive expression")
    p.add_argument("expr")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--order", type=int, help="also print the series expansion to this order")

    p = sub.add_parser("count", help="virtual point counts of a motive expression")
    p.add_argument("expr")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="number of extensions F_{q^n}")

    p = sub.add_parser("count-variety", help="brute-force counts of a variety spec file")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("reconstruct", help="rational zeta function from a counts file")
    p.add_argument("counts")

    p = sub.add_parser("verify-lefschetz", help="compare brute counts with Frobenius traces")
    p.add_argument("spec")
    p.add_argument("cohomology")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("witt", help="Witt ring operation on zeta files")
    p.add_argument("op", choices=["add", "sub", "mul", "neg", "ghost"])
    p.add_argument("lhs")
    p.add_argument("rhs", nargs="?")
    p.add_argument("--n", type=int, default=8, help="ghost length for 'ghost'")

    p = sub.add_parser("check", help="Weil-type checks on a curve zeta function")
    p.add_argument("kind", choices=["functional-equation", "weil-bound"])
    p.add_argument("zeta")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, default=1)
    return ap


def _context(q: int, order: int | None = None) -> ZetaContext:
    try:
        return ZetaContext(q, order or 10)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _positive(value: int, flag: str):
    if value < 1:
        raise UsageError(f"{flag} must be at least 1")


def _motive(src: str, q: int):
    def load(path: str):
        data = formats.load_cohomology(path)
        if data.q != q:
            raise ValueError(f"file is for q = {data.q}, not {q}")
        return data.complex

    return parse_motive(src, load)


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "zeta":
        ctx = _context(args.q, args.order)
        w = eval_zeta(_motive(args.expr, args.q), ctx)
        payload = formats.witt_to_json(w)
        if args.order is not None:
            payload["series"] = [formats.num_str(c) for c in w.series(args.order)]
        out(payload)
        return EXIT_OK
    if cmd == "count":
        _positive(args.n, "--n")
        ctx = _context(args.q)
        out(formats.counts_to_json(point_counts(_motive(args.expr, args.q), ctx, args.n)))
        return EXIT_OK
    if cmd == "count-variety":
        _positive(args.n, "--n")
        spec = formats.load_variety(args.spec)
        out(formats.counts_to_json(counts_tower(spec, args.n)))
        return EXIT_OK
    if cmd == "reconstruct":
        counts = formats.load_counts(args.counts)
        if len(counts) < 2:
            raise UsageError("reconstruction needs at least two counts")
        try:
            w = reconstruct_zeta(counts)
        except NoRationalFit as exc:
            out({"error": str(exc)})
            return EXIT_FAIL
        out(formats.witt_to_json(w))
        return EXIT_OK
    if cmd == "verify-lefschetz":
        _positive(args.n, "--n")
        spec = formats.load_variety(args.spec)
        coh = formats.load_cohomology(args.cohomology)
        if coh.q != spec.q:
            raise UsageError(f"cohomology is for q = {coh.q} but the variety is over F_{spec.q}")
        report = verify_lefschetz(spec, coh.complex, args.n)
        out(formats.report_to_json(report))
        return EXIT_OK if report.passed else EXIT_FAIL
    if cmd == "witt":
        lhs = formats.load_witt(args.lhs)
        if args.op in ("neg", "ghost"):
            if args.rhs is not None:
                raise UsageError(f"'{args.op}' takes one operand")
            if args.op == "ghost":
                _positive(args.n, "--n")
                out(formats.counts_to_json(ghost(lhs, args.n)))
            else:
                out(formats.witt_to_json(w_neg(lhs)))
            return EXIT_OK
        if args.rhs is None:
            raise UsageError(f"'{args.op}' needs two operands")
        rhs = formats.load_witt(args.rhs)
        result = {"add": w_add, "mul": w_mul, "sub": lambda a, b: w_add(a, w_neg(b))}[args.op](lhs, rhs)
        out(formats.witt_to_json(result))
        return EXIT_OK
    if cmd == "check":
        w = formats.load_witt(args.zeta)
        try:
            if args.kind == "functional-equation":
                ok = check_functional_equation(w, args.q, args.g)
            else:
                ok = check_weil_bound(w, args.q)
        except PreconditionError as exc:
            raise UsageError(f"precondition violated: {exc}") from None
        out({"kind": args.kind, "pass": ok})
        return EXIT_OK if ok else EXIT_FAIL
    raise UsageError(f"unknown command {cmd}")


def main(argv: Sequence[str] | None = None) -> int:
    def out(obj):
        sys.stdout.write(formats.dumps(obj) + "\n")

    try:
        args = build_parser().parse_args(argv)
        return _run(args, out)
    except UsageError as exc:
        print(f"motzeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MotiveSyntaxError as exc:
        print(f"motzeta: syntax error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"motzeta: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (formats.FormatError, OSError, ValueError) as exc:
        print(f"motzeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
