"""Command line interface.

Subcommands ``run``, ``compose`` and ``enumerate``. Exit codes: 0 success,
1 input or validation error, 2 no equilibrium within the step cap, 64
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import algebra, fuzzy, jsonio, partition
from .errors import SchemeMismatch, SuperfuzzError, ValidationError
from .fuzzy import SuperStateVector
from .models import MaxStepsExceeded, ModelKind, Side, run_model
from .report import json_report, text_report

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_CONVERGENCE = 2
EXIT_USAGE = 64

# counts printed in an earlier published listing, kept for the notes
_PUBLISHED_COUNTS = {
    ("all", 3, 3): (14, "the combination row cut {2} with column cuts {1, 2} is missing from it"),
    ("symmetric", 4, 4): (6, "the cut set {1, 2, 3} is missing from it"),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive_int(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return val


def _non_negative_float(text: str) -> float:
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not val >= 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative number, got {text!r}")
    return val


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superfuzz", description="Supermatrix algebra and multi-expert fuzzy models.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    r = sub.add_parser("run", help="iterate a model to its hidden pattern")
    r.add_argument("--model", required=True, help="model JSON file")
    r.add_argument("--initial", required=True, help="state JSON file, or inline JSON (object or array)")
    r.add_argument("--side", choices=["domain", "range", "x", "y"], help="stimulus space (not for FCM)")
    r.add_argument("--max-steps", type=_positive_int, help="step cap (default from SUPERFUZZ_MAX_STEPS or model size)")
    r.add_argument("--tol", type=_non_negative_float, default=1e-9, help="FAM convergence tolerance")
    r.add_argument("--format", choices=["text", "json"], default="text")

    c = sub.add_parser("compose", help="combine matrices and write the result as JSON")
    c.add_argument(
        "--op",
        required=True,
        choices=["multiply", "add", "transpose", "pseudo-transpose", "moment", "pseudo-product"],
    )
    c.add_argument("--semiring", choices=["plus", "maxmin"], default="plus")
    c.add_argument("--a", required=True, help="left operand matrix JSON")
    c.add_argument("--b", help="right operand matrix JSON (multiply, add)")

    e = sub.add_parser("enumerate", help="list or count partition schemes")
    e.add_argument("--rows", required=True, type=_positive_int)
    e.add_argument("--cols", required=True, type=_positive_int)
    e.add_argument("--class", dest="klass", choices=["all", "symmetric", "pseudo"], default="all")
    e.add_argument("--count-only", action="store_true")
    return p


def _load_initial(text: str) -> SuperStateVector | list:
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        data = jsonio.parse_json(text, "--initial")
        if isinstance(data, list):
            return jsonio._num_list(data, "--initial")
        return jsonio.state_from_dict(data, "--initial")
    return jsonio.load_state(text)


def cmd_run(args, out, err) -> int:
    model = jsonio.load_model(args.model)
    if model.kind is ModelKind.FCM and args.side is not None:
        raise UsageError("--side does not apply to fcm models")
    if model.kind is not ModelKind.FCM and args.side is None:
        raise UsageError(f"--side is required for {model.kind.value} models")
    initial = _load_initial(args.initial)
    side = None if args.side is None else Side.parse(args.side)
    trace = run_model(model, initial, side, args.max_steps, args.tol)
    if args.format == "json":
        request = {
            "model": args.model,
            "initial": args.initial,
            "side": None if side is None else side.value,
            "max_steps": args.max_steps,
            "tol": args.tol,
        }
        out.write(json.dumps(json_report(model, trace, request), indent=2) + "\n")
    else:
        out.write(text_report(model, trace))
    if isinstance(trace.verdict, MaxStepsExceeded):
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


_BINARY_OPS = {"multiply", "add"}


def cmd_compose(args, out, err) -> int:
    if args.op in _BINARY_OPS and args.b is None:
        raise UsageError(f"--b is required for --op {args.op}")
    if args.op not in _BINARY_OPS and args.b is not None:
        raise UsageError(f"--op {args.op} takes a single operand; drop --b")
    if args.op == "add" and args.semiring != "plus":
        raise UsageError("--op add is entrywise addition; use --semiring plus")
    s = algebra.Semiring.parse(args.semiring)
    a = jsonio.load_matrix(args.a)
    b = jsonio.load_matrix(args.b) if args.b else None
    if args.op == "multiply":
        res = algebra.multiply(a, b, s)
    elif args.op == "add":
        res = algebra.add(a, b)
    elif args.op == "transpose":
        res = algebra.transpose(a)
    elif args.op == "pseudo-transpose":
        res = algebra.pseudo_transpose(a)
    elif args.op == "moment":
        if s is algebra.Semiring.MAX_MIN:
            res = fuzzy.minor_product_moment(a)
        elif not a.row_cuts:
            res = algebra.multiply(a, algebra.transpose(a), s)
        elif not a.col_cuts:
            res = algebra.multiply(algebra.transpose(a), a, s)
        else:
            raise SchemeMismatch(
                f"moment needs a special row or column matrix; got row_cuts {list(a.row_cuts)} "
                f"and col_cuts {list(a.col_cuts)}"
            )
    else:
        res = fuzzy.super_pseudo_product(a)
    out.write(jsonio.dumps(jsonio.matrix_to_dict(res)))
    return EXIT_OK


def cmd_enumerate(args, out, err) -> int:
    n, m, klass = args.rows, args.cols, args.klass
    if klass != "all" and n != m:
        raise UsageError(f"--class {klass} needs a square matrix, got {n}x{m}")
    schemes = partition.enumerate_partitions(n, m)
    if klass == "symmetric":
        schemes = [s for s in schemes if partition.is_symmetric_class(partition.classify_partition(s, n, m), n, m)]
    elif klass == "pseudo":
        schemes = [s for s in schemes if partition.is_pseudo_class(partition.classify_partition(s, n, m), n, m)]
    notes = []
    known = _PUBLISHED_COUNTS.get((klass, n, m))
    if known is not None and known[0] != len(schemes):
        notes.append(
            f"note: a published listing gives {known[0]} for this case; exhaustive enumeration gives "
            f"{len(schemes)} ({known[1]})"
        )
    if args.count_only:
        out.write(f"{len(schemes)}\n")
        for line in notes:
            out.write(line + "\n")
    else:
        for s in schemes:
            out.write(json.dumps(s.to_dict()) + "\n")
        for line in notes:
            err.write(line + "\n")
    return EXIT_OK


_COMMANDS = {"run": cmd_run, "compose": cmd_compose, "enumerate": cmd_enumerate}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        err.write(f"superfuzz {args.command}: usage error: {exc}\n")
        return EXIT_USAGE
    except ValidationError as exc:
        err.write(f"superfuzz {args.command}: invalid model:\n")
        for issue in exc.issues:
            err.write(f"  {issue}\n")
        return EXIT_INPUT
    except (SuperfuzzError, ValueError, IndexError) as exc:
        err.write(f"superfuzz {args.command}: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
