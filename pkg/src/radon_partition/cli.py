"""Command line: ``gen``, ``compute``, ``verify``, ``fuzz``.

Exit codes: 0 pass, 1 verification failure, 2 parse/usage error,
3 degenerate input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebraic import radon_algebraic
from .errors import DegenerateInputError, InvalidInputError
from .formats import certificate_to_dict, dumps_instance, loads_instance, pretty_json
from .geometry import general_position_violation
from .harness import fuzz, gen, parse_dims, verify_instance
from .recursive import radon_recursive

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3

ALGORITHMS = {"recursive": radon_recursive, "algebraic": radon_algebraic}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _read_instance(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    return loads_instance(text)


def _emit(obj) -> None:
    sys.stdout.write(pretty_json(obj) + "\n")


def cmd_gen(args) -> int:
    ps, meta = gen(args.dim, args.seed, args.bound)
    text = dumps_instance(ps, meta)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def cmd_compute(args) -> int:
    ps, _ = _read_instance(args.file)
    if len(ps) != ps.dim + 2:
        raise InvalidInputError(f"need {ps.dim + 2} points in dimension {ps.dim}, got {len(ps)}")
    bad = general_position_violation(ps)
    if bad is not None:
        raise DegenerateInputError(f"points {list(bad)} are affinely dependent", subset=bad)
    _emit(certificate_to_dict(ALGORITHMS[args.algo](ps)))
    return EXIT_PASS


def cmd_verify(args) -> int:
    ps, _ = _read_instance(args.file)
    report = verify_instance(ps)
    _emit(report.to_dict())
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_fuzz(args) -> int:
    dims = parse_dims(args.dims)
    summary = fuzz(dims, args.instances, args.seed, bound=args.bound, jobs=args.jobs)
    print(summary.table())
    return EXIT_PASS if summary.all_passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="radon-partition", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a random general-position instance")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("compute", help="print the radon certificate of an instance")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="recursive")
    p.add_argument("file", help="instance JSON, or - for stdin")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="cross-check both algorithms against the oracle")
    p.add_argument("file", help="instance JSON, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="generate and verify many instances")
    p.add_argument("--dims", default="1..6", help="inclusive range A..B within 1..8")
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateInputError as exc:
        print(json.dumps({"error": "degenerate", "subset": list(exc.subset), "message": str(exc)}),
              file=sys.stderr)
        return EXIT_DEGENERATE
    except (InvalidInputError, ValueError) as exc:
        print(json.dumps({"error": "invalid-input", "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
