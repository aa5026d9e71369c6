"""``mfw`` command-line driver.

    mfw run <file> [--format json|csv|text] [--field Q|GF:p] [--jobs N] [--cap N]
    mfw check <file>
    mfw corpus A<n> --c C [--a A]

Exit codes: 0 success, 1 usage or parse error, 2 validation or engine
error, 3 a verify query produced a failing report.  Results go to standard
output, diagnostics to standard error.
"""
from __future__ import annotations

import argparse
import re
import sys

from ._version import __version__
from .corpus import FamilySpec, program_text
from .dsl import parse_program
from .errors import MFWError, ParseError
from .runner import FORMATS, RunOptions, all_passed, build, render, run_program
from .scalars import make_field

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_FAIL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _field(text: str):
    try:
        return make_field(text)
    except MFWError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mfw", description="Graded matrix factorizations and push-forward checks.")
    p.add_argument("--version", action="version", version=f"mfw {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    run = sub.add_parser("run", help="execute the queries of a .mfw program")
    run.add_argument("file")
    run.add_argument("--format", choices=FORMATS, default="json")
    run.add_argument("--field", type=_field, default=None, help="override the field (Q or GF:p)")
    run.add_argument("--jobs", type=_positive, default=1, help="worker processes for table cells")
    run.add_argument("--cap", type=_positive, default=None, help="cap on linear unknowns per Hom")
    chk = sub.add_parser("check", help="parse and validate a program without running queries")
    chk.add_argument("file")
    cor = sub.add_parser("corpus", help="print the .mfw program of a built-in family")
    cor.add_argument("family", help="A<n>, e.g. A3")
    cor.add_argument("--c", type=int, required=True, help="exponent of w in F = x^(n+1) + w^c")
    cor.add_argument("--a", type=int, default=None, help="degree of w (defaults to (n+1)/c)")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str):
    return parse_program(_read(path))


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.command == "corpus":
            m = re.fullmatch(r"A(\d+)", args.family)
            if not m:
                raise ParseError(f"unknown family {args.family!r}; expected A<n>")
            n = int(m.group(1))
            a = args.a if args.a is not None else (n + 1) // args.c if args.c else 0
            try:
                spec = FamilySpec(n, args.c, a)
            except MFWError as exc:
                print(f"mfw: {exc}", file=sys.stderr)
                return EXIT_USAGE
            sys.stdout.write(program_text(spec))
            return EXIT_OK
        program = _load(args.file)
        if args.command == "check":
            build(program)
            print(f"ok: {len(program.declarations)} declarations, {len(program.queries)} queries")
            return EXIT_OK
        opts = RunOptions(args.format, args.field, args.jobs)
        if args.cap is not None:
            opts.cap = args.cap
        outputs = run_program(program, opts)
        sys.stdout.write(render(outputs, args.format))
        return EXIT_OK if all_passed(outputs) else EXIT_FAIL
    except (OSError, UnicodeDecodeError) as exc:
        print(f"mfw: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"mfw: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MFWError as exc:
        print(f"mfw: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
