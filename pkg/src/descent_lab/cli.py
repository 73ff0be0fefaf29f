"""
``descent-lab`` command line.

    descent-lab table  --rank 3 --algebra class --format csv
    descent-lab check  --rank 3 --suite all
    descent-lab chars  --rank 3 --figure chars.png
    descent-lab marks  --rank 4 --format json --output marks.json

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity,
4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import __version__
from .checks import SUITES, run_suite
from .documents import (
    build_characters_document,
    build_marks_document,
    build_table_document,
    to_csv,
    to_json,
)
from .errors import CapacityError, DescentLabError
from .weyl import check_rank

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_IO = 4


def write_atomic(path: str, text: str) -> None:
    """Write UTF-8 text via a temporary file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".descent-lab-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, output) -> None:
    if output:
        write_atomic(output, text)
    else:
        sys.stdout.write(text)


def _serialise(doc, fmt: str) -> str:
    return to_csv(doc) if fmt == "csv" else to_json(doc)


def _render(doc, figure) -> None:
    if figure:
        from .plotting import render_figure

        render_figure(doc, figure)


def cmd_table(args) -> int:
    check_rank(args.rank)
    doc = build_table_document(args.rank, args.algebra, args.strategy)
    if args.verify_cross:
        other = build_table_document(args.rank, args.algebra, "brute" if
                                     doc.metadata["strategy"] == "matrix" else "matrix")
        if other.cells != doc.cells:
            for i, row in enumerate(doc.cells):
                for j, cell in enumerate(row):
                    if cell != other.cells[i][j]:
                        print(f"cross-check failed at ({doc.labels[i]}, {doc.labels[j]}): "
                              f"{cell} vs {other.cells[i][j]}", file=sys.stderr)
                        return EXIT_FAILED
        doc.metadata["strategy"] = "brute+matrix"
    _emit(_serialise(doc, args.format), args.output)
    _render(doc, args.figure)
    return EXIT_OK


def cmd_check(args) -> int:
    check_rank(args.rank)
    results = run_suite(args.rank, args.suite, args.strategy)
    passed = all(r.passed for r in results)
    report = {
        "rank": args.rank,
        "suite": args.suite,
        "passed": passed,
        "checks": [
            {k: v for k, v in r.as_dict().items() if k != "seconds"} for r in results
        ],
    }
    _emit(json.dumps(report, indent=2, ensure_ascii=False) + "\n", args.output)
    for r in results:
        if not r.passed:
            print(f"FAILED {r.name} (rank {r.rank}): {r.counterexample}", file=sys.stderr)
            break
    return EXIT_OK if passed else EXIT_FAILED


def cmd_chars(args) -> int:
    check_rank(args.rank)
    doc = build_characters_document(args.rank, args.strategy)
    _emit(_serialise(doc, args.format), args.output)
    _render(doc, args.figure)
    return EXIT_OK


def cmd_marks(args) -> int:
    check_rank(args.rank)
    doc = build_marks_document(args.rank, args.strategy)
    _emit(_serialise(doc, args.format), args.output)
    _render(doc, args.figure)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="descent-lab",
        description="Descent algebras of S_{n+1} and their class algebras, computed exactly.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, required=True, help="n, for the group S_{n+1}")
    common.add_argument("--strategy", choices=("brute", "matrix", "auto"), default="auto")
    common.add_argument("--output", metavar="PATH", help="write here instead of stdout")

    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("--format", choices=("json", "csv"), default="json")
    data.add_argument("--figure", metavar="PATH", help="also render a heatmap (png, pdf, svg)")

    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", parents=[common, data], help="basis multiplication table")
    table.add_argument("--algebra", choices=("class", "solomon"), default="class")
    table.add_argument("--verify-cross", action="store_true",
                       help="compute with both strategies and compare")
    table.set_defaults(func=cmd_table)

    check = sub.add_parser("check", parents=[common], help="run verification suites")
    check.add_argument("--suite", choices=("all",) + SUITES, default="all")
    check.set_defaults(func=cmd_check)

    chars = sub.add_parser("chars", parents=[common, data], help="permutation character table")
    chars.set_defaults(func=cmd_chars)

    marks = sub.add_parser("marks", parents=[common, data], help="parabolic table of marks")
    marks.set_defaults(func=cmd_marks)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DescentLabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
