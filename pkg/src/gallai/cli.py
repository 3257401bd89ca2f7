"""Command-line front end.

Subcommands: check, construct, verify, generate, crosscheck, partition.
Exit codes: 0 success or feasible, 1 semantic negative (infeasible
sequence, rainbow triangle, oracle mismatch), 2 usage, parse, or size
guard.  All informational output is byte-stable for identical inputs;
--quiet suppresses it without touching exit codes or written files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable

from .coloring import EdgeColoring, color_degrees, find_rainbow_triangle
from .construct import chain_coloring, realize, uniform_coloring
from .document import parse_document, render_document, render_dot
from .errors import (
    DocumentError,
    InfeasibleSequenceError,
    MalformedSequenceError,
    NotGallaiError,
    SizeGuardError,
)
from .feasibility import FeasibilityReport, check_sequence
from .oracle import ENUMERATION_SIZE_LIMIT, brute_force_gallai_partition, crosscheck

CROSSCHECK_DEFAULT_LIMIT = 5


def _printer(quiet: bool) -> Callable[[str], None]:
    if quiet:
        return lambda line: None
    return lambda line: print(line)


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _fmt_values(values) -> str:
    return ", ".join(str(v) for v in values)


def _parse_sequence(text: str) -> tuple[int, ...]:
    tokens = [t.strip() for t in text.split(",")]
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise MalformedSequenceError(f"not a comma-separated integer list: {text!r}") from None


def _slack_lines(report: FeasibilityReport) -> list[str]:
    header = ("k", "d_k", "slack")
    rows = [
        (str(k), str(report.values[k - 1]), str(report.slacks[k - 1]))
        for k in range(1, report.n + 1)
    ]
    widths = [max(len(header[c]), *(len(r[c]) for r in rows)) for c in range(3)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(f.rjust(w) for f, w in zip(row, widths)))
    return lines


def _verdict_line(report: FeasibilityReport) -> str:
    if report.feasible:
        return "verdict: feasible"
    return f"verdict: infeasible (first violation at k={report.first_violation})"


def _read_coloring(path: str) -> EdgeColoring:
    return parse_document(Path(path).read_text())


def _deliver(coloring: EdgeColoring, args, out: Callable[[str], None]) -> None:
    """Write the coloring to --output or stdout, and optionally a DOT file."""
    text = render_document(coloring)
    if args.output:
        Path(args.output).write_text(text)
        out(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    if args.dot:
        Path(args.dot).write_text(render_dot(coloring))
        out(f"wrote {args.dot}")


def _emit_degrees(coloring: EdgeColoring, args, out: Callable[[str], None]) -> None:
    # When the document itself goes to stdout, keep the info line parseable
    # as a document comment.
    prefix = "# " if args.output is None else ""
    out(prefix + "degrees: " + _fmt_values(sorted(color_degrees(coloring))))


def cmd_check(args) -> int:
    report = check_sequence(_parse_sequence(args.sequence))
    out = _printer(args.quiet)
    for line in _slack_lines(report):
        out(line)
    out(_verdict_line(report))
    return 0 if report.feasible else 1


def cmd_construct(args) -> int:
    out = _printer(args.quiet)
    try:
        coloring = realize(_parse_sequence(args.sequence))
    except InfeasibleSequenceError as exc:
        for line in _slack_lines(exc.report):
            out(line)
        out(_verdict_line(exc.report))
        _fail(str(exc))
        return 1
    _emit_degrees(coloring, args, out)
    _deliver(coloring, args, out)
    return 0


def cmd_verify(args) -> int:
    coloring = _read_coloring(args.input)
    out = _printer(args.quiet)
    degrees = color_degrees(coloring)
    out(f"vertices: {coloring.n}")
    out(f"colors: {len(coloring.color_set())}")
    out("degrees: " + _fmt_values(degrees))
    out("sorted: " + _fmt_values(sorted(degrees)))
    witness = find_rainbow_triangle(coloring)
    if witness is not None:
        i, j, k = witness.vertices
        a, b, c = witness.colors
        out(f"rainbow triangle: ({i}, {j}, {k}) colors ({a}, {b}, {c})")
        out("gallai: no")
        return 1
    out("gallai: yes")
    report = check_sequence(sorted(degrees))
    if report.feasible:
        out("degree sequence: feasible")
    else:
        # Unreachable if the theory holds; never silence it.
        print(
            "theorem violation: Gallai coloring with infeasible degree "
            f"sequence (first violation at k={report.first_violation})",
            file=sys.stderr,
        )
    return 0


def cmd_generate(args) -> int:
    out = _printer(args.quiet)
    if args.kind == "chain":
        coloring = chain_coloring(args.size)
    else:
        coloring = uniform_coloring(args.size)
    _emit_degrees(coloring, args, out)
    _deliver(coloring, args, out)
    return 0


def cmd_crosscheck(args) -> int:
    n = args.n
    if n < 1 or n > ENUMERATION_SIZE_LIMIT:
        raise SizeGuardError(f"enumeration supports 1 <= n <= {ENUMERATION_SIZE_LIMIT}")
    if n > CROSSCHECK_DEFAULT_LIMIT and not args.allow_large:
        raise SizeGuardError(f"n = {n} is slow; pass --allow-large to run it")
    result = crosscheck(n)
    out = _printer(args.quiet)
    out(f"n={n}: {len(result.realizable)} realizable, {len(result.feasible)} feasible")
    if result.equal:
        out("sets match")
        return 0
    for seq in sorted(result.only_realizable):
        out("only realizable: " + _fmt_values(seq))
    for seq in sorted(result.only_feasible):
        out("only feasible: " + _fmt_values(seq))
    return 1


def cmd_partition(args) -> int:
    coloring = _read_coloring(args.input)
    out = _printer(args.quiet)
    try:
        partition = brute_force_gallai_partition(coloring)
    except NotGallaiError as exc:
        _fail(str(exc))
        return 1
    out(f"parts: {len(partition.parts)}")
    for idx, part in enumerate(partition.parts):
        out(f"part {idx}: " + " ".join(str(v) for v in part))
    out("cross colors: " + " ".join(str(c) for c in sorted(partition.cross_colors)))
    for (i, j), c in sorted(partition.part_pair_color.items()):
        out(f"pair {i} {j}: color {c}")
    return 0


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("-o", "--output", metavar="PATH", help="write the coloring document here instead of stdout")
    sub.add_argument("--dot", metavar="PATH", help="also write a DOT export for graph viewers")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gallai",
        description="Decide, realize, and inspect color degree sequences of rainbow-triangle-free colorings.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    def sub(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = subs.add_parser(name, help=help_text)
        p.add_argument("--quiet", action="store_true", help="suppress reports; rely on exit codes and files")
        p.set_defaults(func=handler)
        return p

    p = sub("check", cmd_check, "decide feasibility of a degree sequence")
    p.add_argument("sequence", help="comma-separated nondecreasing integers, e.g. 1,2,2")

    p = sub("construct", cmd_construct, "build a witness coloring for a feasible sequence")
    p.add_argument("sequence", help="comma-separated nondecreasing integers")
    _add_output_flags(p)

    p = sub("verify", cmd_verify, "check a coloring document for rainbow triangles")
    p.add_argument("input", help="coloring document path")

    p = sub("generate", cmd_generate, "emit a named family member")
    p.add_argument("kind", choices=("chain", "uniform"))
    p.add_argument("size", type=int, help="vertex count for chain, bit count for uniform")
    _add_output_flags(p)

    p = sub("crosscheck", cmd_crosscheck, "compare enumerated degree sequences against the feasibility test")
    p.add_argument("n", type=int)
    p.add_argument("--allow-large", action="store_true", help=f"permit n = {ENUMERATION_SIZE_LIMIT}")

    p = sub("partition", cmd_partition, "find a Gallai partition of a coloring document")
    p.add_argument("input", help="coloring document path")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (MalformedSequenceError, DocumentError, SizeGuardError) as exc:
        _fail(str(exc))
        return 2
    except OSError as exc:
        _fail(str(exc))
        return 2
    except ValueError as exc:
        _fail(str(exc))
        return 2


def entry() -> None:
    raise SystemExit(main())
