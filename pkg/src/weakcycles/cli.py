"""Command line front end.

Exit codes: 0 success, 1 usage or parameter error, 2 no cycle exists for
the requested graph (diagnosis on stderr), 3 verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import word_from_string, word_to_string
from .errors import CycleNotFound, LengthMismatch, WeakCycleError
from .euler import CycleResult, generate
from .families import Family, parse_family
from .graph import build, export_dot, summary
from .oracle import verify

EXIT_OK, EXIT_USAGE, EXIT_NO_CYCLE, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def format_cycle_file(cycle: CycleResult) -> str:
    header = f"# family={cycle.family} s={cycle.overlap} L={cycle.object_length} count={cycle.object_count}"
    return f"{header}\n{word_to_string(cycle.symbols)}\n"


def parse_cycle_file(text: str) -> tuple[dict, tuple[int, ...]]:
    """Split a cycle file into its header fields and symbol sequence.

    The header is optional; a bare line of symbols is accepted.
    """
    header: dict = {}
    body = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#"):
            for tok in line[1:].split():
                key, eq, value = tok.partition("=")
                if eq:
                    header[key] = value
        elif line:
            body.append(line)
    return header, word_from_string(" ".join(body))


def _overlap(args, family: Family) -> int:
    if getattr(args, "overlap", None) is not None:
        return args.overlap
    return family.word_length - 1


def _err(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)


def cmd_generate(args) -> int:
    family = parse_family(args.family)
    s = None if args.ucycle or args.overlap is None else args.overlap
    try:
        cycle = generate(family, s, canonical=args.canonical)
    except CycleNotFound as exc:
        print(f"no cycle: {exc}", file=sys.stderr)
        _err(exc.diagnosis)
        return EXIT_NO_CYCLE
    text = format_cycle_file(cycle)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    family = parse_family(args.family)
    with open(args.cycle_file) as fh:
        header, symbols = parse_cycle_file(fh.read())
    if args.overlap is not None:
        s = args.overlap
    elif "s" in header:
        s = int(header["s"])
    else:
        s = family.word_length - 1
    try:
        report = verify(symbols, family, s)
    except LengthMismatch as exc:
        _err({"error": "LengthMismatch", "message": str(exc)})
        return EXIT_USAGE
    print(report.to_json())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_count(args) -> int:
    print(parse_family(args.family).count())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    for w in parse_family(args.family).enumerate():
        print(word_to_string(w))
    return EXIT_OK


def cmd_inspect(args) -> int:
    family = parse_family(args.family)
    print(json.dumps(summary(build(family, _overlap(args, family))), sort_keys=True))
    return EXIT_OK


def cmd_dot(args) -> int:
    family = parse_family(args.family)
    sys.stdout.write(export_dot(build(family, _overlap(args, family))))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weakcycles", description="Universal and overlap cycles for weak orders.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="build a cycle and write it in cycle-file format")
    g.add_argument("family")
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--overlap", "-s", type=int)
    mode.add_argument("--ucycle", action="store_true", help="overlap = word length - 1 (default)")
    g.add_argument("--canonical", action="store_true", help="emit the least aligned rotation")
    g.add_argument("--out", "-o")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check a cycle file against a family")
    v.add_argument("cycle_file")
    v.add_argument("family")
    v.add_argument("--overlap", "-s", type=int)
    v.set_defaults(func=cmd_verify)

    for name, func, text in (
        ("count", cmd_count, "print the family size"),
        ("enumerate", cmd_enumerate, "print the family, one word per line"),
    ):
        c = sub.add_parser(name, help=text)
        c.add_argument("family")
        c.set_defaults(func=func)

    for name, func, text in (
        ("inspect", cmd_inspect, "print a JSON summary of the transition graph"),
        ("dot", cmd_dot, "write the transition graph as DOT"),
    ):
        c = sub.add_parser(name, help=text)
        c.add_argument("family")
        c.add_argument("--overlap", "-s", type=int)
        c.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WeakCycleError, ValueError, OSError) as exc:
        _err({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
