"""Command-line entry point ``otg``.

Exit codes: 0 success/true, 1 false or non-member, 2 usage error,
3 parse error.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .construction import dtg_build, realize_weights
from .enumeration import count_classes, count_transitive_orientations, enumerate_orientation_classes
from .io import ParseError, emit_edge_list, export_dot, parse_binary_sequence, parse_edge_list, parse_sequence
from .recognition import canonical_form, displit_partition, extract_sequence, realize_graph_weights
from .selfcheck import run_all
from .sequences import SequenceParseError, canonicalize, enumerate_canonical

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


_SEQ_COMMANDS = {"build", "weights", "canon", "orientations"}
_DASHED_SEQ = re.compile(r"-[-+0]*\*?")


class UsageError(Exception):
    pass


def _vertices(vs) -> str:
    return " ".join(str(v) for v in sorted(vs))


def _read_graph(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_edge_list(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc.args[0]}", exc.line) from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def cmd_build(args, out) -> int:
    g = dtg_build(parse_sequence(args.seq))
    out.write(export_dot(g) if args.out == "dot" else emit_edge_list(g))
    return EXIT_OK


def cmd_weights(args, out) -> int:
    w = realize_weights(parse_sequence(args.seq))
    out.write("weights: " + " ".join(map(str, w.weights)) + "\n")
    out.write(f"threshold: {w.threshold}\n")
    return EXIT_OK


def cmd_canon(args, out) -> int:
    out.write(f"{canonicalize(parse_sequence(args.seq))}\n")
    return EXIT_OK


def cmd_iso(args, out) -> int:
    forms = []
    for path in (args.file_a, args.file_b):
        form = canonical_form(_read_graph(path))
        out.write(f"{path}: {form if form is not None else 'non-member'}\n")
        forms.append(form)
    same = forms[0] is not None and forms[0] == forms[1]
    out.write(f"isomorphic: {'true' if same else 'false'}\n")
    return EXIT_OK if same else EXIT_FALSE


def cmd_recognize(args, out) -> int:
    g = _read_graph(args.file)
    seq = extract_sequence(g)
    if seq is None:
        out.write("member: false\n")
        return EXIT_FALSE
    p = displit_partition(g)
    w = realize_graph_weights(g)
    out.write("member: true\n")
    out.write(f"sequence: {seq}\n")
    out.write(f"canonical: {canonicalize(seq)}\n")
    out.write(f"top: {_vertices(p.top)}\n")
    out.write(f"independent: {_vertices(p.independent)}\n")
    out.write(f"bottom: {_vertices(p.bottom)}\n")
    out.write("weights: " + " ".join(map(str, w.weights)) + "\n")
    out.write(f"threshold: {w.threshold}\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    out.write(f"{count_classes(args.n)}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    for s in enumerate_canonical(args.n):
        out.write(f"{s}\n")
    return EXIT_OK


def cmd_orientations(args, out) -> int:
    b = parse_binary_sequence(args.seq)
    out.write(f"{count_transitive_orientations(b)}\n")
    if args.list:
        for s in enumerate_orientation_classes(b):
            out.write(f"{s}\n")
    return EXIT_OK


def cmd_selfcheck(args, out) -> int:
    ok = True
    for name, passed, detail in run_all(args.max_n):
        out.write(f"{'PASS' if passed else 'FAIL'} {name}: {detail}\n")
        ok = ok and passed
    return EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="otg", description="Oriented threshold graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the graph of a creation sequence")
    p.add_argument("seq")
    p.add_argument("--out", choices=("edgelist", "dot"), default="edgelist")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("weights", help="integer weights and threshold realizing a sequence")
    p.add_argument("seq")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("canon", help="canonical form of a sequence")
    p.add_argument("seq")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("iso", help="decide isomorphism of two oriented threshold graphs")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("recognize", help="membership test with certificates")
    p.add_argument("file")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("count", help="number of isomorphism classes on n vertices")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list canonical sequences on n vertices")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("orientations", help="transitive orientations of a threshold graph")
    p.add_argument("seq", help="binary sequence, e.g. 1010* or +0+0*")
    p.add_argument("--list", action="store_true", help="also print one canonical sequence per class")
    p.set_defaults(func=cmd_orientations)

    p = sub.add_parser("selfcheck", help="run the brute-force oracle suites")
    p.add_argument("--max-n", type=_positive, default=4)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def _protect_sequences(argv: list[str]) -> list[str]:
    # "-+0*" would otherwise be read as an option cluster
    if not argv or argv[0] not in _SEQ_COMMANDS or "--" in argv:
        return argv
    dashed = [a for a in argv[1:] if a.startswith("-") and a != "--" and _DASHED_SEQ.fullmatch(a)]
    if not dashed:
        return argv
    rest = [a for a in argv[1:] if a not in dashed]
    return [argv[0], *rest, "--", *dashed]


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = _protect_sequences(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (ParseError, SequenceParseError) as exc:
        print(f"otg: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, ValueError) as exc:
        print(f"otg: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
