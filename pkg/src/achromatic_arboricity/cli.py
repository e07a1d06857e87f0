"""Command-line interface.

Exit codes: 0 success / valid coloring, 1 usage error, 2 unparsable input,
3 invalid coloring, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .bounds import bounds_summary
from .construction import build_coloring
from .document import DocumentError, decode_json, encode_dot, encode_json
from .graphcore import verify_coloring
from .projplane import NotPrimeError
from .solver import DEFAULT_MAX_NODES, exact_value

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _count(text: str) -> int:
    """Node counts may be written as ``1000000`` or ``1e6``."""
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value < 0 or value != int(value):
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return int(value)


def parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:(?:\.\.|-|:)\s*(\d+))?\s*", text)
    if not m:
        raise UsageError(f"bad range {text!r}; use LO..HI")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if not 2 <= lo <= hi:
        raise UsageError(f"range must satisfy 2 <= lo <= hi, got {lo}..{hi}")
    return lo, hi


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_bounds(args) -> int:
    if args.n < 2:
        raise UsageError(f"n must be >= 2, got {args.n}")
    s = bounds_summary(args.n)
    if args.json:
        print(json.dumps(s.as_dict()))
    else:
        print(f"n = {s.n}")
        print(f"upper {s.upper}" + ("" if s.n >= 5 else " (exact value)"))
        print(f"lower {s.lower} ({s.lower_source})")
        if s.exact is not None:
            print(f"exact {s.exact}")
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        coloring = build_coloring(args.q)
    except NotPrimeError as exc:
        print(f"error: NotPrime: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = verify_coloring(coloring)
    if not report.is_valid:
        print(f"internal error: construction failed verification: {report.summary()}",
              file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "dot":
        text = encode_dot(coloring)
    else:
        meta = {"construction": "projective-plane", "q": args.q}
        if not args.reproducible:
            meta["tool_version"] = __version__
        text = encode_json(coloring, meta)
    _emit(text, args.output)
    if args.output not in (None, "-"):
        print(f"wrote K_{coloring.n} coloring with {coloring.k} classes to {args.output}",
              file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.path == "-":
            text = sys.stdin.read()
        else:
            with open(args.path, encoding="utf-8") as fh:
                text = fh.read()
        coloring, _ = decode_json(text)
    except (OSError, DocumentError, UnicodeDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = verify_coloring(coloring)
    if args.json:
        print(json.dumps({
            "n": coloring.n,
            "k": coloring.k,
            "is_valid": report.is_valid,
            "partition_ok": report.partition_ok,
            "acyclic_failures": report.acyclic_failures,
            "pair_failures": [list(p) for p in report.pair_failures],
            "diagnostics": report.diagnostics,
        }))
    else:
        print(f"n={coloring.n} k={coloring.k}: {report.summary()}")
        for line in report.diagnostics:
            print(f"  {line}")
        if report.acyclic_failures:
            print(f"  classes with a cycle: {report.acyclic_failures}")
        if report.pair_failures:
            shown = report.pair_failures[:20]
            more = "" if len(report.pair_failures) <= 20 else " ..."
            print(f"  pairs without a cycle: {shown}{more}")
    return EXIT_OK if report.is_valid else EXIT_INVALID


def cmd_search(args) -> int:
    if args.n < 2:
        raise UsageError(f"n must be >= 2, got {args.n}")
    result = exact_value(args.n, max_nodes=args.max_nodes, max_seconds=args.max_seconds)
    if args.json:
        print(json.dumps({
            "n": result.n,
            "status": result.status.value,
            "lower": result.lower,
            "upper": result.upper,
            "nodes_explored": result.nodes_explored,
            "elapsed": round(result.elapsed, 3),
            "attempts": [[k, st.value, nodes] for k, st, nodes in result.attempts],
        }))
    else:
        print(result.describe())
        for k, st, nodes in result.attempts:
            print(f"  k={k}: {st.value} ({nodes} nodes)")
    if args.output and result.witness is not None:
        meta = {"construction": "search", "status": result.status.value}
        _emit(encode_json(result.witness, meta), args.output)
    return EXIT_OK


def cmd_table(args) -> int:
    lo, hi = parse_range(args.range)
    rows = [bounds_summary(n) for n in range(lo, hi + 1)]
    if args.json:
        print(json.dumps([r.as_dict() for r in rows]))
        return EXIT_OK
    print(f"{'n':>5} {'exact':>6} {'lower':>6} {'upper':>6}  lower source")
    for r in rows:
        exact = "" if r.exact is None else str(r.exact)
        print(f"{r.n:>5} {exact:>6} {r.lower:>6} {r.upper:>6}  {r.lower_source}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="achromatic-arboricity",
        description="Achromatic arboricity of complete graphs: bounds, constructions, "
                    "verification and exact search.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bounds", help="upper and lower bounds for K_n")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="projective-plane coloring of K_{q^2+q+1}")
    p.add_argument("--q", type=int, required=True, help="odd prime plane order")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--reproducible", action="store_true",
                   help="omit the tool version from the document")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a coloring document")
    p.add_argument("path", help="coloring document, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exact value of A_alpha(K_n) by exhaustive search")
    p.add_argument("n", type=int)
    p.add_argument("--max-nodes", type=_count, default=DEFAULT_MAX_NODES,
                   help="node budget per color count (default 1e8)")
    p.add_argument("--max-seconds", type=float, default=None,
                   help="wall-clock budget for the whole search")
    p.add_argument("-o", "--output", help="write the witness coloring here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="bounds for a range of n, e.g. 8..12")
    p.add_argument("range")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
