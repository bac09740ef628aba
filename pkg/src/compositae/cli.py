"""Command-line front end: ``compositae {composita,compose,scan,seq}``.

Exit status is 0 on success (witnesses found by a scan are data, not errors),
1 on usage or input errors and 2 when a requested order exceeds the limit set
by ``COMPOSITAE_MAX_ORDER``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import sequences
from .composita import composita_by_power
from .composition import compose
from .congruence import FAMILIES, ScanBoundError, egf_family, get_family, max_order, scan, touchard_general_family
from .series import BUILTINS, Series, SeriesError, builtin, dumps, format_rational, loads, loads_egf_integers

logger = logging.getLogger("compositae")

EXIT_USAGE = 1
EXIT_BOUND = 2


class UsageError(Exception):
    pass


class BoundExceeded(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _check_order(order: int) -> None:
    if order < 0:
        raise UsageError(f"order must be non-negative, got {order}")
    cap = max_order()
    if order > cap:
        raise BoundExceeded(f"order {order} exceeds the limit {cap}")


def read_series_file(path: str | Path) -> Series:
    """Read either the ``index<TAB>value`` form or a list of integer EGF coefficients e(1..N)."""
    text = Path(path).read_text(encoding="utf-8")
    body = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if any(len(ln.split()) == 2 for ln in body):
        return loads(text)
    return loads_egf_integers(text)


def resolve_series(spec: str, order: int) -> Series:
    if spec in BUILTINS:
        return builtin(spec, order)
    path = Path(spec)
    if not path.exists():
        raise UsageError(f"{spec!r} is neither a built-in series ({', '.join(sorted(BUILTINS))}) nor a file")
    series = read_series_file(path)
    if series.order < order:
        raise UsageError(f"{spec} holds coefficients up to order {series.order}, {order} requested")
    return series.truncate(order)


def _emit(text: str, output: str | None) -> None:
    if output and output != "-":
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_composita(args) -> None:
    _check_order(args.order)
    f = resolve_series(args.series, args.order)
    table = composita_by_power(f)
    _emit(table.to_csv() if args.format == "csv" else table.to_text(), args.output)


def cmd_compose(args) -> None:
    _check_order(args.order)
    outer = resolve_series(args.outer, args.order)
    inner = resolve_series(args.inner, args.order)
    g = compose(outer, inner)
    if args.format == "series":
        text = dumps(g)
    elif args.format == "jsonl":
        text = "".join(json.dumps({"n": n, "g": format_rational(v)}) + "\n" for n, v in enumerate(g.egf()))
    else:
        text = "".join(format_rational(v) + "\n" for v in g.egf())
    _emit(text, args.output)


def _format_scan(reports, certificates, family: str, fmt: str) -> str:
    summary = {
        "family": family,
        "reports": len(reports),
        "witnesses": len(certificates),
        "witness_n": [c.n for c in certificates],
    }
    buf = io.StringIO()
    if fmt == "jsonl":
        for r in reports:
            buf.write(json.dumps(r.to_record()) + "\n")
        for c in certificates:
            buf.write(json.dumps({"certificate": c.to_record()}) + "\n")
        buf.write(json.dumps({"summary": summary}) + "\n")
    elif fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "n", "value", "is_integer", "verdict"])
        for r in reports:
            rec = r.to_record()
            writer.writerow([rec["family"], rec["n"], rec["value"], str(rec["is_integer"]).lower(), rec["verdict"]])
        logger.info("%s: %d reports, %d witnesses", family, len(reports), len(certificates))
    else:
        for r in reports:
            flag = " (degenerate)" if r.degenerate else ""
            buf.write(f"{r.n:>6}  {format_rational(r.value):>24}  {r.verdict.value}{flag}\n")
        for c in certificates:
            buf.write(f"# witness n={c.n} value={format_rational(c.value)} denominator={c.denominator}\n")
        buf.write(f"# summary: {len(reports)} reports, {len(certificates)} witnesses\n")
    return buf.getvalue()


def cmd_scan(args) -> None:
    if args.egf:
        family = egf_family(f"egf:{Path(args.egf).stem}", read_series_file(args.egf))
    elif args.k is not None:
        family = touchard_general_family(args.k)
    else:
        try:
            family = get_family(args.family)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    if args.to_n < args.from_n:
        raise UsageError(f"empty range {args.from_n}..{args.to_n}")
    try:
        reports, certificates = scan(family, range(args.from_n, args.to_n + 1))
    except ScanBoundError as exc:
        raise BoundExceeded(str(exc)) from None
    _emit(_format_scan(reports, certificates, family.name, args.format), args.output)


def _composed_sequence(outer: str, inner: str, count: int) -> list:
    order = max(count - 1, 0)
    g = compose(builtin(outer, order), builtin(inner, order))
    values = g.egf()[:count]
    if any(v.denominator != 1 for v in values):
        raise ValueError(f"{outer}({inner}) has non-integer EGF coefficients")
    return [v.numerator for v in values]


SEQUENCES = {
    "bell": lambda count: [sequences.bell(n) for n in range(count)],
    "euler_zigzag": lambda count: [sequences.euler_zigzag(n) for n in range(count)],
    "stirling2_row": sequences.stirling2_row,
    "stirling1_row": sequences.stirling1_row,
    "a001680_style": lambda count: _composed_sequence("exp", "poly3", count),
    "a000246_style": lambda count: _composed_sequence("exp", "artanh", count),
}


def cmd_seq(args) -> None:
    if args.count < 0:
        raise UsageError("count must be non-negative")
    _check_order(args.count)
    values = SEQUENCES[args.name](args.count)
    _emit("".join(f"{v}\n" for v in values), args.output)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="compositae", description="Composita tables, EGF composition and prime congruence scans.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", help="write to this path instead of stdout")

    p = sub.add_parser("composita", parents=[common], help="triangular table F^D(n,k)")
    p.add_argument("--series", required=True, help=f"built-in ({', '.join(sorted(BUILTINS))}) or coefficient file")
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--format", choices=["csv", "text"], default="csv")
    p.set_defaults(func=cmd_composita)

    p = sub.add_parser("compose", parents=[common], help="EGF coefficients g(0..order) of outer(inner(x))")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--format", choices=["text", "jsonl", "series"], default="text")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("scan", parents=[common], help="evaluate a congruence family over a range of n")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help=f"one of: {', '.join(sorted(FAMILIES))}")
    group.add_argument("--egf", help="file of integer EGF coefficients e(1..N), one per line")
    group.add_argument("--touchard-k", dest="k", type=int, help="general Touchard congruence with this k")
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", dest="to_n", type=int, required=True)
    p.add_argument("--format", choices=["jsonl", "csv", "text"], default="jsonl")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("seq", parents=[common], help="dump an integer sequence")
    p.add_argument("name", choices=sorted(SEQUENCES))
    p.add_argument("count", type=int, help="number of terms, or the row index for *_row sequences")
    p.set_defaults(func=cmd_seq)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        args.func(args)
    except BoundExceeded as exc:
        print(f"compositae: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (UsageError, SeriesError, ValueError, OSError) as exc:
        print(f"compositae: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
