"""Command-line entry point: ``fanramsey {construct,verify,detect,search,table}``.

Exit codes: 0 pass/complete, 1 fail/witness found, 2 budget exhausted,
64 usage error, 65 malformed certificate, 74 I/O error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import constructions
from .certificates import read_certificate, verify_certificate, write_certificate
from .coloring import EdgeColor
from .detectors import contains_mono_or_none
from .errors import BadParams, DecodeError, RamseyError
from .patterns import format_pattern, parse_pattern
from .registry import known_values_table
from .search.engine import derive_star_degree_cap, exhaustive_search
from .search.report import emit_certificates, search_report, write_report
from .search.rules import DegreeCap, ForbidRule, GadgetAtTarget, SearchSpec

EXIT_OK, EXIT_FAIL, EXIT_UNRESOLVED = 0, 1, 2
EXIT_USAGE, EXIT_DATA, EXIT_IO = 64, 65, 74

FAMILIES = ("star-fan-extremal", "fan-fan-extremal", "circulant")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _forbid(text: str) -> ForbidRule:
    try:
        return ForbidRule.parse(text)
    except BadParams as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _color(text: str) -> EdgeColor:
    if text not in ("red", "blue"):
        raise argparse.ArgumentTypeError(f"COLOR must be red or blue, got {text!r}")
    return EdgeColor.parse(text)


def _pattern(text: str):
    try:
        return parse_pattern(text)
    except BadParams as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _degree_cap(text: str) -> DegreeCap:
    col, sep, k = text.partition(":")
    if not sep or not k.isdigit():
        raise argparse.ArgumentTypeError(f"expected COLOR:K, got {text!r}")
    return DegreeCap(_color(col), int(k))


def _gadget(text: str) -> GadgetAtTarget:
    try:
        return GadgetAtTarget.parse(text)
    except BadParams as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fanramsey", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log search progress")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="write an extremal coloring certificate")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--degree", type=int, help="red degree (circulant only)")
    p.add_argument("--out", required=True, type=Path)

    p = sub.add_parser("verify", help="check a certificate against forbidden patterns")
    p.add_argument("--in", dest="path", required=True, type=Path)
    p.add_argument("--forbid", required=True, action="append", type=_forbid,
                   metavar="COLOR:PATTERN")

    p = sub.add_parser("detect", help="look for one monochromatic pattern")
    p.add_argument("--in", dest="path", required=True, type=Path)
    p.add_argument("--color", required=True, type=_color)
    p.add_argument("--pattern", required=True, type=_pattern)

    p = sub.add_parser("search", help="exhaustive isomorph-free extension search")
    p.add_argument("--forbid", required=True, action="extend", nargs="+", type=_forbid,
                   metavar="COLOR:PATTERN")
    p.add_argument("--max-n", required=True, type=int)
    p.add_argument("--degree-cap", action="append", default=[], type=_degree_cap,
                   metavar="COLOR:K")
    p.add_argument("--gadget", action="append", default=[], type=_gadget,
                   metavar="COLOR:PATTERN@N")
    p.add_argument("--star-caps", action="store_true",
                   help="add degree caps implied by forbidden stars")
    p.add_argument("--swap-symmetric", action="store_true",
                   help="also identify colorings with their color swap")
    p.add_argument("--budget", type=float, default=0.0, metavar="SECONDS")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", type=Path)
    p.add_argument("--emit-certs", type=Path, metavar="DIR")

    sub.add_parser("table", help="print the known-values registry")
    return parser


def _construct(args) -> int:
    fam, n = args.family, args.n
    if fam == "circulant":
        if args.degree is None:
            raise UsageError("--degree is required for the circulant family")
        c = constructions.circulant_red_regular(n, args.degree)
        note = f"circulant h={n} red degree {args.degree}"
    elif args.degree is not None:
        raise UsageError("--degree only applies to the circulant family")
    elif fam == "star-fan-extremal":
        c = constructions.star_fan_extremal(n)
        note = f"star-fan extremal n={n}: no red star:{n}, no blue fan:{n}"
    else:
        c = constructions.fan_fan_extremal(n)
        note = f"pentagon blow-up n={n}: no red fan:{n}, no blue fan:{n}"
    write_certificate(args.out, c, [note])
    print(f"wrote {c.n}-vertex coloring to {args.out}")
    return EXIT_OK


def _verify(args) -> int:
    report = verify_certificate(read_certificate(args.path), args.forbid)
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def _detect(args) -> int:
    c = read_certificate(args.path)
    w = contains_mono_or_none(c, args.color, args.pattern)
    name = f"{args.color} {format_pattern(args.pattern)}"
    if w is None:
        print(f"no {name} in {c.n}-vertex coloring")
        return EXIT_OK
    print(f"found {name}: {' '.join(map(str, w.vertices))}")
    return EXIT_FAIL


def _search(args) -> int:
    prunes = list(args.degree_cap) + list(args.gadget)
    if args.star_caps:
        prunes += derive_star_degree_cap(args.forbid)
    spec = SearchSpec(args.max_n, tuple(args.forbid), tuple(prunes), args.budget,
                      args.swap_symmetric)
    result = exhaustive_search(spec, n_jobs=args.jobs)
    for k, count in enumerate(result.counts):
        if k:
            print(f"level {k:2d}: {count}")
    certs = emit_certificates(result, args.emit_certs) if args.emit_certs else None
    if args.report:
        write_report(args.report, search_report(result, certs))
    first = result.first_empty_level
    if not result.exhausted:
        print(f"budget exhausted after level {result.max_level_reached}")
        return EXIT_UNRESOLVED
    if first is not None:
        print(f"no admissible coloring of K_{first}: Ramsey value {first}")
    else:
        print(f"survivors remain at K_{args.max_n}: value exceeds {args.max_n}")
    print(f"elapsed {result.elapsed:.2f}s")
    return EXIT_OK


def _table(args) -> int:
    for row in known_values_table():
        print(f"{row.describe():40s} {row.status:20s} {row.source}")
    return EXIT_OK


COMMANDS = {"construct": _construct, "verify": _verify, "detect": _detect,
            "search": _search, "table": _table}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"fanramsey: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DecodeError as exc:
        print(f"fanramsey: malformed certificate: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"fanramsey: {exc}", file=sys.stderr)
        return EXIT_IO
    except RamseyError as exc:
        print(f"fanramsey: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
