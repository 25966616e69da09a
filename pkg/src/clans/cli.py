"""Command-line front end.

Subcommands: enumerate, classify, poset, verify, stats.  All output is
deterministic: identical flags give byte-identical bytes for any --jobs
value.  Exit codes: 0 success, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from ._parallel import ordered_map
from .core import (
    ClanError,
    dimension,
    enumerate_clans,
    format_clan,
    is_closed,
    parse_clan,
)
from .patterns import classify, is_rationally_smooth, verdict_json
from .poset import PosetSizeError, build_poset, export_dot, export_tsv
from .verify import report_lines, run_checks

POSET_SIZE_BOUND = 9
VERIFY_MAX_N = 8


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clans",
        description="Clans, the orbit closure order, and smoothness of orbit "
        "closures in the flag variety for U(p,q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_signature(p: argparse.ArgumentParser) -> None:
        p.add_argument("--p", type=_nonnegative, required=True, help="plus-side signature")
        p.add_argument("--q", type=_nonnegative, required=True, help="minus-side signature")

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        p.add_argument(
            "--jobs",
            type=_nonnegative,
            default=1,
            help="worker count for per-clan work; 0 = all cores (output is identical either way)",
        )

    enum = sub.add_parser("enumerate", help="list all clans with dimension and smoothness")
    add_signature(enum)
    enum.add_argument("--format", choices=("tsv", "json"), default="tsv")
    add_common(enum)
    enum.set_defaults(func=cmd_enumerate)

    cls = sub.add_parser("classify", help="smoothness verdict for one clan, as JSON")
    add_signature(cls)
    cls.add_argument("--clan", required=True, metavar="TEXT", help='e.g. "1,+,-,1"')
    add_common(cls)
    cls.set_defaults(func=cmd_classify)

    pos = sub.add_parser("poset", help="closure order as a DOT diagram or TSV dump")
    add_signature(pos)
    pos.add_argument("--format", choices=("dot", "tsv"), default="dot")
    add_common(pos)
    pos.set_defaults(func=cmd_poset)

    ver = sub.add_parser("verify", help="exhaustive self-checks up to a size cap")
    ver.add_argument(
        "--max-n",
        type=_nonnegative,
        default=6,
        help=f"check all signatures with p+q up to this value (max {VERIFY_MAX_N})",
    )
    add_common(ver)
    ver.set_defaults(func=cmd_verify)

    sts = sub.add_parser("stats", help="clan totals and the dimension histogram")
    add_signature(sts)
    sts.add_argument("--format", choices=("tsv", "json"), default="tsv")
    add_common(sts)
    sts.set_defaults(func=cmd_stats)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as sink:
            sink.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args: argparse.Namespace) -> int:
    clans = enumerate_clans(args.p, args.q)
    smooth = ordered_map(is_rationally_smooth, clans, args.jobs)
    if args.format == "json":
        rows = [
            {
                "clan": format_clan(c),
                "dim": dimension(c),
                "closed": is_closed(c),
                "rationally_smooth": ok,
            }
            for c, ok in zip(clans, smooth)
        ]
        _emit(json.dumps(rows, indent=2) + "\n", args.out)
    else:
        lines = ["clan\tdim\tclosed\trationally_smooth"]
        for c, ok in zip(clans, smooth):
            lines.append(
                f"{format_clan(c)}\t{dimension(c)}"
                f"\t{'true' if is_closed(c) else 'false'}"
                f"\t{'true' if ok else 'false'}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    clan = parse_clan(args.clan, args.p, args.q)
    verdict = classify(clan)
    _emit(json.dumps(verdict_json(verdict), indent=2) + "\n", args.out)
    return 0


def cmd_poset(args: argparse.Namespace) -> int:
    poset = build_poset(args.p, args.q, size_bound=POSET_SIZE_BOUND, jobs=args.jobs)
    text = export_dot(poset) if args.format == "dot" else export_tsv(poset)
    _emit(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n > VERIFY_MAX_N:
        print(f"error: --max-n {args.max_n} exceeds the bound {VERIFY_MAX_N}", file=sys.stderr)
        return 2
    results, statistic = run_checks(max_n=args.max_n, jobs=args.jobs)
    _emit("\n".join(report_lines(results, statistic)) + "\n", args.out)
    return 0 if all(r.passed for r in results) else 1


def cmd_stats(args: argparse.Namespace) -> int:
    clans = enumerate_clans(args.p, args.q)
    smooth = ordered_map(is_rationally_smooth, clans, args.jobs)
    histogram = Counter(dimension(c) for c in clans)
    total = len(clans)
    closed = sum(1 for c in clans if is_closed(c))
    smooth_count = sum(1 for ok in smooth if ok)
    if args.format == "json":
        doc = {
            "clans": total,
            "closed": closed,
            "smooth": smooth_count,
            "singular": total - smooth_count,
            "dimension_histogram": {str(d): histogram[d] for d in sorted(histogram)},
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [
            f"clans\t{total}",
            f"closed\t{closed}",
            f"smooth\t{smooth_count}",
            f"singular\t{total - smooth_count}",
        ]
        for d in sorted(histogram):
            lines.append(f"dim_{d}\t{histogram[d]}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ClanError, PosetSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
