"""Command line interface: ``table``, ``count``, ``series`` and ``verify``.

Exit codes: 0 success, 1 a mathematical discrepancy was found, 2 usage error.
Data goes to stdout (or ``--output``); timings go to stderr only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Optional, Sequence

from . import capparelli as cap
from . import partitions as parts
from . import verify
from .qpoly import set_ab_one, to_csv_rows, to_json_obj, to_text

FORMATS = ("text", "json", "csv")
SERIES_FAMILIES = ("P", "Q", "Psi", "G", "S", "T", "BouletLHS", "BouletRHS")


def _common(sub_default: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    kw = {"default": argparse.SUPPRESS} if sub_default else {}
    p.add_argument("--format", choices=FORMATS, **({"default": "text"} | kw))
    p.add_argument("--output", metavar="PATH", **({"default": None} | kw))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpartitions",
        description="Capparelli-type partition tables, generating functions and verification sweeps.",
        parents=[_common(False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(True)

    t = sub.add_parser("table", parents=[common], help="list the partitions of n in a class")
    t.add_argument("--class", dest="family", choices=("A", "C", "D"), required=True)
    t.add_argument("--m", type=int, choices=(1, 2), required=True)
    t.add_argument("--n", type=int, required=True)

    c = sub.add_parser("count", parents=[common], help="count class members by norm")
    c.add_argument("--class", dest="family", choices=parts.FAMILIES, required=True)
    c.add_argument("--m", type=int, choices=(1, 2), required=True)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--max-n", dest="max_n", type=int)
    c.add_argument("--N", dest="N", type=int, help="bound parameter for P, Q, G")
    c.add_argument("--i", type=int)
    c.add_argument("--j", type=int)

    s = sub.add_parser("series", parents=[common], help="print a generating function")
    s.add_argument("--family", choices=SERIES_FAMILIES, required=True)
    s.add_argument("--m", type=int, choices=(1, 2))
    s.add_argument("--index", type=int, required=True)
    s.add_argument("--i", type=int)
    s.add_argument("--j", type=int)
    s.add_argument("--route", choices=("closed", "recursive", "oracle"), default="closed")

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=verify.SUITES + ("all",), required=True)
    v.add_argument("--m", type=int, choices=(1, 2))
    v.add_argument("--max-n", dest="max_n", type=int, default=40)
    v.add_argument("--max-N", dest="max_N", type=int, default=6)
    v.add_argument("--max-index", dest="max_index", type=int)
    v.add_argument("--full", action="store_true", help="collect every discrepancy")
    return parser


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _cmd_table(args) -> int:
    pc = parts.PartitionClass(args.family, args.m)
    found = parts.enumerate_partitions(pc, args.n)
    strs = [str(p) for p in found]
    if args.format == "json":
        out = json.dumps({"class": args.family, "m": args.m, "n": args.n,
                          "count": len(found), "partitions": strs}) + "\n"
    elif args.format == "csv":
        out = _csv([[s] for s in strs], ["partition"])
    else:
        out = f"{args.family}_{args.m}({args.n}) = {len(found)}\n" + "".join(s + "\n" for s in strs)
    _emit(out, args.output)
    return 0


def _cmd_count(args, parser) -> int:
    try:
        pc = parts.PartitionClass(args.family, args.m, args.N, args.i, args.j)
    except ValueError as e:
        parser.error(str(e))
    if args.n is not None:
        rows = [[args.n, parts.count(pc, args.n)]]
    else:
        rows = [[n, c] for n, c in enumerate(parts.counts_by_norm(pc, args.max_n))]
    if args.format == "json":
        out = json.dumps({"class": str(pc), "counts": rows}) + "\n"
    elif args.format == "csv":
        out = _csv(rows, ["n", "count"])
    else:
        out = "".join(f"{n} {c}\n" for n, c in rows)
    _emit(out, args.output)
    return 0


def _series_value(args, parser):
    f = args.family
    need = {
        "P": ("m", "i", "j"), "Q": ("m", "i", "j"), "Psi": ("m",), "G": ("m",),
        "S": (), "T": (), "BouletLHS": ("i", "j"), "BouletRHS": ("i", "j"),
    }[f]
    missing = [k for k in need if getattr(args, k) is None]
    if missing:
        parser.error(f"family {f} needs --{' --'.join(missing)}")
    K, m = args.index, args.m
    if K < (-2 if f == "G" else 0):
        parser.error("index out of range")
    if f == "P":
        if args.route == "recursive":
            return cap.p_recursive(m, K, args.i, args.j)
        if args.route == "oracle":
            return set_ab_one(parts.oracle_genfun(parts.P(m, K, args.i, args.j)))
        return cap.p_closed(m, K, args.i, args.j)
    if f == "Q":
        return set_ab_one(parts.oracle_genfun(parts.Q(m, K, args.i, args.j)))
    if f == "Psi":
        if args.route == "oracle":
            return parts.oracle_genfun(parts.P(m, K))
        return cap.psi(m, K)
    if f == "G":
        if args.route == "oracle" and K >= 0:
            return parts.oracle_genfun(parts.G(m, K))
        if args.route == "closed" and K >= 1:
            return cap.g_closed(m, K)
        return cap.g_recursive(m, K)
    if f == "S":
        return cap.s_poly(K)
    if f == "T":
        return cap.t_poly(K)
    if f == "BouletLHS":
        return cap.boulet_lhs(K, args.i, args.j)
    return cap.boulet_rhs(K, args.i, args.j)


def _cmd_series(args, parser) -> int:
    p = _series_value(args, parser)
    if args.format == "json":
        out = json.dumps(to_json_obj(p)) + "\n"
    elif args.format == "csv":
        out = _csv(to_csv_rows(p), ["ea", "eb", "eq", "coeff"])
    else:
        out = to_text(p) + "\n"
    _emit(out, args.output)
    return 0


def _cmd_verify(args) -> int:
    ms = (args.m,) if args.m else (1, 2)
    t0 = time.perf_counter()
    reports = verify.run_suite(args.suite, ms, args.max_n, args.max_N, args.max_index, args.full)
    for r in reports:
        print(f"{r.check_name} m={r.parameter_range.get('m', '-')}: {r.elapsed * 1000:.1f} ms",
              file=sys.stderr)
    print(f"total: {(time.perf_counter() - t0) * 1000:.1f} ms", file=sys.stderr)
    if args.format == "json":
        out = json.dumps([r.to_dict(include_elapsed=False) for r in reports], indent=1) + "\n"
    elif args.format == "csv":
        out = _csv([[r.check_name, json.dumps(r.parameter_range, sort_keys=True), r.status, r.cells]
                    for r in reports], ["check", "range", "status", "cells"])
    else:
        out = "".join(r.summary() + "\n" for r in reports)
    _emit(out, args.output)
    return 0 if all(r.ok for r in reports) else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        return _cmd_table(args)
    if args.command == "count":
        return _cmd_count(args, parser)
    if args.command == "series":
        return _cmd_series(args, parser)
    return _cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
