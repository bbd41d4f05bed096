"""Command-line interface.

Subcommands: ``compute`` (invariants of one graph), ``families``
(computed-vs-formula tables), ``extremal`` (extremal-difference sweeps)
and ``verify`` (theorem verification). All vertex labels in input and
output are 1-based. Exit codes: 0 success / all checks pass, 1 input
error, 2 verification failure.
"""

import argparse
import csv
import io
import json
import sys

from . import graph as gr
from .extremal import MAX_BUILTIN_N, GraphSource, extremal_difference
from .graph import GraphError
from .graph6 import parse_graph6, write_graph6
from .invariants import TAGS, all_invariants, result_record
from .verify import family_formula, verify_theorems


def _emit(rows, fmt, out, columns):
    """Render a list of row dicts as a table, csv or json."""
    if fmt == "json":
        text = json.dumps(rows, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row.get(k, "") for k in columns})
        text = buf.getvalue()
    else:
        widths = {
            c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows else len(c)
            for c in columns
        }
        lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
        for row in rows:
            lines.append(
                "  ".join(str(row.get(c, "")).ljust(widths[c]) for c in columns)
            )
        text = "\n".join(line.rstrip() for line in lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return int(lo), int(hi)
        return int(lo), int(lo)
    except ValueError:
        raise GraphError(f"bad range {text!r}, expected N or N..M") from None


def _load_graph(args):
    sources = [s for s in (args.gen, args.graph6, args.edges) if s is not None]
    if len(sources) != 1:
        raise GraphError("exactly one of --gen, --graph6, --edges is required")
    if args.gen:
        return gr.generate(args.gen)
    if args.graph6:
        return parse_graph6(args.graph6)
    with open(args.edges, "r", encoding="utf-8") as fh:
        return gr.parse_edge_list_text(fh.read())


def cmd_compute(args):
    g = _load_graph(args)
    selected = TAGS
    if args.invariants:
        selected = tuple(t.strip() for t in args.invariants.split(","))
        for t in selected:
            if t not in TAGS:
                raise GraphError(f"unknown invariant {t!r}; choose from {TAGS}")
    results = all_invariants(g)
    record = result_record(g, write_graph6(g), results)
    if args.format == "json":
        record = {
            k: v for k, v in record.items()
            if k in ("graph6", "n", "m") or k in selected or k == "witnesses"
        }
        record["witnesses"] = {
            t: w for t, w in record["witnesses"].items() if t in selected
        }
        _emit([record], "json", args.out, [])
        return 0
    rows = [
        {
            "invariant": tag,
            "value": results[tag].value,
            "witness": " ".join(f"v{v}" for v in results[tag].witness_labels()),
        }
        for tag in selected
    ]
    _emit(rows, args.format, args.out, ["invariant", "value", "witness"])
    return 0


def cmd_families(args):
    lo, hi = _parse_range(args.range)
    rows = []
    ok = True
    for n in range(lo, hi + 1):
        if args.family == "bipartite":
            g = gr.complete_bipartite(2, n)
            params = (2, n)
        else:
            g = gr.generate(f"{args.family}:{n}")
            params = (n,)
        results = all_invariants(g)
        formulas = family_formula(args.family, params)
        for tag in TAGS:
            if tag not in formulas:
                continue
            got = results[tag].value
            want = formulas[tag]
            match = got == want
            ok = ok and match
            rows.append({
                "family": args.family, "param": n, "invariant": tag,
                "formula": want, "computed": got,
                "status": "ok" if match else "MISMATCH",
            })
    _emit(rows, args.format, args.out,
          ["family", "param", "invariant", "formula", "computed", "status"])
    return 0 if ok else 2


def _source_for(n, stream):
    if n <= MAX_BUILTIN_N:
        return GraphSource.enumeration(n)
    if not stream:
        raise GraphError(f"order {n} requires --stream with a graph6 file")
    return GraphSource.graph6_file(stream, n=n)


def cmd_extremal(args):
    lo, hi = _parse_range(args.range)
    rows = []
    for n in range(lo, hi + 1):
        report = extremal_difference(args.xi1, args.xi2, _source_for(n, args.stream))
        rows.append({
            "xi1": report.xi1, "xi2": report.xi2, "n": n,
            "max_diff": report.max_diff,
            "witness_graph6": report.witness_graph6,
            "graphs_scanned": report.graphs_scanned,
        })
    _emit(rows, args.format, args.out,
          ["xi1", "xi2", "n", "max_diff", "witness_graph6", "graphs_scanned"])
    return 0


def cmd_verify(args):
    lo, hi = _parse_range(args.range)
    streams = {}
    for item in args.stream or ():
        n_text, sep, path = item.partition(":")
        if not sep:
            raise GraphError(f"bad --stream {item!r}, expected N:PATH")
        streams[int(n_text)] = path
    checks = verify_theorems(lo, hi, streams)
    rows = [
        {
            "check": c.name, "n": c.n, "statement": c.statement,
            "status": "PASS" if c.passed else "FAIL", "detail": c.detail,
        }
        for c in checks
    ]
    if args.format == "table" and not args.out:
        for c in checks:
            print(c.line())
    else:
        _emit(rows, args.format, args.out,
              ["check", "n", "statement", "status", "detail"])
    failed = sum(1 for c in checks if not c.passed)
    print(f"{len(checks) - failed}/{len(checks)} checks passed",
          file=sys.stderr)
    return 0 if failed == 0 else 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="resolvability",
        description="Exact graph resolvability invariants "
                    "(beta, beta_E, beta_M, psi, mhs_strict, mhs_weak).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariants of a single graph")
    p.add_argument("--gen", help="family spec, e.g. path:7 or bipartite:2,5")
    p.add_argument("--graph6", help="graph6 string")
    p.add_argument("--edges", help="edge-list file ('n m' header, 1-based)")
    p.add_argument("--invariants", help="comma list of tags (default: all)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("families", help="computed-vs-formula family table")
    p.add_argument("family", choices=sorted(gr.GENERATORS))
    p.add_argument("range", help="parameter range, e.g. 2..10")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("extremal", help="extremal difference sweep")
    p.add_argument("xi1", choices=TAGS)
    p.add_argument("xi2", choices=TAGS)
    p.add_argument("range", help="order range, e.g. 4..7")
    p.add_argument("--stream", help="graph6 stream file for n > 7")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="run the theorem verification suite")
    p.add_argument("range", help="order range, e.g. 3..6")
    p.add_argument("--stream", action="append", metavar="N:PATH",
                   help="graph6 stream for order N (repeatable)")
    p.set_defaults(func=cmd_verify)

    for sp in sub.choices.values():
        sp.add_argument("--format", choices=("table", "json", "csv"),
                        default="table")
        sp.add_argument("--out", help="write output to a file")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
