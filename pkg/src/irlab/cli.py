"""Command-line front end.

Exit codes: 0 success, 1 discrepancies found, 2 usage error, 3 bad input.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from contextlib import nullcontext
from typing import IO, Iterator, Sequence

from irlab import catalog as catalog_mod
from irlab import kernels
from irlab.enumerator import MAX_ENUM_ORDER, EnumerationConfig, enumerate_graphs
from irlab.graph import Graph, Graph6Error, from_graph6, to_adjlist, to_dot, to_graph6
from irlab.solvers import domination_number, irredundance_number
from irlab.verifier import (
    CONDITIONS,
    SWEEP_ORDER_LIMIT,
    GuardError,
    PerfectionCache,
    classify,
    verify_main_theorem,
    verify_sufficient_condition,
    sweep,
)

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3

THEOREMS = ["main"] + [c.lower() for c in CONDITIONS]


class InputError(Exception):
    pass


def _read_graphs(path: str | None) -> Iterator[tuple[str, Graph]]:
    ctx = open(path) if path and path != "-" else nullcontext(sys.stdin)
    with ctx as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                yield line, from_graph6(line)
            except Graph6Error as exc:
                raise InputError(f"line {lineno}: {exc}") from exc


def _fmt_set(mask: int) -> str:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(str(v))
        mask >>= 1
        v += 1
    return "{" + ",".join(out) + "}"


def cmd_solve(args, out: IO[str]) -> int:
    for line, g in _read_graphs(args.file):
        res = {}
        if args.param in ("ir", "both"):
            res["ir"] = irredundance_number(g)
        if args.param in ("gamma", "both"):
            res["gamma"] = domination_number(g)
        if args.json:
            row = {"graph6": line}
            for k, r in res.items():
                row[k] = r.value
                row[f"{k}_witness"] = r.vertices
            out.write(json.dumps(row) + "\n")
            continue
        parts = [line] + [f"{k}={r.value}" for k, r in res.items()]
        if args.witness:
            parts += [f"{k}_witness={_fmt_set(r.witness)}" for k, r in res.items()]
        out.write(" ".join(parts) + "\n")
    return EXIT_OK


def cmd_classify(args, out: IO[str]) -> int:
    cache = PerfectionCache.open(args.cache)
    for line, g in _read_graphs(args.file):
        rep = classify(g, cache)
        if args.json:
            out.write(json.dumps(rep.to_json()) + "\n")
            continue
        parts = [line, f"n={rep.n}", f"ir={rep.ir}", f"gamma={rep.gamma}",
                 f"p6_free={int(rep.p6_free)}", f"perfect={int(rep.perfect)}",
                 f"equal_here={int(rep.equal_here)}"]
        if args.witness:
            if rep.witness:
                name, emb = rep.witness
                parts.append(f"witness={name}:{','.join(map(str, emb))}")
            else:
                parts.append("witness=none")
        out.write(" ".join(parts) + "\n")
    if args.cache:
        cache.save(args.cache)
    return EXIT_OK


def cmd_verify(args, out: IO[str]) -> int:
    cache = PerfectionCache.open(args.cache)
    records = []
    sink = open(args.out, "w") if args.out else None
    try:
        summary = sweep(args.max_n, sink=sink, cache=cache, jobs=args.jobs,
                        checkpoint=args.checkpoint, on_record=records.append)
    finally:
        if sink is not None:
            sink.close()
    if args.cache:
        cache.save(args.cache)
    theorems = THEOREMS if args.theorem == "all" else [args.theorem]
    failed = 0
    for th in theorems:
        if th == "main":
            bad = verify_main_theorem(args.max_n, records)
        else:
            bad = verify_sufficient_condition(th, args.max_n, records)
        failed += len(bad)
        status = "PASS" if not bad else "FAIL"
        out.write(f"{status} {th} max_n={args.max_n} classes={summary.total} "
                  f"discrepancies={len(bad)}\n")
        for r in bad[:20]:
            out.write(f"  {r.graph6} ir={r.ir} gamma={r.gamma} perfect={int(bool(r.perfect))} "
                      f"witness={r.witness[0] if r.witness else 'none'}\n")
    if args.summary:
        out.write(json.dumps(summary.to_json()) + "\n")
    return EXIT_OK if failed == 0 else EXIT_DISCREPANCY


def cmd_catalog(args, out: IO[str]) -> int:
    entries = [catalog_mod.get(args.name)] if args.name else list(catalog_mod.catalog())
    for e in entries:
        g = e.graph
        if args.emit == "graph6":
            text = to_graph6(g) if args.name else f"{e.name} {to_graph6(g)}"
        elif args.emit == "adjlist":
            text = to_adjlist(g) if args.name else f"# {e.name}\n{to_adjlist(g)}"
        else:
            text = to_dot(g, e.name, list(e.labels) or None)
        out.write(text + "\n")
    return EXIT_OK


def cmd_enumerate(args, out: IO[str]) -> int:
    for g in enumerate_graphs(EnumerationConfig(args.n, args.connected_only)):
        out.write(to_graph6(g) + "\n")
    return EXIT_OK


def _max_n(text: str) -> int:
    n = int(text)
    if not 1 <= n <= SWEEP_ORDER_LIMIT:
        raise argparse.ArgumentTypeError(f"must be in 1..{SWEEP_ORDER_LIMIT}")
    return n


def _enum_n(text: str) -> int:
    n = int(text)
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise argparse.ArgumentTypeError(f"must be in 1..{MAX_ENUM_ORDER}")
    return n


def _jobs(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="irlab", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    p.add_argument("--version", action="version",
                   version=f"irlab 0.1.0 ({kernels.BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="irredundance and domination numbers")
    s.add_argument("--param", choices=["ir", "gamma", "both"], default="both")
    s.add_argument("--witness", action="store_true", help="also print witness sets")
    s.add_argument("--json", action="store_true")
    s.add_argument("file", nargs="?")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("classify", help="full perfection report per graph")
    c.add_argument("--witness", action="store_true")
    c.add_argument("--json", action="store_true")
    c.add_argument("--cache", default=os.environ.get("IRLAB_CACHE"))
    c.add_argument("file", nargs="?")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="exhaustive check up to --max-n")
    v.add_argument("--max-n", type=_max_n, required=True)
    v.add_argument("--theorem", choices=THEOREMS + ["all"], default="main")
    v.add_argument("--jobs", type=_jobs, default=1)
    v.add_argument("--cache", default=os.environ.get("IRLAB_CACHE"))
    v.add_argument("--out", help="write one JSON report per class")
    v.add_argument("--checkpoint", help="directory for resumable progress")
    v.add_argument("--summary", action="store_true", help="print the sweep summary as JSON")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("catalog", help="emit named graphs")
    k.add_argument("--name", choices=catalog_mod.names())
    k.add_argument("--emit", choices=["graph6", "adjlist", "dot"], default="graph6")
    k.set_defaults(func=cmd_catalog)

    e = sub.add_parser("enumerate", help="one graph6 line per isomorphism class")
    e.add_argument("--n", type=_enum_n, required=True)
    e.add_argument("--connected-only", action="store_true")
    e.set_defaults(func=cmd_enumerate)
    return p


def run(argv: Sequence[str] | None = None, out: IO[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"irlab: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardError as exc:
        print(f"irlab: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
