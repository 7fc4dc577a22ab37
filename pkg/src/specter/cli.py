"""Command-line entry point.

Graphs travel as graph6 lines on stdin/stdout; graphs too large for graph6
(comparability graphs) travel as adjacency dumps. Exit status: 0 when the
work completed or the assertion held, 1 when an assertion failed or a
witness was found, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import logging
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Iterable, Sequence, TextIO

from .clique import clique_number, clique_number_symmetric
from .feasibility import DegreeHistogram, ParameterError, SrgParams, enumerate_b_vectors, feasibility_report
from .formats import DumpFormatError, read_adjacency_dumps, write_adjacency_dump
from .graphcore import Graph, Graph6Error, parse_graph6, write_graph6
from .interlacing import interlaces_many
from .isomorph import canonical_form
from .search import WITNESS_FOUND, SearchContext, extend_level, final_filter, pipeline_check
from .starcomp import TooSmall, comparability_graph

log = logging.getLogger("specter")


class UsageError(Exception):
    pass


# --- helpers -------------------------------------------------------------------------

def _default_jobs() -> int:
    text = os.environ.get("SPECTER_JOBS", "1")
    try:
        return max(1, int(text))
    except ValueError:
        return 1


def _shard(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        i, n = (int(x) for x in text.split("/"))
    except ValueError:
        raise UsageError(f"--shard expects i/n, got {text!r}") from None
    if n < 1 or not 0 <= i < n:
        raise UsageError(f"--shard {text}: need 0 <= i < n")
    return i, n


def shard_of(G: Graph, n: int) -> int:
    digest = hashlib.sha256(canonical_form(G)).digest()
    return int.from_bytes(digest[:8], "big") % n


def _params(values: Sequence[int]) -> SrgParams:
    try:
        return SrgParams(*values)
    except ParameterError as exc:
        raise UsageError(str(exc)) from None


def read_graph6_lines(stream: TextIO) -> list[tuple[str, Graph]]:
    out = []
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            out.append((line, parse_graph6(line)))
        except Graph6Error as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
    return out


def _select_shard(items: list[tuple[str, Graph]], shard) -> list[tuple[str, Graph]]:
    if shard is None:
        return items
    i, n = shard
    return [(s, G) for s, G in items if shard_of(G, n) == i]


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(x) for x in items]


def _cap(text: str) -> tuple[int, int]:
    try:
        i, n = (int(x) for x in text.split("="))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i=n, got {text!r}") from None
    return i, n


def _degrees(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated counts, got {text!r}") from None


# --- subcommands ---------------------------------------------------------------------

def cmd_params(args, out: TextIO) -> int:
    p = _params(args.params)
    rep = feasibility_report(p)

    def show(x):
        if hasattr(x, "denominator") and x.denominator == 1:
            return str(x.numerator)
        if isinstance(x, float):
            return f"{x:.12g}"
        return str(x)

    out.write(f"params {rep['params']}\n")
    out.write(f"edge_equation {'ok' if rep['edge_equation'] else 'violated'}\n")
    out.write(f"r={show(rep['r'])} f={show(rep['f'])} s={show(rep['s'])} g={show(rep['g'])}\n")
    if rep["conference"]:
        out.write("conference graph\n")
    if "star_complement_order_r" in rep:
        out.write(f"star_complement_order r:{rep['star_complement_order_r']} s:{rep['star_complement_order_s']}\n")
    out.write(f"feasible {'yes' if rep['feasible'] else 'no'}\n")
    return 0 if rep["feasible"] else 1


def cmd_bvec(args, out: TextIO) -> int:
    p = _params(args.params)
    caps = dict(args.cap or [])
    try:
        sols = enumerate_b_vectors(p, DegreeHistogram(args.degrees), caps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for b in sols:
        out.write(",".join(map(str, b)) + "\n")
    return 0


def _interlace_chunk(chunk: list[str], p: SrgParams) -> list[bool]:
    return interlaces_many([parse_graph6(s) for s in chunk], p)


def cmd_interlace(args, inp: TextIO, out: TextIO) -> int:
    p = _params(args.params)
    items = _select_shard(read_graph6_lines(inp), args.shard)
    lines = [s for s, _ in items]
    size = 512
    chunks = [lines[i:i + size] for i in range(0, len(lines), size)]
    flags = [f for part in _map(partial(_interlace_chunk, p=p), chunks, args.jobs) for f in part]
    kept = 0
    for s, ok in zip(lines, flags):
        if ok:
            out.write(s + "\n")
            kept += 1
    log.info("interlace: %d in, %d kept", len(lines), kept)
    return 0


def _context(p: SrgParams, r: int | None, target: int | None) -> SearchContext:
    ctx = SearchContext.for_params(p, r)
    if target is not None:
        ctx = SearchContext(ctx.params, ctx.r, target, ctx.clique_target)
    return ctx


def cmd_extend(args, inp: TextIO, out: TextIO) -> int:
    p = _params(args.params)
    ctx = _context(p, args.r, args.target)
    graphs = [G for _, G in _select_shard(read_graph6_lines(inp), args.shard)]
    too_big = [G for G in graphs if G.n >= ctx.target_order]
    if too_big:
        raise UsageError(f"input graph of order {too_big[0].n} already reaches target {ctx.target_order}")
    # isomorphic inputs give identical extension lists; merging keeps output canonical
    level = extend_level(graphs, ctx, use_graceful=not args.no_graceful, jobs=args.jobs)
    if level and level[0].n == ctx.target_order:
        level = final_filter(level, ctx)
    for G in level:
        out.write(write_graph6(G) + "\n")
    log.info("extend: %d in, %d out", len(graphs), len(level))
    return 0


def _compgraph_one(g6: str, r: int, min_order: int, regular: bool) -> str | None:
    H = parse_graph6(g6)
    C = comparability_graph(H, r, min_order=min_order, regular_host=regular)
    if isinstance(C, TooSmall):
        return None
    return f"# source {g6} order {C.order}\n" + write_adjacency_dump(C.graph)


def cmd_compgraph(args, inp: TextIO, out: TextIO) -> int:
    items = _select_shard(read_graph6_lines(inp), args.shard)
    work = partial(_compgraph_one, r=args.r, min_order=args.min_order, regular=not args.irregular_host)
    try:
        dumps = _map(work, [s for s, _ in items], args.jobs)
    except ArithmeticError as exc:
        raise UsageError(f"input is not a star complement for r={args.r}: {exc}") from None
    skipped = 0
    for d in dumps:
        if d is None:
            skipped += 1
        else:
            out.write(d)
    log.info("compgraph: %d in, %d too small", len(items), skipped)
    return 0


def _clique_one(G: Graph, cutoff: int | None) -> str:
    if cutoff is None:
        return f"exact({clique_number(G)})"
    return clique_number_symmetric(G, cutoff).verdict


def cmd_clique(args, inp: TextIO, out: TextIO) -> int:
    try:
        graphs = list(read_adjacency_dumps(inp))
    except DumpFormatError as exc:
        raise UsageError(str(exc)) from None
    if args.cutoff is not None and args.cutoff < 1:
        raise UsageError("--cutoff must be >= 1")
    verdicts = _map(partial(_clique_one, cutoff=args.cutoff), graphs, args.jobs)
    found = False
    for i, v in enumerate(verdicts):
        out.write(f"{i} n={graphs[i].n} {v}\n")
        found = found or v.startswith("reached")
    if args.cutoff is not None:
        out.write(f"verdict {'witness-found' if found else 'refuted'}\n")
    return 1 if found else 0


def _pipeline_one(g6: str, ctx: SearchContext, graceful: bool) -> str:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        v = pipeline_check(parse_graph6(g6), ctx, use_graceful=graceful)
    counts = " ".join(f"{k}={x}" for k, x in v.counts().items())
    return f"{g6} {v.status} {counts}"


def cmd_pipeline(args, inp: TextIO, out: TextIO) -> int:
    p = _params(args.params)
    ctx = _context(p, args.r, args.target)
    items = _select_shard(read_graph6_lines(inp), args.shard)
    if args.checkpoint is not None:
        if len(items) != 1:
            raise UsageError("--checkpoint needs exactly one seed on stdin")
        v = pipeline_check(items[0][1], ctx, use_graceful=not args.no_graceful,
                           jobs=args.jobs, checkpoint_dir=args.checkpoint, time_budget=args.time_budget)
        counts = " ".join(f"{k}={x}" for k, x in v.counts().items())
        out.write(f"{items[0][0]} {v.status} {counts}\n")
        return 1 if v.status == WITNESS_FOUND else 0
    lines = _map(partial(_pipeline_one, ctx=ctx, graceful=not args.no_graceful), [s for s, _ in items], args.jobs)
    found = False
    for line in lines:
        out.write(line + "\n")
        found = found or f" {WITNESS_FOUND} " in line
    out.write(f"verdict {'witness-found' if found else 'refuted'}\n")
    return 1 if found else 0


def cmd_scenario(args, out: TextIO) -> int:
    from .scenarios import BUILTINS, load_scenario_file, run_scenario

    if args.list:
        for spec in BUILTINS.values():
            tag = " [heavy]" if spec.heavy else ""
            out.write(f"{spec.name}{tag}: {spec.description}\n")
        return 0
    if args.name is None:
        raise UsageError("scenario name required (see --list)")
    if args.name in BUILTINS:
        spec = BUILTINS[args.name]
    elif os.path.isfile(args.name):
        try:
            spec = load_scenario_file(args.name)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad scenario file {args.name}: {exc}") from None
    else:
        raise UsageError(f"unknown scenario {args.name!r} (see --list)")
    if spec.heavy and not args.heavy:
        raise UsageError(f"scenario {spec.name} is long-running; pass --heavy to run it")
    report = run_scenario(spec, jobs=args.jobs)
    text = report.text()
    out.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
            for G in report.survivors:
                if G.n <= 62:
                    fh.write(write_graph6(G) + "\n")
    return 0 if report.passed else 1


# --- argument parsing ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specter", description="Star-complement tools for strongly regular graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def srg(sp):
        sp.add_argument("params", type=int, nargs=4, metavar="N", help="v k lambda mu")

    def parallel(sp):
        sp.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes (default $SPECTER_JOBS or 1)")
        sp.add_argument("--shard", default=None, help="process only shard i of n (by canonical-form hash)")

    sp = sub.add_parser("params", help="feasibility report")
    srg(sp)

    sp = sub.add_parser("bvec", help="enumerate b-vectors for a degree histogram")
    srg(sp)
    sp.add_argument("--degrees", type=_degrees, required=True, help="d0,d1,... vertex counts by degree")
    sp.add_argument("--cap", type=_cap, action="append", help="i=n: at most n outside vertices with i neighbours")

    sp = sub.add_parser("interlace", help="keep graph6 inputs whose spectrum interlaces")
    srg(sp)
    parallel(sp)

    sp = sub.add_parser("extend", help="one isomorph-free extension level")
    srg(sp)
    parallel(sp)
    sp.add_argument("--r", type=int, default=None)
    sp.add_argument("--target", type=int, default=None)
    sp.add_argument("--no-graceful", action="store_true")

    sp = sub.add_parser("compgraph", help="comparability graphs of star complements")
    parallel(sp)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--min-order", type=int, default=0)
    sp.add_argument("--irregular-host", action="store_true", help="drop the <u,1> = -1 condition")

    sp = sub.add_parser("clique", help="clique verdicts for adjacency dumps")
    sp.add_argument("--cutoff", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=_default_jobs())

    sp = sub.add_parser("pipeline", help="full star-complement check per seed")
    srg(sp)
    parallel(sp)
    sp.add_argument("--r", type=int, default=None)
    sp.add_argument("--target", type=int, default=None)
    sp.add_argument("--no-graceful", action="store_true")
    sp.add_argument("--checkpoint", default=None, help="checkpoint directory (single seed)")
    sp.add_argument("--time-budget", type=float, default=None, help="seconds before stopping inconclusive")

    sp = sub.add_parser("scenario", help="run a built-in or JSON scenario")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--heavy", action="store_true", help="allow long-running scenarios")
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    sp.add_argument("--out", default=None, help="also write the report and survivors here")
    return parser


def main(argv: Iterable[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be >= 1")
        if hasattr(args, "shard"):
            args.shard = _shard(args.shard)
        cmd = args.command
        if cmd == "params":
            return cmd_params(args, stdout)
        if cmd == "bvec":
            return cmd_bvec(args, stdout)
        if cmd == "interlace":
            return cmd_interlace(args, stdin, stdout)
        if cmd == "extend":
            return cmd_extend(args, stdin, stdout)
        if cmd == "compgraph":
            return cmd_compgraph(args, stdin, stdout)
        if cmd == "clique":
            return cmd_clique(args, stdin, stdout)
        if cmd == "pipeline":
            return cmd_pipeline(args, stdin, stdout)
        return cmd_scenario(args, stdout)
    except UsageError as exc:
        print(f"specter {args.command}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"specter {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
