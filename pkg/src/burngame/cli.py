"""Command-line interface: compute, corpus, verify, sweep, play."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .classical import burning_number, gamma_k
from .corpus import CorpusError, CorpusSpec, enumerate_graphs, stream_to_file, trees
from .engine import BURNER, STALLER, GameSolver, Player, burner_only_value, staller_only_value
from .formats import FormatError, emit_graph6, parse_graph6, read_graph_file
from .generators import parse_family
from .graph import Graph, GraphError, mask_of
from .play import EXACT_MAX_VERTICES, Session, SessionAborted, load_recording, scripted_reader
from .verification import CATALOG, CHECKS_BY_ID, check_example_2_8, check_example_5_2, tree_reduction_gaps
from .verification.bounds import FAMILY_CAPS, BoundError
from .verification.runner import FAMILY_RANGES, Report, family_report, product_sweep, run_suite

JOBS_ENV = "BURNGAME_JOBS"
GAME_MAX_VERTICES = 24
QUANTITIES = ("bg", "bg-prime", "b", "cl", "burner-only", "relative", "gamma")


class UsageError(Exception):
    pass


def _player(text: str) -> Player:
    try:
        return {"burner": BURNER, "staller": STALLER}[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"expected burner or staller, got {text!r}") from None


def parse_range(text: str) -> range:
    """``"6"`` or ``"4..7"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            r = range(int(lo), int(hi) + 1)
        else:
            r = range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if not r:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return r


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _add_source(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--family", help="family spec such as path:9 or cartesian(path:3,cycle:4)")
    group.add_argument("--graph6", help="graph in graph6 format")
    group.add_argument("--file", help="file with graph6 lines or an edge list")


def _graphs_from(args) -> list[Graph]:
    if args.family:
        return [parse_family(args.family)]
    if args.graph6:
        return [parse_graph6(args.graph6)]
    if args.file:
        graphs = read_graph_file(args.file)
        if not graphs:
            raise UsageError(f"{args.file}: no graphs")
        return graphs
    return []


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="burngame", description="Exact tools for the two-player burning game.")
    parser.add_argument("--config", help="JSON file whose keys supply defaults for the chosen command's flags")
    sub = parser.add_subparsers(dest="command", required=True)
    parser.commands = {}

    p = parser.commands["compute"] = sub.add_parser("compute", help="compute one quantity of a graph")
    _add_source(p)
    p.add_argument("--quantity", choices=QUANTITIES, default="bg")
    p.add_argument("--burned", default="", help="comma-separated burned vertices (relative)")
    p.add_argument("--starter", type=_player, default=BURNER, help="burner or staller (relative)")
    p.add_argument("--k", type=int, default=1, help="distance for gamma")
    p.add_argument("--trace", action="store_true", help="also print an optimal line of play or a burning sequence")
    p.add_argument("--max-n", type=int, default=GAME_MAX_VERTICES, help="refuse game quantities above this order")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = parser.commands["corpus"] = sub.add_parser("corpus", help="write a graph corpus as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--both-connected", action="store_true")
    p.add_argument("--labeled", action="store_true", help="every labeled graph instead of one per class")
    p.add_argument("--trees", action="store_true", help="non-isomorphic trees instead")
    p.add_argument("--output", help="file to write (default stdout)")

    p = parser.commands["verify"] = sub.add_parser("verify", help="run checks and emit a report")
    p.add_argument("--suite", default="all", help="all, a check id, comma-separated ids, example-2.8, example-5.2, products or families")
    p.add_argument("--n", type=parse_range, help="corpus order N or LO..HI")
    p.add_argument("--max-n", type=int, help="corpus orders 1..MAX_N")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--both-connected", action="store_true")
    p.add_argument("--dedup", action="store_true", default=True, help="one graph per isomorphism class (default)")
    p.add_argument("--labeled", dest="dedup", action="store_false", help="every labeled graph")
    p.add_argument("--trees", action="store_true", help="use the tree corpus")
    _add_source(p)
    p.add_argument("--jobs", type=int, default=_default_jobs(), help=f"worker processes (default from {JOBS_ENV} or 1)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", help="report file (default stdout)")
    p.add_argument("--include-long-running", action="store_true")

    p = parser.commands["sweep"] = sub.add_parser("sweep", help="family windows, product checks or the tree-reduction gap report")
    p.add_argument("kind", choices=("families", "products", "tree-gap"))
    p.add_argument("--family", choices=tuple(FAMILY_CAPS), help="restrict a families sweep")
    p.add_argument("--range", type=parse_range, help="family parameter range")
    p.add_argument("--n", type=parse_range, default=range(4, 7), help="orders for tree-gap")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output")

    p = parser.commands["play"] = sub.add_parser("play", help="play against the engine in the terminal")
    _add_source(p)
    p.add_argument("--human", type=_player, default=STALLER, help="your side: burner or staller")
    p.add_argument("--starter", type=_player, default=BURNER)
    p.add_argument("--heuristic", action="store_true", help="force the heuristic engine")
    p.add_argument("--record", help="save your inputs to this file")
    p.add_argument("--replay", help="replay a recorded session")
    return parser


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                config = json.load(fh)
        except (OSError, ValueError) as exc:
            parser.error(f"cannot read --config: {exc}")
        if not isinstance(config, dict):
            parser.error("--config must hold a JSON object")
        sub = parser.commands[args.command]
        known = {a.dest for a in sub._actions}
        unknown = set(config) - known
        if unknown:
            parser.error(f"unknown config keys: {', '.join(sorted(unknown))}")
        converted = {}
        for action in sub._actions:
            if action.dest in config:
                value = config[action.dest]
                if action.type is not None and isinstance(value, str):
                    value = action.type(value)
                converted[action.dest] = value
        sub.set_defaults(**converted)
        args = parser.parse_args(argv)
    return args


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    graphs = _graphs_from(args)
    if not graphs:
        raise UsageError("compute needs --family, --graph6 or --file")
    g = graphs[0]
    q = args.quantity
    out: dict = {"quantity": q, "n": g.n}
    trace = None
    if q in ("bg", "bg-prime", "cl", "burner-only", "relative") and g.n > args.max_n:
        raise UsageError(f"graph has {g.n} vertices; game quantities are capped at --max-n {args.max_n}")
    if q in ("bg", "bg-prime", "relative"):
        starter = {"bg": BURNER, "bg-prime": STALLER}.get(q, args.starter)
        burned = mask_of(int(t) for t in args.burned.split(",") if t.strip()) if q == "relative" else 0
        if burned >> g.n:
            raise UsageError(f"burned vertex outside 0..{g.n - 1}")
        solver = GameSolver(g)
        if args.trace:
            value, pv = solver.principal_variation(burned, starter)
            trace = pv.to_json()
        else:
            value = solver.value(burned, starter)
        if q == "relative":
            out.update(burned=args.burned, starter=str(starter))
    elif q == "b":
        value, seq = burning_number(g)
        if args.trace:
            trace = seq
    elif q == "cl":
        value = staller_only_value(g)
    elif q == "burner-only":
        value = burner_only_value(g)
    else:
        if args.k < 1:
            raise UsageError("--k must be at least 1")
        value = gamma_k(g, args.k)
        out["k"] = args.k
    out["value"] = value
    if args.format == "json":
        if trace is not None:
            out["trace"] = trace
        print(json.dumps(out))
        return 0
    print(value)
    if trace is not None:
        if q == "b":
            print("burning sequence: " + " ".join(map(str, trace)))
        else:
            for i, rnd in enumerate(trace["rounds"], 1):
                move = "" if rnd["selected"] is None else f"; {rnd['actor']} burns {rnd['selected']}"
                print(f"round {i}: spread {rnd['spread']}{move}")
    return 0


def cmd_corpus(args) -> int:
    if args.trees:
        graphs = list(trees(args.n))
        text = "".join(emit_graph6(g) + "\n" for g in graphs)
        _emit(text, args.output)
        count = len(graphs)
    else:
        spec = CorpusSpec(args.n, args.connected, args.both_connected, dedup=not args.labeled)
        if args.output:
            count = stream_to_file(spec, args.output)
        else:
            count = 0
            for g in enumerate_graphs(spec):
                sys.stdout.write(emit_graph6(g) + "\n")
                count += 1
    print(f"{count} graphs", file=sys.stderr)
    return 0


def _verify_graphs(args) -> tuple[list[Graph], str]:
    explicit = _graphs_from(args)
    if explicit:
        return explicit, args.family or args.graph6 or args.file
    if args.n is not None:
        orders = args.n
    elif args.max_n is not None:
        orders = range(1, args.max_n + 1)
    else:
        raise UsageError("verify needs --n, --max-n, or a graph source")
    graphs: list[Graph] = []
    for n in orders:
        if args.trees:
            graphs.extend(trees(n))
        else:
            graphs.extend(enumerate_graphs(CorpusSpec(n, args.connected, args.both_connected, args.dedup)))
    flags = [name for name, on in (("trees", args.trees), ("connected", args.connected), ("both-connected", args.both_connected)) if on]
    kind = "classes" if args.dedup else "labeled"
    return graphs, f"n {orders.start}..{orders.stop - 1} {kind}" + (f" ({', '.join(flags)})" if flags else "")


def _example_report(name: str, long_running: bool) -> Report:
    if name == "example-2.8":
        if long_running:
            print("warning: running bounded searches on the 52-vertex graph", file=sys.stderr)
        outcome = check_example_2_8(long_running)
    else:
        outcome = check_example_5_2()
    return Report(name, "worked example", outcome.results, outcome.notes)


def cmd_verify(args) -> int:
    suite = args.suite
    start = time.monotonic()
    if suite in ("example-2.8", "example-5.2"):
        report = _example_report(suite, args.include_long_running)
    elif suite == "products":
        report = product_sweep(jobs=args.jobs)
    elif suite == "families":
        report = family_report(jobs=args.jobs)
    else:
        if suite == "all":
            checks = list(CATALOG)
        else:
            ids = [s.strip() for s in suite.split(",") if s.strip()]
            missing = [i for i in ids if i not in CHECKS_BY_ID]
            if missing:
                raise UsageError(f"unknown check ids: {', '.join(missing)}")
            checks = [CHECKS_BY_ID[i] for i in ids]
        graphs, corpus = _verify_graphs(args)
        report = run_suite(checks, graphs, jobs=args.jobs, suite=suite, corpus=corpus)
    text = report.to_csv() if args.format == "csv" else report.dumps() + "\n"
    _emit(text, args.output)
    counts = report.counts
    print(
        f"{suite}: {counts['pass']} pass, {counts['fail']} fail, {counts['skip']} skip, {counts['note']} note "
        f"in {time.monotonic() - start:.1f}s",
        file=sys.stderr,
    )
    for note in report.notes:
        print(note, file=sys.stderr)
    return report.exit_code


def cmd_sweep(args) -> int:
    if args.kind == "families":
        if args.family:
            families = {args.family: args.range or FAMILY_RANGES[args.family]}
        else:
            if args.range:
                raise UsageError("--range needs --family")
            families = None
        report = family_report(families, jobs=args.jobs)
    elif args.kind == "products":
        report = product_sweep(jobs=args.jobs)
    else:
        rows = []
        for n in args.n:
            rows.extend(tree_reduction_gaps(enumerate_graphs(CorpusSpec(n, connected_only=True))))
        gaps: dict[int, int] = {}
        for row in rows:
            gaps[row.gap] = gaps.get(row.gap, 0) + 1
        if args.format == "csv":
            text = "graph6,bg,min_tree_bg,trees,gap\n" + "".join(
                f"{r.graph6},{r.bg},{r.min_tree_bg},{r.trees},{r.gap}\n" for r in rows
            )
        else:
            text = json.dumps({"rows": [r.to_json() for r in rows], "gap_counts": {str(k): v for k, v in sorted(gaps.items())}}, indent=1) + "\n"
        _emit(text, args.output)
        print("gap counts: " + ", ".join(f"{k}: {v}" for k, v in sorted(gaps.items())), file=sys.stderr)
        return 0
    text = report.to_csv() if args.format == "csv" else report.dumps() + "\n"
    _emit(text, args.output)
    return report.exit_code


def cmd_play(args) -> int:
    if args.replay:
        session, moves = load_recording(args.replay)
        read = scripted_reader(moves)
    else:
        graphs = _graphs_from(args)
        if not graphs:
            raise UsageError("play needs --family, --graph6 or --file")
        g = graphs[0]
        exact = not args.heuristic and g.n <= EXACT_MAX_VERTICES
        session = Session(g, args.human, args.starter, exact)

        def read() -> str:
            line = sys.stdin.readline()
            if not line:
                raise EOFError
            return line.rstrip("\n")

    def write(line: str) -> None:
        print(line, flush=True)

    try:
        session.run(read, write)
        status = 0
    except SessionAborted:
        status = 1
    if args.record:
        with open(args.record, "w", encoding="utf-8") as fh:
            json.dump(session.record(), fh)
    return status


COMMANDS = {"compute": cmd_compute, "corpus": cmd_corpus, "verify": cmd_verify, "sweep": cmd_sweep, "play": cmd_play}


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GraphError, FormatError, CorpusError, BoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
