"""Command-line front end.

Exit status: 0 success, 1 target unreachable, 2 bad input, 3 verification
mismatch.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from typing import TextIO

from .graph import Graph, GraphError
from .instances import random_instance
from .oracle import ExceptionStore
from .reference import avoiding_distances
from .router import RouteOutcome, RouteTable, route_all, route_single, route_weak
from .textio import ParseError, format_length, parse_exceptions, parse_graph

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3

MODES = {"route": "single", "route-all": "all", "route-weak": "weak", "verify": "verify"}


@dataclass
class RunConfig:
    mode: str
    graph_path: str | None = None
    exceptions_path: str | None = None
    source: str | None = None
    target: str | None = None
    oracle: str | None = None
    stats: bool = False
    undirected: bool = False
    random: int = 100
    seed: int = 0

    def validate(self) -> None:
        if self.mode not in MODES.values():
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "single" and not self.target:
            raise ValueError("route needs --target")
        if self.mode != "verify" and not (self.graph_path and self.source):
            raise ValueError(f"{self.mode} needs --graph and --source")
        if self.graph_path and not self.source:
            raise ValueError("--graph needs --source")


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def load(config: RunConfig) -> tuple[Graph, ExceptionStore]:
    g = parse_graph(_read(config.graph_path), undirected=config.undirected)
    text = _read(config.exceptions_path) if config.exceptions_path else ""
    return g, parse_exceptions(text, g)


def _oracle(store: ExceptionStore, config: RunConfig, weak: bool):
    kind = config.oracle or ("any" if weak else "earliest")
    return store.query_any if kind == "any" else store.query_earliest


def _names(g: Graph, path) -> str:
    return " ".join(g.names[v] for v in path)


def _stats(out: TextIO, iterations: int, queries: int, replicas: int) -> None:
    print(f"ITERATIONS {iterations}", file=out)
    print(f"QUERIES {queries}", file=out)
    print(f"REPLICAS {replicas}", file=out)


def _print_single(out: TextIO, g: Graph, o: RouteOutcome, stats: bool) -> None:
    if o.feasible:
        print(f"PATH {_names(g, o.path)}", file=out)
        print(f"LENGTH {format_length(o.length)}", file=out)
    else:
        print("INFEASIBLE", file=out)
    if stats:
        _stats(out, o.iterations, o.oracle_queries, o.replicas_created)


def _print_table(out: TextIO, g: Graph, table: RouteTable, stats: bool) -> None:
    for t in sorted(table):
        o = table[t]
        if o.feasible:
            print(f"{g.names[t]} {format_length(o.length)} {_names(g, o.path)}", file=out)
        else:
            print(f"{g.names[t]} INFEASIBLE", file=out)
    if stats:
        _stats(out, table.iterations, table.oracle_queries, table.replicas_created)


def verify_instance(g: Graph, store: ExceptionStore, s: int, t: int | None = None) -> list[str]:
    """Cross-check every routing variant against the product-automaton solver.

    Returns a description of each disagreement; empty means all agree.
    """
    expected = avoiding_distances(g, s, store)
    problems = []
    targets = range(g.n0) if t is None else [t]
    for d in targets:
        got = route_single(g, s, d, store.query_earliest).length
        if got != expected[d]:
            problems.append(f"route {g.names[s]}->{g.names[d]}: got {got}, expected {expected[d]}")
    for name, table in (("route-all", route_all(g, s, store.query_earliest)),
                        ("route-weak", route_weak(g, s, store.query_any))):
        for d in targets:
            if table[d].length != expected[d]:
                problems.append(
                    f"{name} {g.names[s]}->{g.names[d]}: got {table[d].length}, expected {expected[d]}"
                )
    return problems


def run(config: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        config.validate()
        if config.mode == "verify" and not config.graph_path:
            return _verify_random(config, out)
        g, store = load(config)
        s = g.vertex(config.source)
        t = g.vertex(config.target) if config.target else None
    except (ValueError, InputError) as e:
        print(f"error: {e}", file=err)
        return EXIT_INPUT

    if config.mode == "single":
        outcome = route_single(g, s, t, _oracle(store, config, weak=False))
        _print_single(out, g, outcome, config.stats)
        return EXIT_OK if outcome.feasible else EXIT_INFEASIBLE
    if config.mode == "all":
        _print_table(out, g, route_all(g, s, _oracle(store, config, weak=False)), config.stats)
        return EXIT_OK
    if config.mode == "weak":
        _print_table(out, g, route_weak(g, s, _oracle(store, config, weak=True)), config.stats)
        return EXIT_OK

    problems = verify_instance(g, store, s, t)
    return _report(out, problems)


def _report(out: TextIO, problems: list[str]) -> int:
    if not problems:
        print("MATCH", file=out)
        return EXIT_OK
    print("MISMATCH", file=out)
    for p in problems:
        print(f"  {p}", file=out)
    return EXIT_MISMATCH


def _verify_random(config: RunConfig, out: TextIO) -> int:
    rng = random.Random(config.seed)
    status = EXIT_OK
    for _ in range(config.random):
        inst = random_instance(rng)
        if _report(out, verify_instance(inst.graph, inst.store, inst.source)) != EXIT_OK:
            status = EXIT_MISMATCH
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forbiddenpaths",
        description="Shortest walks avoiding forbidden paths reported by an oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command, help_text in (
        ("route", "shortest avoiding walk from --source to --target"),
        ("route-all", "avoiding walks from --source to every vertex"),
        ("route-weak", "all destinations, querying the oracle inside Dijkstra"),
        ("verify", "cross-check the router against the product-automaton solver"),
    ):
        p = sub.add_parser(command, help=help_text)
        p.add_argument("--graph", help="graph file ('n m' header, then 'u v w' lines)")
        p.add_argument("--exceptions", help="forbidden paths, one per line")
        p.add_argument("--source")
        p.add_argument("--target")
        p.add_argument("--undirected", action="store_true", help="each graph line adds both arcs")
        p.add_argument("--stats", action="store_true")
        p.add_argument("--oracle", choices=("earliest", "any"))
        if command == "verify":
            p.add_argument("--random", type=int, default=100,
                           help="number of random instances when no --graph is given")
            p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        mode=MODES[args.command],
        graph_path=args.graph,
        exceptions_path=args.exceptions,
        source=args.source,
        target=args.target,
        oracle=args.oracle,
        stats=args.stats,
        undirected=args.undirected,
        random=getattr(args, "random", 100),
        seed=getattr(args, "seed", 0),
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
