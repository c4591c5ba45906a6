"""Command-line interface.

Exit codes: 0 success, 1 condition disagreement, 2 input error,
3 budget configuration error (a non-positive budget, or an enumeration
that the configured budget cannot hold).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators
from .analysis import Budgets, analyze, batch_verify, family_corpus, FAMILIES
from .cycles import DEFAULT_MAX_CYCLES
from .errors import BudgetExceeded, GraphError, InvalidState, ParseError
from .euler import (
    DEFAULT_MAX_CIRCUITS,
    best_count,
    de_bruijn_interlace,
    enumerate_eulerian_circuits,
    find_eulerian_circuit,
    find_interlacing_pair,
)
from .io import format_graph, parse_graph, to_dot
from .lattice import DEFAULT_MAX_LATTICE_EDGES, build_poset
from .partition import DEFAULT_MAX_PARTITIONS, enumerate_partitions, veblen_partition

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class _BudgetConfigError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _load(args):
    text = sys.stdin.read() if args.graph == "-" else Path(args.graph).read_text()
    return parse_graph(text, loops=args.loops)


def _budgets(args) -> Budgets:
    vals = {
        "max_cycles": args.max_cycles,
        "max_partitions": args.max_partitions,
        "max_circuits": args.max_circuits,
        "max_lattice_edges": args.max_lattice_edges,
    }
    for k, v in vals.items():
        if v < 1:
            raise _BudgetConfigError(f"--{k.replace('_', '-')} must be positive, got {v}")
    return Budgets(**vals)


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "cactus":
        g = generators.gen_cactus(args.seed, args.t, max_len=args.max_len)
    elif fam == "christmas":
        g = generators.gen_christmas_cactus(args.seed, args.t, max_len=args.max_len)
    elif fam == "random_eulerian":
        g = generators.gen_random_eulerian(args.seed, args.n, args.k, max_len=args.max_len)
    elif fam == "random_multigraph":
        g = generators.gen_random_even_multigraph(args.seed, args.n, args.k, max_len=args.max_len)
    elif fam == "two_in_two_out":
        g = generators.gen_two_in_two_out(args.seed, args.n)
    else:
        g = generators.gen_de_bruijn(args.n)
    sys.stdout.write(format_graph(g))
    return EXIT_OK


def cmd_analyze(args) -> int:
    report = analyze(_load(args), _budgets(args))
    print(report.dumps() if not args.pretty else json.dumps(report.to_json(), sort_keys=True, indent=2))
    return EXIT_OK if report.agrees else EXIT_DISAGREE


def cmd_partitions(args) -> int:
    g = _load(args)
    budgets = _budgets(args)
    if args.veblen:
        _emit(veblen_partition(g).to_json())
    else:
        _emit([p.to_json() for p in enumerate_partitions(g, budgets.max_partitions)])
    return EXIT_OK


def _pair_json(pair):
    if pair is None:
        return None
    return {"a": pair.a, "b": pair.b, "rotation": pair.rotation, "indices": list(pair.indices)}


def cmd_euler(args) -> int:
    budgets = _budgets(args)
    if args.debruijn is not None:
        rep = de_bruijn_interlace(args.debruijn)
        _emit(
            {
                "n": rep.n,
                "circuit_count": rep.circuit_count,
                "circuit": list(rep.circuit.edges),
                "sequence": rep.sequence,
                "pair": _pair_json(rep.pair),
                "pair_strings": list(rep.pair_strings),
            }
        )
        return EXIT_OK
    if args.graph is None:
        raise ParseError("euler needs a graph file or --debruijn n", 0)
    g = _load(args)
    out: dict = {"count": best_count(g)}
    if args.enumerate:
        cap = args.cap if args.cap is not None else budgets.max_circuits
        if cap < 1:
            raise _BudgetConfigError(f"--cap must be positive, got {cap}")
        circuits = enumerate_eulerian_circuits(g, cap)
        out["circuits"] = [list(z.edges) for z in circuits]
        if args.interlace:
            out["pairs"] = [_pair_json(find_interlacing_pair(g, z)) for z in circuits]
    elif not args.count_only:
        z = find_eulerian_circuit(g)
        out["circuit"] = list(z.edges)
        if args.interlace:
            out["pair"] = _pair_json(find_interlacing_pair(g, z))
    _emit(out)
    return EXIT_OK


def cmd_lattice(args) -> int:
    g = _load(args)
    budgets = _budgets(args)
    poset = build_poset(g, max_edges=budgets.max_lattice_edges)
    out = poset.to_json()
    out["is_lattice"] = poset.is_lattice()
    out["minimal"] = poset.minimal()
    _emit(out)
    return EXIT_OK


def _directory_corpus(path: Path, loops: bool):
    ok, failed = [], []
    for f in sorted(path.iterdir()):
        if not f.is_file():
            continue
        try:
            ok.append((f"{path.name}/{f.name}", parse_graph(f.read_text(), loops=loops)))
        except (OSError, UnicodeDecodeError, ParseError) as exc:
            failed.append((f.name, str(exc)))
    return ok, failed


def cmd_batch(args) -> int:
    budgets = _budgets(args)
    failed = []
    if args.directory is not None:
        instances, failed = _directory_corpus(Path(args.directory), args.loops)
    else:
        instances = []
        for item in args.family:
            name, _, count = item.partition(":")
            instances += family_corpus(name, int(count or 100), args.seed)
    summary = batch_verify(instances, budgets, jobs=args.jobs)
    summary.errors = failed + summary.errors
    for line in summary.lines():
        print(line)
    if summary.disagreements:
        return EXIT_DISAGREE
    return EXIT_INPUT if summary.errors else EXIT_OK


def cmd_dot(args) -> int:
    sys.stdout.write(to_dot(_load(args)))
    return EXIT_OK


def _add_graph_args(p, optional=False):
    p.add_argument("graph", nargs="?" if optional else None, help="edge-list file, '-' for stdin")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--loops", action="store_true", help="accept 'u u' loop lines in digraph input")
    common.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)
    common.add_argument("--max-partitions", type=int, default=DEFAULT_MAX_PARTITIONS)
    common.add_argument("--max-circuits", type=int, default=DEFAULT_MAX_CIRCUITS)
    common.add_argument("--max-lattice-edges", type=int, default=DEFAULT_MAX_LATTICE_EDGES)

    parser = argparse.ArgumentParser(prog="eulercactus", description="Unique cycle partitions and unique Eulerian circuits.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generated graph in edge-list format")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=4, help="vertices (random_eulerian, two_in_two_out) or order (de_bruijn)")
    p.add_argument("--k", type=int, default=3, help="number of cycles (random_eulerian)")
    p.add_argument("--t", type=int, default=3, help="number of cycles (cactus, christmas)")
    p.add_argument("--max-len", type=int, default=4)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", parents=[common], help="evaluate every condition and report agreement")
    _add_graph_args(p)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("partitions", parents=[common], help="list all cycle partitions")
    _add_graph_args(p)
    p.add_argument("--veblen", action="store_true", help="only the greedy partition")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("euler", parents=[common], help="Eulerian circuits: count, list, interlacing pairs")
    _add_graph_args(p, optional=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--cap", type=int, default=None, help="enumeration cap (default --max-circuits)")
    p.add_argument("--interlace", action="store_true")
    p.add_argument("--debruijn", type=int, default=None, metavar="n")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("lattice", parents=[common], help="the poset of Eulerian edge partitions")
    _add_graph_args(p)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("batch", parents=[common], help="analyze a corpus and report disagreements")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--directory")
    src.add_argument("--family", action="append", help="FAMILY[:COUNT], repeatable")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("dot", parents=[common], help="Graphviz export")
    _add_graph_args(p)
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _BudgetConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except BudgetExceeded as exc:
        print(f"error: {exc}; raise the matching --max-* flag", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, KeyError, ValueError, InvalidState, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
