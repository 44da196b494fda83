"""Command-line front end.

``steinerenum [enum] --problem P --input FILE`` streams one solution per
line and finishes with ``# count=N``. ``steinerenum oracle ...`` prints the
brute-force answer in the same format. Exit codes: 0 success, 1 infeasible
instance, 2 bad input or usage, 3 oracle mismatch, 4 delay assertion failed.
"""
from __future__ import annotations

import argparse
import sys
import time
from collections.abc import Iterator
from contextlib import ExitStack
from itertools import islice
from typing import TextIO

from . import oracle
from .directed_steiner import iter_minimal_directed_steiner_trees
from .enumtree import MODES, EnumStats
from .errors import GraphError, InfeasibleError, OracleCapError, SteinerEnumError
from .graph import Graph
from .induced_clawfree import iter_minimal_induced_steiner
from .instance import Instance, InstanceError, read_instance
from .output_queue import MAX_GAP
from .path_enum import iter_st_paths
from .steiner_forest import iter_minimal_steiner_forests
from .steiner_tree import iter_minimal_steiner_trees
from .terminal_steiner import iter_minimal_terminal_steiner_trees

__all__ = ["PROBLEMS", "build_parser", "main", "run"]

PROBLEMS = ("paths", "steiner-tree", "steiner-forest", "terminal", "directed", "induced-clawfree")

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_MISMATCH, EXIT_DELAY = 0, 1, 2, 3, 4


class UsageError(SteinerEnumError):
    """Instance does not fit the requested problem."""


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="steinerenum", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--problem", required=True, choices=PROBLEMS)
    common.add_argument("--input", default="-", help="instance file, '-' for stdin")
    common.add_argument("--output", default="-", help="solution file, '-' for stdout")
    common.add_argument("--count-only", action="store_true", help="print only the final count line")
    common.add_argument("--seed", type=int, default=None, help="reserved for instance generators")

    e = sub.add_parser("enum", parents=[common], help="enumerate solutions (default)")
    e.add_argument("--mode", choices=MODES, default="improved")
    e.add_argument("--limit", type=int, default=None, help="stop after N solutions")
    e.add_argument("--profile", action="store_true", help="delay and tree statistics on stderr")
    e.add_argument("--assert-delay", action="store_true",
                   help=f"fail with exit 4 if more than {MAX_GAP} tour visits separate two outputs")
    e.add_argument("--oracle-check", action="store_true",
                   help="compare against the brute-force oracle (small instances only)")

    sub.add_parser("oracle", parents=[common], help="print the brute-force solution set")
    return p


# -- instance to problem ----------------------------------------------------


def _single_set(inst: Instance, problem: str) -> list[int]:
    if len(inst.terminal_sets) != 1:
        raise UsageError(f"{problem} needs exactly one 't' line, got {len(inst.terminal_sets)}")
    return inst.terminal_sets[0]


def _check_kind(g: Graph, problem: str) -> None:
    want_directed = problem == "directed"
    if problem != "paths" and g.directed != want_directed:
        kind = "directed" if want_directed else "undirected"
        raise UsageError(f"{problem} needs a {kind} graph")


def _st(inst: Instance) -> tuple[int, int]:
    if not inst.terminal_sets:
        raise UsageError("paths needs a 't s t' line")
    first = inst.terminal_sets[0]
    if len(first) != 2:
        raise UsageError(f"paths takes s and t from the first 't' line, which has {len(first)} vertices")
    return first[0], first[1]


def _root(inst: Instance) -> int:
    if inst.root is None:
        raise UsageError("directed needs an 'r' line")
    return inst.root


def _enumerate(inst: Instance, problem: str, mode: str, stats: EnumStats) -> Iterator[tuple]:
    g = inst.graph
    _check_kind(g, problem)
    if problem == "paths":
        s, t = _st(inst)

        def tick(_depth: int) -> None:
            stats.visits += 1

        return (p.edges for p in iter_st_paths(g, s, t, tick))
    if problem == "steiner-tree":
        return iter_minimal_steiner_trees(g, _single_set(inst, problem), mode, stats)
    if problem == "steiner-forest":
        if not inst.terminal_sets:
            raise UsageError("steiner-forest needs at least one 't' line")
        return iter_minimal_steiner_forests(g, inst.terminal_sets, mode, stats)
    if problem == "terminal":
        return iter_minimal_terminal_steiner_trees(g, _single_set(inst, problem), mode, stats)
    if problem == "directed":
        return iter_minimal_directed_steiner_trees(g, _root(inst), _single_set(inst, problem), mode, stats)
    return iter_minimal_induced_steiner(g, _single_set(inst, problem))


def _oracle(inst: Instance, problem: str) -> frozenset:
    g = inst.graph
    _check_kind(g, problem)
    if problem == "paths":
        return oracle.brute_st_paths(g, *_st(inst)).solutions
    if problem == "steiner-tree":
        sols = oracle.brute_steiner_trees(g, _single_set(inst, problem)).solutions
    elif problem == "steiner-forest":
        if not inst.terminal_sets:
            raise UsageError("steiner-forest needs at least one 't' line")
        sols = oracle.brute_steiner_forests(g, inst.terminal_sets).solutions
    elif problem == "terminal":
        sols = oracle.brute_terminal_steiner(g, _single_set(inst, problem)).solutions
    elif problem == "directed":
        r, W = _root(inst), _single_set(inst, problem)
        if r in W:
            raise UsageError("the root cannot be a terminal")
        sols = oracle.brute_directed_steiner(g, r, W).solutions
    else:
        sols = oracle.brute_induced_steiner(g, _single_set(inst, problem)).solutions
    if not sols:
        raise InfeasibleError("no solution exists")
    return sols


# -- output -------------------------------------------------------------------


def _format(g: Graph, problem: str, sol) -> str:
    if problem == "induced-clawfree":
        return " ".join(map(str, sol))
    parts = []
    for e in sol:
        u, v = g.endpoints(e)
        parts.append(f"{u}-{v}")
    return " ".join(parts)


def _key(problem: str, sol) -> object:
    # paths keep their order; every other solution is a set
    return tuple(sol) if problem == "paths" else tuple(sorted(sol))


class _Profile:
    def __init__(self) -> None:
        self.start = time.perf_counter()
        self.last = self.start
        self.deltas: list[float] = []
        self.node_gaps: list[int] = []
        self._visits = 0

    def record(self, visits: int) -> None:
        now = time.perf_counter()
        self.deltas.append(now - self.last)
        self.node_gaps.append(visits - self._visits)
        self.last = now
        self._visits = visits

    def report(self, stats: EnumStats, out: TextIO) -> None:
        total = time.perf_counter() - self.start
        k = len(self.deltas)
        print(f"# solutions={k} wall={total:.6f}s", file=out)
        if k:
            print(f"# delay_s max={max(self.deltas):.6f} mean={sum(self.deltas) / k:.6f}", file=out)
            print(f"# node_gap max={max(self.node_gaps)} mean={sum(self.node_gaps) / k:.3f}", file=out)
        t = stats.tree
        if t.nodes:
            hist = " ".join(f"{c}:{t.children[c]}" for c in sorted(t.children))
            print(f"# tree nodes={t.nodes} internal={t.internal} leaves={t.leaves}"
                  f" single_child={t.single_child}", file=out)
            print(f"# children_hist {hist}", file=out)
        q = stats.queue
        if q is not None:
            print(f"# queue capacity={q.capacity} max_gap={q.max_gap} subtrees={q.subtrees}"
                  f" occupancy_violations={q.occupancy_violations} stalls={q.stalls}"
                  f" pacer_emits={q.pacer_emits} banked={q.banked}", file=out)


def _delay_gap(problem: str, mode: str, stats: EnumStats, prof: _Profile) -> int | None:
    if stats.queue is not None:
        return stats.queue.max_gap
    if problem == "paths":
        return max(prof.node_gaps, default=0)
    return None


def _run_enum(args, inst: Instance, out: TextIO, err: TextIO) -> int:
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be non-negative")
    if args.assert_delay and args.problem != "paths" and args.mode != "queued":
        raise UsageError("--assert-delay needs --mode queued (or --problem paths)")
    g = inst.graph
    stats = EnumStats()
    prof = _Profile()
    expected = _oracle(inst, args.problem) if args.oracle_check else None
    seen: set = set()
    duplicates = 0
    count = 0
    for sol in islice(_enumerate(inst, args.problem, args.mode, stats), args.limit):
        prof.record(stats.visits)
        count += 1
        if expected is not None:
            key = _key(args.problem, sol)
            duplicates += key in seen
            seen.add(key)
        if not args.count_only:
            print(_format(g, args.problem, sol), file=out)
    print(f"# count={count}", file=out)
    out.flush()
    if args.profile:
        prof.report(stats, err)
    if expected is not None:
        extra = seen - expected
        missing = set() if args.limit is not None else expected - seen
        if duplicates or extra or missing:
            print(f"oracle mismatch: {len(missing)} missing, {len(extra)} unexpected,"
                  f" {duplicates} duplicates", file=err)
            return EXIT_MISMATCH
        print(f"# oracle ok ({len(expected)} solutions)", file=err)
    if args.assert_delay:
        gap = _delay_gap(args.problem, args.mode, stats, prof)
        if gap is not None and gap > MAX_GAP:
            print(f"delay assertion failed: {gap} tour visits between outputs", file=err)
            return EXIT_DELAY
    return EXIT_OK


def _run_oracle(args, inst: Instance, out: TextIO) -> int:
    sols = _oracle(inst, args.problem)
    lines = sorted(sorted(s) if args.problem != "paths" else list(s) for s in sols)
    if not args.count_only:
        for sol in lines:
            print(_format(inst.graph, args.problem, sol), file=out)
    print(f"# count={len(lines)}", file=out)
    return EXIT_OK


def run(args: argparse.Namespace, stdin: TextIO | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        with ExitStack() as stack:
            if args.input == "-":
                inst = read_instance(stdin)
            else:
                inst = read_instance(stack.enter_context(open(args.input, encoding="ascii")))
            out = stdout if args.output == "-" else stack.enter_context(
                open(args.output, "w", encoding="ascii", newline="\n"))
            if args.command == "oracle":
                return _run_oracle(args, inst, out)
            return _run_enum(args, inst, out, err)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=err)
        return EXIT_INFEASIBLE
    except OracleCapError as exc:
        print(f"error: instance too large for the oracle: {exc}", file=err)
        return EXIT_INPUT
    except (InstanceError, UsageError, GraphError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] not in ("enum", "oracle", "-h", "--help"):
        argv.insert(0, "enum")
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
