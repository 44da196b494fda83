"""Minimal induced Steiner subgraphs of claw-free graphs, by supergraph traversal.

A solution is an inclusion-minimal vertex set ``X`` containing the
terminals with ``G[X]`` connected. In a claw-free graph, removing a
non-terminal ``v`` from a solution leaves exactly two components, each
holding a terminal. A neighbor of ``X`` is obtained by swapping ``v`` for
some ``w`` next to one side, re-minimising both sides, reconnecting them by
a shortest path from ``w`` and re-minimising the union. These moves connect
every solution to every other, so a breadth-first traversal from any one
solution lists them all (using memory for every solution seen).

The module also builds the line-graph instance on which this problem
contains ordinary Steiner tree enumeration.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Callable, Iterable, Iterator

from .errors import GraphError, InfeasibleError, IntegrityError
from .graph import Graph

__all__ = [
    "enum_minimal_induced_steiner",
    "is_claw_free",
    "iter_minimal_induced_steiner",
    "mu",
    "neighbors",
    "reduce_to_induced",
]


def is_claw_free(g: Graph) -> bool:
    """True iff no vertex has three pairwise non-adjacent neighbors."""
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    for v in range(g.n):
        around = sorted(nbrs[v])
        for i, a in enumerate(around):
            rest = [b for b in around[i + 1 :] if b not in nbrs[a]]
            for j, b in enumerate(rest):
                for c in rest[j + 1 :]:
                    if c not in nbrs[b]:
                        return False
    return True


def _connected(nbrs: list[set[int]], X: set[int]) -> bool:
    if not X:
        return True
    start = next(iter(X))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y in X and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(X)


def _parts(nbrs: list[set[int]], X: set[int]) -> list[set[int]]:
    left = set(X)
    out = []
    for s in sorted(X):
        if s not in left:
            continue
        left.discard(s)
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y in left:
                    left.discard(y)
                    comp.add(y)
                    stack.append(y)
        out.append(comp)
    return out


def _nbrs(g: Graph) -> list[set[int]]:
    return [set(g.neighbors(v)) for v in range(g.n)]


def _mu(nbrs: list[set[int]], X: Iterable[int], keep: Iterable[int]) -> frozenset[int]:
    X = set(X)
    keep = set(keep)
    changed = True
    while changed:
        changed = False
        for x in sorted(X - keep):
            X.discard(x)
            if _connected(nbrs, X):
                changed = True
                break
            X.add(x)
    return frozenset(X)


def mu(g: Graph, X: Iterable[int], keep: Iterable[int]) -> frozenset[int]:
    """A minimal subset of ``X`` that contains ``keep`` and induces a connected graph.

    Non-kept vertices are deleted smallest id first while connectivity
    survives, restarting the scan after each deletion.
    """
    X, keep = set(X), set(keep)
    nbrs = _nbrs(g)
    if not keep <= X:
        raise GraphError("kept vertices must lie inside X")
    if not _connected(nbrs, X):
        raise GraphError("X must induce a connected subgraph")
    return _mu(nbrs, X, keep)


def _boundary(nbrs: list[set[int]], C: Iterable[int]) -> set[int]:
    C = set(C)
    return {y for x in C for y in nbrs[x]} - C


def _neighbors(nbrs: list[set[int]], W: frozenset[int], X: frozenset[int]):
    for v in sorted(X - W):
        parts = _parts(nbrs, set(X) - {v})
        if len(parts) != 2:
            raise IntegrityError(
                f"removing {v} leaves {len(parts)} components; the graph is not claw-free"
                " or the set is not minimal")
        for C1, C2 in (parts, parts[::-1]):
            for w in sorted(_boundary(nbrs, C1) - {v}):
                C1w = _mu(nbrs, C1 | {w}, (W & C1) | {w})
                C2w = _mu(nbrs, C2, W & C2)
                avoid = (_boundary(nbrs, C1w - {w}) | C1w | C2w | {v}) - {w}
                goal = _boundary(nbrs, C2w)
                prev = {w: w}
                queue = deque([w])
                end = -1
                while queue:
                    x = queue.popleft()
                    if x in goal:
                        end = x
                        break
                    for y in sorted(nbrs[x]):
                        if y not in prev and y not in avoid:
                            prev[y] = x
                            queue.append(y)
                if end < 0:
                    continue
                path = {end}
                while end != w:
                    end = prev[end]
                    path.add(end)
                yield v, w, _mu(nbrs, C1w | C2w | path, W)


def neighbors(g: Graph, W: Iterable[int], X: Iterable[int]) -> list[tuple[int, int, frozenset[int]]]:
    """All ``(v, w, Z)`` where ``Z`` is the neighbor of ``X`` with respect to ``(v, w)``."""
    return list(dict.fromkeys(_neighbors(_nbrs(g), frozenset(W), frozenset(X))))


def iter_minimal_induced_steiner(g: Graph, W: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Yield every minimal induced Steiner subgraph as a sorted vertex tuple."""
    if g.directed:
        raise GraphError("induced Steiner enumeration needs an undirected graph")
    W = frozenset(W)
    if not W:
        raise GraphError("terminal set is empty")
    for w in W:
        if not 0 <= w < g.n:
            raise GraphError(f"terminal {w} outside 0..{g.n - 1}")
    if not is_claw_free(g):
        raise GraphError("graph is not claw-free")
    nbrs = _nbrs(g)
    comp = next(c for c in _parts(nbrs, set(range(g.n))) if min(W) in c)
    if not W <= comp:
        raise InfeasibleError("terminals lie in different components")
    seed = _mu(nbrs, comp, W)
    seen = {seed}
    queue = deque([seed])
    while queue:
        X = queue.popleft()
        yield tuple(sorted(X))
        for _, _, Z in _neighbors(nbrs, W, X):
            if Z not in seen:
                seen.add(Z)
                queue.append(Z)


def enum_minimal_induced_steiner(g: Graph, W: Iterable[int],
                                 sink: Callable[[tuple[int, ...]], object]) -> int:
    count = 0
    for sol in iter_minimal_induced_steiner(g, W):
        sink(sol)
        count += 1
    return count


def reduce_to_induced(g: Graph, W: Iterable[int]) -> tuple[Graph, list[int], dict[int, int]]:
    """Line graph of ``g`` with one extra vertex per terminal.

    Vertex ``i < m`` stands for the ``i``-th edge id in increasing order;
    terminal ``w`` (in increasing order) becomes vertex ``m + j`` adjacent
    to every edge at ``w``. Returns the graph, the new terminals, and the
    map from line-graph vertices back to edge ids.
    """
    if g.directed:
        raise GraphError("line-graph reduction needs an undirected graph")
    eids = g.edge_ids()
    vertex_of = {e: i for i, e in enumerate(eids)}
    W = sorted(set(W))
    pairs = set()
    for v in range(g.n):
        at = sorted({vertex_of[e] for _, e in g.adj[v]})
        for i, a in enumerate(at):
            for b in at[i + 1 :]:
                pairs.add((a, b))
    terms = []
    for j, w in enumerate(W):
        t = len(eids) + j
        terms.append(t)
        for _, e in g.adj[w]:
            pairs.add((vertex_of[e], t))
    h = Graph(len(eids) + len(W), sorted(pairs))
    return h, terms, {i: e for e, i in vertex_of.items()}
