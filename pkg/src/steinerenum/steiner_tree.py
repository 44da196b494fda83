"""Minimal Steiner tree enumeration.

A minimal Steiner tree is grown one path at a time: a partial tree ``T``
(a tree whose leaves are all terminals) branches on every path from
``V(T)`` to a terminal ``w`` outside it whose inner vertices avoid ``V(T)``.
Each such path gives a larger partial tree, and every minimal Steiner tree
containing ``T`` is reached along exactly one branch.

``improved`` mode picks ``w`` so that there are at least two such paths,
or, when no terminal qualifies, recognises that ``T`` has a single minimal
completion and emits it directly. That test reduces to a bridge check on
one completion of ``T`` and costs a single BFS per node.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from typing import NamedTuple

from .enumtree import EnumStats, check_mode, drive
from .errors import GraphError, InfeasibleError
from .graph import Graph, bridges, components, relabel
from .path_enum import iter_set_paths

__all__ = [
    "Completion",
    "complete_minimally",
    "enum_minimal_steiner_trees",
    "find_branching_terminal",
    "iter_minimal_steiner_trees",
]


class Completion(NamedTuple):
    """Outcome of :func:`find_branching_terminal`: exactly one field is set."""

    terminal: int | None
    tree: tuple[int, ...] | None


def _bfs_forest(g: Graph, tree_vertices: Iterable[int]) -> tuple[list[int], list[int], list[int]]:
    """Multi-source BFS from ``V(T)``; returns (order, parent, parent edge)."""
    parent = [-1] * g.n
    pedge = [-1] * g.n
    seen = bytearray(g.n)
    order = sorted(tree_vertices)
    for v in order:
        seen[v] = 1
    adj = g.adj
    for x in order:
        for y, e in adj[x]:
            if not seen[y]:
                seen[y] = 1
                parent[y] = x
                pedge[y] = e
                order.append(y)
    return order, parent, pedge


def _union_of_paths(targets: Iterable[int], parent: list[int], pedge: list[int]) -> set[int]:
    edges: set[int] = set()
    for w in targets:
        while pedge[w] >= 0 and pedge[w] not in edges:
            edges.add(pedge[w])
            w = parent[w]
    return edges


def complete_minimally(g: Graph, W: Iterable[int], tree: Iterable[int],
                       tree_vertices: Iterable[int] | None = None) -> tuple[int, ...]:
    """A minimal Steiner tree containing the partial tree ``tree``.

    The completion is ``T`` plus a BFS forest grown from ``V(T)`` with every
    non-terminal leaf pruned away, i.e. the union of the BFS paths from the
    missing terminals back to ``T``.
    """
    tree = set(tree)
    W = sorted(set(W))
    if tree_vertices is None:
        verts = {x for e in tree for x in g.endpoints(e)} or {W[0]}
    else:
        verts = set(tree_vertices)
    order, parent, pedge = _bfs_forest(g, verts)
    reached = set(order)
    missing = [w for w in W if w not in verts]
    for w in missing:
        if w not in reached:
            raise InfeasibleError(f"terminal {w} is not connected to the partial tree")
    return tuple(sorted(tree | _union_of_paths(missing, parent, pedge)))


def find_branching_terminal(g: Graph, W: Iterable[int], tree: Iterable[int],
                            tree_vertices: Iterable[int] | None = None,
                            bridge_set: frozenset[int] | None = None) -> Completion:
    """A terminal with at least two ``V(T)``-to-terminal paths, or the unique completion.

    A missing terminal ``w`` has two or more valid paths exactly when the
    ``V(T)``-``w`` path of some minimal completion uses a non-bridge of
    ``G``. The smallest such terminal is returned; when there is none the
    completion itself is the only minimal Steiner tree containing ``T``.
    """
    tree = set(tree)
    W = sorted(set(W))
    if tree_vertices is None:
        verts = {x for e in tree for x in g.endpoints(e)} or {W[0]}
    else:
        verts = set(tree_vertices)
    if bridge_set is None:
        bridge_set = bridges(g)
    order, parent, pedge = _bfs_forest(g, verts)
    free = bytearray(g.n)  # 1 when the path back to V(T) has a non-bridge
    for v in order:
        e = pedge[v]
        if e >= 0 and (free[parent[v]] or e not in bridge_set):
            free[v] = 1
    reached = set(order)
    missing = []
    for w in W:
        if w in verts:
            continue
        if w not in reached:
            raise InfeasibleError(f"terminal {w} is not connected to the partial tree")
        if free[w]:
            return Completion(w, None)
        missing.append(w)
    return Completion(None, tuple(sorted(tree | _union_of_paths(missing, parent, pedge))))


def _prepare(g: Graph, W: Iterable[int]) -> tuple[Graph, list[int]]:
    """Restrict ``g`` to the component holding the terminals, renumbered."""
    if g.directed:
        raise GraphError("Steiner tree enumeration needs an undirected graph")
    W = sorted(set(W))
    if not W:
        raise GraphError("terminal set is empty")
    for w in W:
        if not 0 <= w < g.n:
            raise GraphError(f"terminal {w} outside 0..{g.n - 1}")
    comp = next(c for c in components(g, None) if W[0] in c)
    for w in W:
        if w not in comp:
            raise InfeasibleError(f"terminals {W[0]} and {w} lie in different components")
    h, index = relabel(g, comp)
    return h, [index[w] for w in W]


def iter_minimal_steiner_trees(g: Graph, W: Iterable[int], mode: str = "improved",
                               stats: EnumStats | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every minimal Steiner tree of ``(g, W)`` as a sorted tuple of edge ids."""
    check_mode(mode)
    h, terms = _prepare(g, W)
    if len(terms) == 1:
        if stats is not None:
            stats.tree.nodes = stats.tree.leaves = 1
        yield ()
        return
    term_set = frozenset(terms)
    bset = bridges(h) if mode != "plain" else frozenset()

    def children(edges: frozenset[int], verts: frozenset[int], w: int):
        for p in iter_set_paths(h, verts, (w,)):
            yield edges.union(p.edges), verts.union(p.vertices)

    def expand(state):
        edges, verts = state
        if term_set <= verts:
            return tuple(sorted(edges)), None
        if mode == "plain":
            w = min(term_set - verts)
        else:
            w, unique = find_branching_terminal(h, terms, edges, verts, bset)
            if w is None:
                return unique, None
        return None, children(edges, verts, w)

    root = (frozenset(), frozenset((terms[0],)))
    yield from drive(root, expand, mode, h.n, stats)


def enum_minimal_steiner_trees(g: Graph, W: Iterable[int], sink: Callable[[tuple[int, ...]], object],
                               mode: str = "improved", stats: EnumStats | None = None) -> int:
    """Feed every minimal Steiner tree to ``sink``; return how many there were."""
    count = 0
    for sol in iter_minimal_steiner_trees(g, W, mode, stats):
        sink(sol)
        count += 1
    return count
