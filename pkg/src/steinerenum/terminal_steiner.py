"""Minimal terminal Steiner tree enumeration (every terminal must be a leaf).

With three or more terminals, a solution lives inside one component ``C``
of ``G - W`` that touches every terminal, plus one edge per terminal. So
terminal-terminal edges and components missing some terminal are thrown
away first; if no component survives, there is no solution.

The first branching step joins the two smallest terminals by a path
through one surviving component. After that, a partial tree ``T`` is
extended by paths from its non-terminal vertices to a missing terminal
``w`` through ``C_T`` (the component ``T`` lives in). The improved mode
picks ``w`` with two such paths, or emits the only completion when no
terminal has a choice.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from itertools import chain

from .enumtree import EnumStats, check_mode, drive
from .errors import GraphError, InfeasibleError
from .graph import Graph, bridges, components
from .path_enum import iter_set_paths, iter_st_paths

__all__ = [
    "enum_minimal_terminal_steiner_trees",
    "feasible_components",
    "iter_minimal_terminal_steiner_trees",
]

_END = object()


def feasible_components(g: Graph, W: Iterable[int]) -> list[frozenset[int]]:
    """Components ``C`` of ``G - W`` with every terminal adjacent to ``C``."""
    W = set(W)
    result = []
    for comp in components(g, [v for v in range(g.n) if v not in W]):
        touched = {x for v in comp for x, _ in g.adj[v] if x in W}
        if touched == W:
            result.append(comp)
    return result


class _Instance:
    def __init__(self, g: Graph, W: list[int]) -> None:
        self.W = W
        self.term = frozenset(W)
        self.comp_of: dict[int, int] = {}
        self._bridges: dict[int, frozenset[int]] = {}
        if len(W) == 2:
            self.h = g
            return
        feasible = feasible_components(g, W)
        if not feasible:
            raise InfeasibleError("no component of G - W is adjacent to every terminal")
        for i, comp in enumerate(feasible):
            for v in comp:
                self.comp_of[v] = i
        self.comps = feasible
        keep = [e for e, (u, v) in g.ends.items() if u in self.comp_of or v in self.comp_of]
        self.h = g.edge_subgraph(keep)

    def comp_bridges(self, c: int) -> frozenset[int]:
        if c not in self._bridges:
            self._bridges[c] = bridges(self.h.induced(self.comps[c]))
        return self._bridges[c]


def _pick_terminal(inst: _Instance, edges: frozenset[int], verts: frozenset[int], improved: bool):
    """Return ``(w, None)`` to branch on ``w`` or ``(None, tree)`` for a unique completion."""
    h, term = inst.h, inst.term
    missing = [w for w in inst.W if w not in verts]
    if not improved:
        return missing[0], None
    inner = sorted(v for v in verts if v not in term)
    c = inst.comp_of[inner[0]]
    comp_of = inst.comp_of
    bset = inst.comp_bridges(c)
    parent = {v: -1 for v in inner}
    pedge = {v: -1 for v in inner}
    free = {v: False for v in inner}
    order = list(inner)
    for x in order:
        for y, e in h.adj[x]:
            if y in parent or comp_of.get(y) != c:
                continue
            parent[y], pedge[y] = x, e
            free[y] = free[x] or e not in bset
            order.append(y)
    attach = {}
    for w in missing:
        links = [(e, x) for x, e in h.adj[w] if comp_of.get(x) == c]
        if len(links) > 1 or free[links[0][1]]:
            return w, None
        attach[w] = links[0]
    extra = set(edges)
    for e, x in attach.values():
        extra.add(e)
        while pedge[x] >= 0 and pedge[x] not in extra:
            extra.add(pedge[x])
            x = parent[x]
    return None, tuple(sorted(extra))


def iter_minimal_terminal_steiner_trees(g: Graph, W: Iterable[int], mode: str = "improved",
                                        stats: EnumStats | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every minimal terminal Steiner tree as a sorted tuple of edge ids."""
    check_mode(mode)
    if g.directed:
        raise GraphError("terminal Steiner tree enumeration needs an undirected graph")
    W = sorted(set(W))
    if len(W) < 2:
        raise GraphError("terminal Steiner trees need at least two terminals")
    for w in W:
        if not 0 <= w < g.n:
            raise GraphError(f"terminal {w} outside 0..{g.n - 1}")
    inst = _Instance(g, W)
    h, term = inst.h, inst.term
    improved = mode != "plain"

    def root_children():
        w, w2 = W[0], W[1]
        others = term - {w, w2}
        view = h.induced(v for v in range(h.n) if v not in others) if others else h
        for p in iter_st_paths(view, w, w2):
            yield frozenset(p.edges), frozenset(p.vertices)

    def children(edges, verts, w):
        inner = [v for v in verts if v not in term]
        c = inst.comp_of[inner[0]]
        view = h.induced(chain(inst.comps[c], (w,)))
        for p in iter_set_paths(view, inner, (w,)):
            yield edges.union(p.edges), verts.union(p.vertices)

    def expand(state):
        if state is None:
            kids = root_children()
            first = next(kids, _END)
            if first is _END:
                raise InfeasibleError(f"terminals {W[0]} and {W[1]} are not connected")
            if improved:
                second = next(kids, _END)
                if second is _END:
                    return expand(first)
                kids = chain((first, second), kids)
            else:
                kids = chain((first,), kids)
            return None, kids
        edges, verts = state
        if term <= verts:
            return tuple(sorted(edges)), None
        w, unique = _pick_terminal(inst, edges, verts, improved)
        if w is None:
            return unique, None
        return None, children(edges, verts, w)

    yield from drive(None, expand, mode, g.n, stats)


def enum_minimal_terminal_steiner_trees(g: Graph, W: Iterable[int],
                                        sink: Callable[[tuple[int, ...]], object],
                                        mode: str = "improved",
                                        stats: EnumStats | None = None) -> int:
    count = 0
    for sol in iter_minimal_terminal_steiner_trees(g, W, mode, stats):
        sink(sol)
        count += 1
    return count
