"""Minimal directed Steiner tree enumeration (arborescences rooted at ``r``).

Partial solutions are arborescences rooted at ``r`` whose leaves are all
terminals; each step adds a directed path from ``V(T)`` to a missing
terminal. In improved mode the choice of terminal comes from a test on
``D' = D / E(T)``: take a DFS tree of ``D'`` from the contracted root, keep
the subtree ``T*`` that reaches the missing terminals, and look for a path
outside ``T*`` from a vertex of ``T*`` to another one earlier in DFS
post-order. Such a path means some terminal has two valid paths; its
absence means ``T + T*`` is the only completion.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from typing import NamedTuple

from .enumtree import EnumStats, check_mode, drive
from .errors import GraphError, InfeasibleError
from .graph import Graph, contract, relabel
from .path_enum import iter_set_paths

__all__ = [
    "SecondSolution",
    "enum_minimal_directed_steiner_trees",
    "has_second_solution",
    "iter_minimal_directed_steiner_trees",
]


class SecondSolution(NamedTuple):
    """Outcome of :func:`has_second_solution`: exactly one field is set.

    ``terminal`` has at least two directed paths from the root; otherwise
    ``tree`` holds the arc ids of the unique minimal tree.
    """

    terminal: int | None
    tree: tuple[int, ...] | None


def _reachable(d: Graph, r: int) -> list[int]:
    seen = {r}
    order = [r]
    for x in order:
        for y, _ in d.adj[x]:
            if y not in seen:
                seen.add(y)
                order.append(y)
    return order


def has_second_solution(d: Graph, root: int, terminals: Iterable[int]) -> SecondSolution:
    """Decide whether ``(d, terminals, root)`` has more than one minimal directed Steiner tree.

    Every terminal must be reachable from ``root``. Runs in O(n + m).
    """
    W = sorted(set(terminals) - {root})
    n = d.n
    parent = [-1] * n
    parc = [-1] * n
    post = [-1] * n
    seen = bytearray(n)
    seen[root] = 1
    stack = [(root, iter(d.adj[root]))]
    clock = 0
    while stack:
        x, it = stack[-1]
        for y, a in it:
            if not seen[y]:
                seen[y] = 1
                parent[y], parc[y] = x, a
                stack.append((y, iter(d.adj[y])))
                break
        else:
            stack.pop()
            post[x] = clock
            clock += 1
    for w in W:
        if not seen[w]:
            raise InfeasibleError(f"terminal {w} is not reachable from the root")

    in_star = bytearray(n)
    in_star[root] = 1
    star_arcs = set()
    kids: dict[int, list[int]] = {}
    for w in W:
        x = w
        while not in_star[x]:
            in_star[x] = 1
            star_arcs.add(parc[x])
            kids.setdefault(parent[x], []).append(x)
            x = parent[x]

    removed = bytearray(n)
    for v in sorted((x for x in range(n) if in_star[x]), key=post.__getitem__, reverse=True):
        if removed[v]:
            continue
        removed[v] = 1
        frontier = [v]
        hit = -1
        while frontier and hit < 0:
            x = frontier.pop()
            for y, a in d.adj[x]:
                if a in star_arcs or removed[y]:
                    continue
                if in_star[y]:
                    hit = y  # post[y] < post[v]: larger ones are already removed
                    break
                removed[y] = 1
                frontier.append(y)
        if hit >= 0:
            x = hit
            is_terminal = set(W)
            while x not in is_terminal:
                x = min(kids[x])
            return SecondSolution(x, None)
    return SecondSolution(None, tuple(sorted(star_arcs)))


def _prepare(d: Graph, r: int, W: Iterable[int]) -> tuple[Graph, int, list[int]]:
    if not d.directed:
        raise GraphError("directed Steiner tree enumeration needs a directed graph")
    if not 0 <= r < d.n:
        raise GraphError(f"root {r} outside 0..{d.n - 1}")
    W = sorted(set(W))
    for w in W:
        if not 0 <= w < d.n:
            raise GraphError(f"terminal {w} outside 0..{d.n - 1}")
    if r in W:
        raise GraphError("the root cannot be a terminal")
    reach = set(_reachable(d, r))
    for w in W:
        if w not in reach:
            raise InfeasibleError(f"terminal {w} is not reachable from root {r}")
    h, index = relabel(d, reach)
    return h, index[r], [index[w] for w in W]


def iter_minimal_directed_steiner_trees(d: Graph, r: int, W: Iterable[int], mode: str = "improved",
                                        stats: EnumStats | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every minimal directed Steiner tree rooted at ``r`` as sorted arc ids."""
    check_mode(mode)
    h, root, terms = _prepare(d, r, W)
    term_set = frozenset(terms)

    def children(arcs: frozenset[int], verts: frozenset[int], w: int):
        for p in iter_set_paths(h, verts, (w,)):
            yield arcs.union(p.edges), verts.union(p.vertices)

    def expand(state):
        arcs, verts = state
        if term_set <= verts:
            return tuple(sorted(arcs)), None
        if mode == "plain":
            return None, children(arcs, verts, min(term_set - verts))
        h2, mapping = contract(h, arcs)
        back = {}
        for v in range(h.n):
            back.setdefault(mapping[v], v)
        missing = [mapping[w] for w in terms if w not in verts]
        w2, unique = has_second_solution(h2, mapping[root], missing)
        if w2 is None:
            return tuple(sorted(arcs.union(unique))), None
        return None, children(arcs, verts, back[w2])

    yield from drive((frozenset(), frozenset((root,))), expand, mode, h.n, stats)


def enum_minimal_directed_steiner_trees(d: Graph, r: int, W: Iterable[int],
                                        sink: Callable[[tuple[int, ...]], object],
                                        mode: str = "improved",
                                        stats: EnumStats | None = None) -> int:
    count = 0
    for sol in iter_minimal_directed_steiner_trees(d, r, W, mode, stats):
        sink(sol)
        count += 1
    return count
