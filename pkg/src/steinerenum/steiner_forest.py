"""Minimal Steiner forest enumeration.

Terminal sets are first normalised to pairs: intersecting sets are merged
and each merged set ``{w1, ..., wk}`` becomes the star ``{w1, wi}``. A
minimal Steiner forest is then exactly a union of one path per pair, and a
partial forest ``F`` branches on the paths joining an unconnected pair in
the contracted graph ``G / E(F)``. Edge ids survive contraction, so each
such path is already the valid path to add to ``F``.

The improved mode asks whether any pair still has two such paths: that
happens iff its endpoints stay apart after also contracting every bridge of
``G / E(F)``. When no pair does, ``F`` plus those bridges contains the only
completion, which is cut out with one marking sweep over LCA paths.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Sequence
from typing import NamedTuple

from .enumtree import EnumStats, check_mode, drive
from .errors import GraphError, InfeasibleError
from .graph import Graph, RootedTreeIndex, bridges, components, contract
from .path_enum import iter_st_paths

__all__ = [
    "ForestStep",
    "enum_minimal_steiner_forests",
    "forest_branching_or_unique",
    "iter_minimal_steiner_forests",
    "prune_by_lca",
    "reduce_terminal_sets",
]

Pair = tuple[int, int]


class ForestStep(NamedTuple):
    """Outcome of :func:`forest_branching_or_unique`: exactly one field is set."""

    pair: Pair | None
    forest: tuple[int, ...] | None


def reduce_terminal_sets(raw: Iterable[Iterable[int]], g: Graph | None = None) -> list[Pair]:
    """Merge intersecting terminal sets, then split each into a star of pairs.

    Pairs come out ordered by their merged set's smallest vertex, then by
    partner. Sets with a single vertex impose nothing and vanish. When ``g``
    is given, a set reaching into two components raises InfeasibleError.
    """
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in raw:
        s = list(s)
        for v in s:
            if g is not None and not 0 <= v < g.n:
                raise GraphError(f"terminal {v} outside 0..{g.n - 1}")
            find(v)
        for v in s[1:]:
            a, b = find(s[0]), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in sorted(parent):
        groups.setdefault(find(v), []).append(v)
    if g is not None:
        where = {}
        for i, comp in enumerate(components(g)):
            for v in comp:
                where[v] = i
        for members in groups.values():
            if len({where[v] for v in members}) > 1:
                raise InfeasibleError(f"terminals {members} span several components")
    pairs = []
    for members in sorted(groups.values()):
        pairs.extend((members[0], v) for v in members[1:])
    return pairs


def prune_by_lca(g: Graph, forest: Iterable[int], pairs: Sequence[Pair]) -> tuple[int, ...]:
    """Edges of ``forest`` lying on the path between some pair's endpoints.

    Each tree of the forest is rooted at its smallest vertex. Pairs are
    handled in order of increasing LCA depth; walking up from an endpoint
    stops at the LCA or at the first edge already marked, because every
    marked edge already has its whole path up to a shallower LCA marked.
    """
    forest = list(forest)
    adjacency: dict[int, list[tuple[int, int]]] = {}
    for e in forest:
        u, v = g.endpoints(e)
        adjacency.setdefault(u, []).append((v, e))
        adjacency.setdefault(v, []).append((u, e))
    for lst in adjacency.values():
        lst.sort()
    index_of: dict[int, RootedTreeIndex] = {}
    for v in sorted(adjacency):
        if v not in index_of:
            idx = RootedTreeIndex(g.n, v, adjacency)
            for x in idx.depth:
                index_of[x] = idx
    if sum(len(idx.depth) - 1 for idx in set(index_of.values())) != len(forest):
        raise GraphError("edge set contains a cycle")
    buckets: dict[int, list[tuple[int, int, RootedTreeIndex, int]]] = {}
    for w, x in pairs:
        if w == x:
            continue
        idx = index_of.get(w)
        if idx is None or index_of.get(x) is not idx:
            raise GraphError(f"pair ({w}, {x}) is not joined by the forest")
        a = idx.lca(w, x)
        buckets.setdefault(idx.depth[a], []).append((w, x, idx, a))
    marked: set[int] = set()
    for depth in sorted(buckets):
        for w, x, idx, a in buckets[depth]:
            for y in (w, x):
                while y != a:
                    e = idx.parent_edge[y]
                    if e in marked:
                        break
                    marked.add(e)
                    y = idx.parent[y]
    return tuple(sorted(marked))


def forest_branching_or_unique(g: Graph, pairs: Sequence[Pair], forest: Iterable[int]) -> ForestStep:
    """First unconnected pair with at least two valid paths, or the unique completion."""
    forest = frozenset(forest)
    g1, m1 = contract(g, forest)
    bset = bridges(g1)
    _, m2 = contract(g1, bset)
    for w, x in pairs:
        if m1[w] != m1[x] and m2[m1[w]] != m2[m1[x]]:
            return ForestStep((w, x), None)
    return ForestStep(None, prune_by_lca(g, forest | bset, pairs))


def iter_minimal_steiner_forests(g: Graph, terminal_sets: Iterable[Iterable[int]],
                                 mode: str = "improved",
                                 stats: EnumStats | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every minimal Steiner forest as a sorted tuple of edge ids."""
    check_mode(mode)
    if g.directed:
        raise GraphError("Steiner forest enumeration needs an undirected graph")
    pairs = reduce_terminal_sets(terminal_sets, g)

    def children(forest: frozenset[int], w: int, x: int):
        g1, m1 = contract(g, forest)
        for p in iter_st_paths(g1, m1[w], m1[x]):
            yield forest.union(p.edges)

    def expand(forest: frozenset[int]):
        if mode == "plain":
            _, m1 = contract(g, forest)
            for w, x in pairs:
                if m1[w] != m1[x]:
                    return None, children(forest, w, x)
            return tuple(sorted(forest)), None
        pair, unique = forest_branching_or_unique(g, pairs, forest)
        if pair is None:
            return unique, None
        return None, children(forest, *pair)

    yield from drive(frozenset(), expand, mode, g.n, stats)


def enum_minimal_steiner_forests(g: Graph, terminal_sets: Iterable[Iterable[int]],
                                 sink: Callable[[tuple[int, ...]], object], mode: str = "improved",
                                 stats: EnumStats | None = None) -> int:
    count = 0
    for sol in iter_minimal_steiner_forests(g, terminal_sets, mode, stats):
        sink(sol)
        count += 1
    return count
