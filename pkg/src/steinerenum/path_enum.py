"""Linear-delay listing of all simple s-t paths and S-T paths.

The search is the classical Read-Tarjan branching: take any s'-t path
``Q = (v1..vk)`` below the current prefix, emit it, and branch on every
index ``i`` whose prefix ``Q_i`` can still reach ``t`` once the arc
``(v_i, v_{i+1})`` is forbidden. Children are found one at a time: a single
backward reachability sweep over an array of flags finds the next
extendible index in O(n + m) time. Output alternates between pre-order
(even depth) and post-order (odd depth) so consecutive emissions are never
more than three recursion-tree visits apart.

Undirected graphs are handled as their symmetric digraph. Parallel edges
are distinct arcs, so paths through a multigraph are told apart by edge id.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from typing import NamedTuple

from .errors import GraphError
from .graph import Graph

__all__ = [
    "Path",
    "enum_set_paths",
    "enum_st_paths",
    "iter_set_paths",
    "iter_st_paths",
    "next_extendible_index",
]

SUPER_ARC = -1


class Path(NamedTuple):
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


class _Arcs:
    """Arc lists with a unique id per arc; ``eid[a]`` is the originating edge."""

    __slots__ = ("n", "out", "inc", "eid")

    def __init__(self, n: int) -> None:
        self.n = n
        self.out: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.eid: list[int] = []

    def add(self, u: int, v: int, eid: int) -> None:
        a = len(self.eid)
        self.eid.append(eid)
        self.out[u].append((v, a))
        self.inc[v].append((u, a))

    def finish(self) -> _Arcs:
        for lst in self.out:
            lst.sort()
        for lst in self.inc:
            lst.sort()
        return self


def _arcs(g: Graph, extra: int = 0, no_head: bytearray | None = None,
          no_tail: bytearray | None = None) -> _Arcs:
    arcs = _Arcs(g.n + extra)
    for e in sorted(g.ends):
        u, v = g.ends[e]
        pairs = ((u, v),) if g.directed else ((u, v), (v, u))
        for a, b in pairs:
            if no_head is not None and no_head[b]:
                continue
            if no_tail is not None and no_tail[a]:
                continue
            arcs.add(a, b, e)
    return arcs


class _Search:
    """Mutable state of one enumeration: blocked vertices and forbidden arcs."""

    def __init__(self, arcs: _Arcs, t: int) -> None:
        self.arcs = arcs
        self.t = t
        self.blocked = bytearray(arcs.n)
        self.excluded = bytearray(len(arcs.eid))
        self.succ: dict[int, tuple[int, int]] = {}

    def find_path(self, src: int) -> tuple[list[int], list[int]] | None:
        """Shortest src-t path avoiding blocked vertices and forbidden arcs (BFS)."""
        t = self.t
        out = self.arcs.out
        blocked, excluded = self.blocked, self.excluded
        seen = bytearray(self.arcs.n)
        pv = {}
        seen[src] = 1
        queue = [src]
        for x in queue:
            for h, a in out[x]:
                if seen[h] or blocked[h] or excluded[a]:
                    continue
                seen[h] = 1
                pv[h] = (x, a)
                if h == t:
                    verts, arcs = [t], []
                    y = t
                    while y != src:
                        y, a2 = pv[y]
                        verts.append(y)
                        arcs.append(a2)
                    verts.reverse()
                    arcs.reverse()
                    return verts, arcs
                queue.append(h)
        return None

    def next_extendible(self, qv: list[int], qa: list[int], i: int) -> int:
        """Largest ``j < i`` whose prefix ``Q_j`` is extendible, or 0.

        ``r`` holds, for the current index ``j``, whether each vertex still
        reaches ``t`` once ``v_1..v_{j-1}`` are removed and arc
        ``(v_j, v_{j+1})`` is forbidden. Moving from ``j`` to ``j - 1`` only
        adds vertices and arcs, so flags only ever flip from 0 to 1.

        Every flag raised records the arc it was raised through in
        ``self.succ``. Those arcs avoid everything blocked or forbidden at
        the returned index, so following them from ``v_j`` gives the first
        path of the child without another search.
        """
        j = i - 1
        if j < 1:
            return 0
        t = self.t
        inc, out = self.arcs.inc, self.arcs.out
        blocked, excluded = self.blocked, self.excluded
        r = bytearray(self.arcs.n)
        succ = self.succ = {}

        def spread(start: int) -> None:
            stack = [start]
            while stack:
                x = stack.pop()
                for u, a in inc[x]:
                    if not r[u] and not blocked[u] and not excluded[a]:
                        r[u] = 1
                        succ[u] = (x, a)
                        stack.append(u)

        for x in qv[: j - 1]:
            blocked[x] = 1
        excluded[qa[j - 1]] = 1
        r[t] = 1
        spread(t)
        while not r[qv[j - 1]] and j > 1:
            j -= 1
            vj = qv[j - 1]
            blocked[vj] = 0
            excluded[qa[j]] = 0
            excluded[qa[j - 1]] = 1
            nxt = qv[j]
            if not r[nxt]:
                r[nxt] = 1
                succ[nxt] = (qv[j + 1], qa[j])
                spread(nxt)
            if not r[vj]:
                for h, a in out[vj]:
                    if r[h] and not excluded[a]:
                        r[vj] = 1
                        succ[vj] = (h, a)
                        spread(vj)
                        break
        found = j if r[qv[j - 1]] else 0
        for x in qv[: j - 1]:
            blocked[x] = 0
        excluded[qa[j - 1]] = 0
        return found

    def follow(self, src: int) -> tuple[list[int], list[int]]:
        """The src-t path recorded by the last ``next_extendible`` sweep."""
        succ, t = self.succ, self.t
        verts, arcs = [src], []
        while src != t:
            src, a = succ[src]
            verts.append(src)
            arcs.append(a)
        return verts, arcs


def _walk(arcs: _Arcs, s: int, t: int,
          visit: Callable[[int], None] | None = None) -> Iterator[tuple[list[int], list[int]]]:
    """Yield ``(vertices, arc_ids)`` of every simple s-t path exactly once."""
    search = _Search(arcs, t)
    blocked, excluded = search.blocked, search.excluded
    q = search.find_path(s)
    if q is None:
        return
    path_v, path_a = [s], []
    stack: list[tuple[int, int, int, int, tuple[list[int], list[int]]]] = []
    depth = 0
    entering = True
    j = 0
    while True:
        if entering:
            qv, qa = q
            if visit is not None:
                visit(depth)
            if depth % 2 == 0:
                yield path_v + qv[1:], path_a + qa
            j = search.next_extendible(qv, qa, len(qv))
        else:
            qv, qa = q
            if visit is not None:
                visit(depth)
            j = search.next_extendible(qv, qa, j)
        if j:
            arc = qa[j - 1]
            stack.append((len(path_v), depth, j, arc, q))
            excluded[arc] = 1
            for x in qv[: j - 1]:
                blocked[x] = 1
            path_v.extend(qv[1:j])
            path_a.extend(qa[: j - 1])
            depth += 1
            q = search.follow(path_v[-1])
            entering = True
            continue
        if depth % 2 == 1:
            yield path_v + qv[1:], path_a + qa
        if not stack:
            return
        plen, depth, j, arc, q = stack.pop()
        for x in path_v[plen - 1 : plen + j - 2]:
            blocked[x] = 0
        del path_v[plen:]
        del path_a[plen - 1 :]
        excluded[arc] = 0
        entering = False


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")


def iter_st_paths(g: Graph, s: int, t: int,
                  visit: Callable[[int], None] | None = None) -> Iterator[Path]:
    """Yield every simple s-t path of ``g``.

    ``visit(depth)`` is called once per recursion-tree visit, before any
    path emitted during that visit.
    """
    _check_vertex(g, s)
    _check_vertex(g, t)
    if s == t:
        raise GraphError("s and t must differ")
    arcs = _arcs(g).finish()
    eid = arcs.eid
    for verts, alist in _walk(arcs, s, t, visit):
        yield Path(tuple(verts), tuple(eid[a] for a in alist))


def enum_st_paths(g: Graph, s: int, t: int, sink: Callable[[Path], object]) -> int:
    count = 0
    for p in iter_st_paths(g, s, t):
        sink(p)
        count += 1
    return count


def iter_set_paths(g: Graph, sources: Iterable[int], targets: Iterable[int],
                   visit: Callable[[int], None] | None = None) -> Iterator[Path]:
    """Yield every S-T path: one end in S, the other in T, no inner vertex in S or T.

    Arcs into S and out of T are dropped, a super-source feeds S and a
    super-sink drains T; paths of the augmented graph are stripped of both.
    """
    S, T = set(sources), set(targets)
    if not S or not T:
        raise GraphError("source and target sets must be nonempty")
    if S & T:
        raise GraphError(f"source and target sets overlap at {sorted(S & T)}")
    for v in S | T:
        _check_vertex(g, v)
    n = g.n
    in_s, in_t = bytearray(n + 2), bytearray(n + 2)
    for v in S:
        in_s[v] = 1
    for v in T:
        in_t[v] = 1
    arcs = _arcs(g, extra=2, no_head=in_s, no_tail=in_t)
    src, dst = n, n + 1
    for v in sorted(S):
        arcs.add(src, v, SUPER_ARC)
    for v in sorted(T):
        arcs.add(v, dst, SUPER_ARC)
    arcs.finish()
    eid = arcs.eid
    for verts, alist in _walk(arcs, src, dst, visit):
        yield Path(tuple(verts[1:-1]), tuple(eid[a] for a in alist[1:-1]))


def enum_set_paths(g: Graph, sources: Iterable[int], targets: Iterable[int],
                   sink: Callable[[Path], object]) -> int:
    count = 0
    for p in iter_set_paths(g, sources, targets):
        sink(p)
        count += 1
    return count


def next_extendible_index(g: Graph, prefix: list[int], q: list[int], i: int) -> int | None:
    """Largest ``i* < i`` such that ``Q_{i*}`` (first ``i*`` vertices of ``q``)
    extends to ``t = q[-1]`` without the arc ``(v_{i*}, v_{i*+1})``.

    ``prefix`` is the path ``P`` ending at ``q[0]``; its other vertices are
    off limits. Indices are 1-based, matching the number of vertices in the
    sub-prefix. Returns ``None`` when no such index exists.
    """
    if not prefix or prefix[-1] != q[0]:
        raise GraphError("q must start where the prefix ends")
    if not 1 <= i <= len(q):
        raise GraphError(f"index {i} outside 1..{len(q)}")
    arcs = _arcs(g).finish()
    search = _Search(arcs, q[-1])
    for x in prefix[:-1]:
        search.blocked[x] = 1
    qa = []
    for a, b in zip(q, q[1:]):
        for h, arc in arcs.out[a]:
            if h == b:
                qa.append(arc)
                break
        else:
            raise GraphError(f"no arc {a} -> {b}")
    return search.next_extendible(list(q), qa, i) or None
