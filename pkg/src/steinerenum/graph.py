"""Immutable (multi)graphs with stable edge ids, plus the classic subroutines
the enumerators lean on: bridges, contraction, components, spanning trees
and lowest common ancestors.

Vertices are dense integers ``0..n-1``. Every edge carries an integer id that
survives subgraph views and contraction, so a path found in ``G / F`` can be
lifted back to ``G`` just by reading its edge ids.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

from .errors import GraphError

__all__ = [
    "Graph",
    "RootedTreeIndex",
    "bridges",
    "components",
    "contract",
    "lca_index",
    "relabel",
    "spanning_tree_containing",
]


class Graph:
    """An immutable graph on vertices ``0..n-1``.

    Parallel edges are allowed, self-loops are not. ``adj[v]`` lists
    ``(neighbor, edge_id)`` pairs sorted by neighbor then id; for directed
    graphs it holds out-arcs and ``radj[v]`` holds in-arcs ``(tail, edge_id)``.
    For undirected graphs ``radj is adj``.
    """

    __slots__ = ("n", "directed", "ends", "adj", "radj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        directed: bool = False,
        edge_ids: Iterable[int] | None = None,
    ) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        edges = list(edges)
        ids = list(range(len(edges))) if edge_ids is None else list(edge_ids)
        if len(ids) != len(edges):
            raise GraphError("edge_ids and edges differ in length")
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        radj = [[] for _ in range(n)] if directed else adj
        ends: dict[int, tuple[int, int]] = {}
        for eid, (u, v) in zip(ids, edges):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {eid} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge {eid} is a self-loop at {u}")
            if eid in ends:
                raise GraphError(f"duplicate edge id {eid}")
            ends[eid] = (u, v)
            adj[u].append((v, eid))
            radj[v].append((u, eid))
        for lst in adj:
            lst.sort()
        if directed:
            for lst in radj:
                lst.sort()
        self.n = n
        self.directed = directed
        self.ends = ends
        self.adj = adj
        self.radj = radj

    @property
    def m(self) -> int:
        return len(self.ends)

    def edge_ids(self) -> list[int]:
        return sorted(self.ends)

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self.ends[eid]
        except KeyError:
            raise GraphError(f"unknown edge id {eid}") from None

    def other(self, eid: int, v: int) -> int:
        a, b = self.endpoints(eid)
        return b if v == a else a

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbors (out-neighbors when directed) in increasing order."""
        seen = []
        for w, _ in self.adj[v]:
            if not seen or seen[-1] != w:
                seen.append(w)
        return seen

    def degree(self, v: int) -> int:
        return len(self.adj[v]) if not self.directed else len(self.adj[v]) + len(self.radj[v])

    def edge_subgraph(self, eids: Iterable[int]) -> Graph:
        """Same vertex set, only the given edges (ids preserved)."""
        keep = sorted(set(eids))
        for e in keep:
            self.endpoints(e)
        return Graph(self.n, [self.ends[e] for e in keep], self.directed, keep)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """``G[U]`` on the same vertex numbering; vertices outside ``U`` become isolated."""
        inside = bytearray(self.n)
        for v in vertices:
            inside[v] = 1
        keep = [e for e, (u, v) in self.ends.items() if inside[u] and inside[v]]
        keep.sort()
        return Graph(self.n, [self.ends[e] for e in keep], self.directed, keep)

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph({kind}, n={self.n}, m={self.m})"


def _require_undirected(g: Graph, what: str) -> None:
    if g.directed:
        raise GraphError(f"{what} needs an undirected graph")


def bridges(g: Graph) -> frozenset[int]:
    """Ids of all bridges of an undirected multigraph.

    Parallel edges are never bridges: the DFS skips only the exact edge id it
    arrived by, so a twin edge closes a cycle.
    """
    _require_undirected(g, "bridges")
    n = g.n
    adj = g.adj
    order = [0] * n
    low = [0] * n
    counter = 1
    out = []
    for root in range(n):
        if order[root]:
            continue
        order[root] = low[root] = counter
        counter += 1
        # frames: (vertex, id of the edge we came through, next adjacency index)
        stack = [(root, -1, 0)]
        while stack:
            v, via, i = stack[-1]
            nbrs = adj[v]
            if i < len(nbrs):
                stack[-1] = (v, via, i + 1)
                w, eid = nbrs[i]
                if eid == via:
                    continue
                if order[w]:
                    if order[w] < low[v]:
                        low[v] = order[w]
                else:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, 0))
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > order[p]:
                        out.append(via)
    return frozenset(out)


def _find(parent: list[int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def contract(g: Graph, f: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(G / F, mapping)``.

    ``mapping[v]`` is the merged vertex holding original vertex ``v``. Merged
    vertices are numbered in order of their smallest original member. Edges
    outside ``F`` keep their ids; those that become loops are dropped.
    """
    n = g.n
    parent = list(range(n))
    fset = set()
    for e in f:
        u, v = g.endpoints(e)
        fset.add(e)
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
    label = [-1] * n
    mapping = [0] * n
    k = 0
    for v in range(n):
        r = _find(parent, v)
        if label[r] < 0:
            label[r] = k
            k += 1
        mapping[v] = label[r]
    edges, ids = [], []
    for e in sorted(g.ends):
        if e in fset:
            continue
        u, v = g.ends[e]
        a, b = mapping[u], mapping[v]
        if a != b:
            edges.append((a, b))
            ids.append(e)
    return Graph(k, edges, g.directed, ids), mapping


def components(g: Graph, restrict: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of ``G[restrict]`` ordered by smallest vertex.

    Directed graphs are treated as their underlying undirected graph.
    """
    n = g.n
    inside = bytearray(n)
    if restrict is None:
        inside = bytearray(b"\x01" * n)
    else:
        for v in restrict:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} outside 0..{n - 1}")
            inside[v] = 1
    seen = bytearray(n)
    result = []
    for s in range(n):
        if not inside[s] or seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for lists in (g.adj, g.radj) if g.directed else (g.adj,):
                for w, _ in lists[v]:
                    if inside[w] and not seen[w]:
                        seen[w] = 1
                        comp.append(w)
                        queue.append(w)
        result.append(frozenset(comp))
    return result


def spanning_tree_containing(g: Graph, t: Iterable[int] = ()) -> frozenset[int]:
    """A spanning tree of connected ``g`` that contains the forest ``t``.

    Edges outside ``t`` are considered in increasing id order (Kruskal-style),
    which makes the result deterministic.
    """
    _require_undirected(g, "spanning_tree_containing")
    parent = list(range(g.n))
    chosen = set()
    for e in t:
        u, v = g.endpoints(e)
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            raise GraphError(f"edge set contains a cycle (closed by edge {e})")
        parent[ru] = rv
        chosen.add(e)
    merged = len(chosen)
    for e in sorted(g.ends):
        if merged == g.n - 1:
            break
        if e in chosen:
            continue
        u, v = g.ends[e]
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            chosen.add(e)
            merged += 1
    if g.n and merged != g.n - 1:
        raise GraphError("graph is disconnected; no spanning tree exists")
    return frozenset(chosen)


class RootedTreeIndex:
    """Parent/depth arrays of a rooted tree plus O(1) LCA queries.

    Built from an Euler tour with a sparse table over tour depths.
    Only vertices of the tree (and the root) may be queried.
    """

    def __init__(self, n: int, root: int, adjacency: dict[int, list[tuple[int, int]]]):
        parent = {root: root}
        parent_edge = {root: -1}
        depth = {root: 0}
        first = {}
        tour: list[int] = []
        stack = [(root, iter(adjacency.get(root, ())))]
        first[root] = 0
        tour.append(root)
        while stack:
            v, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == parent_edge[v]:
                    continue
                if w in parent:
                    raise GraphError("edge set contains a cycle")
                parent[w] = v
                parent_edge[w] = e
                depth[w] = depth[v] + 1
                first[w] = len(tour)
                tour.append(w)
                stack.append((w, iter(adjacency.get(w, ()))))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if stack:
                    tour.append(stack[-1][0])
        self.n = n
        self.root = root
        self.parent = parent
        self.parent_edge = parent_edge
        self.depth = depth
        self._first = first
        self._tour = tour
        levels = [tour]
        span = 1
        while 2 * span <= len(tour):
            prev = levels[-1]
            nxt = []
            for i in range(len(tour) - 2 * span + 1):
                a, b = prev[i], prev[i + span]
                nxt.append(a if depth[a] <= depth[b] else b)
            levels.append(nxt)
            span *= 2
        self._levels = levels

    def __contains__(self, v: int) -> bool:
        return v in self.depth

    def lca(self, u: int, v: int) -> int:
        try:
            i, j = self._first[u], self._first[v]
        except KeyError as exc:
            raise GraphError(f"vertex {exc.args[0]} is not in the tree") from None
        if i > j:
            i, j = j, i
        k = (j - i + 1).bit_length() - 1
        row = self._levels[k]
        a, b = row[i], row[j - (1 << k) + 1]
        return a if self.depth[a] <= self.depth[b] else b

    def path_edges(self, u: int, v: int) -> list[int]:
        """Edge ids of the unique tree path between ``u`` and ``v``."""
        a = self.lca(u, v)
        up, down = [], []
        x = u
        while x != a:
            up.append(self.parent_edge[x])
            x = self.parent[x]
        x = v
        while x != a:
            down.append(self.parent_edge[x])
            x = self.parent[x]
        return up + down[::-1]


def lca_index(g: Graph, tree: Iterable[int], root: int) -> RootedTreeIndex:
    """Root the tree given by edge ids ``tree`` at ``root`` and index it for LCA."""
    tree = list(tree)
    adjacency: dict[int, list[tuple[int, int]]] = {}
    verts = {root}
    for e in tree:
        u, v = g.endpoints(e)
        adjacency.setdefault(u, []).append((v, e))
        adjacency.setdefault(v, []).append((u, e))
        verts.update((u, v))
    for lst in adjacency.values():
        lst.sort()
    if len(tree) != len(verts) - 1:
        raise GraphError("edge set is not a tree containing the root")
    index = RootedTreeIndex(g.n, root, adjacency)
    if len(index.depth) != len(verts):
        raise GraphError("edge set is disconnected")
    return index


def edge_set_vertices(g: Graph, eids: Sequence[int]) -> set[int]:
    out = set()
    for e in eids:
        out.update(g.endpoints(e))
    return out


def relabel(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G[U]`` renumbered densely in increasing vertex order; edge ids kept.

    Returns the new graph and the map from old vertex ids to new ones.
    """
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges, ids = [], []
    for e in sorted(g.ends):
        u, v = g.ends[e]
        if u in index and v in index:
            edges.append((index[u], index[v]))
            ids.append(e)
    return Graph(len(keep), edges, g.directed, ids), index
