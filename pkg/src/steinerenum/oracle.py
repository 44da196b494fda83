"""Brute-force ground truth for every enumeration problem in the package.

Nothing here shares code with the fast enumerators beyond reading a
:class:`Graph`'s edge list. Subsets are visited in binary-counter order and
checked directly against the problem definitions, so these functions are
slow but easy to trust. They refuse instances whose search space exceeds
``cap`` subsets.

The ``check_*`` functions are structural certificates: each accepts one
solution and says whether it satisfies the known characterisation of a
minimal solution (for example, a Steiner tree is minimal iff every leaf is
a terminal).
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import OracleCapError
from .graph import Graph

__all__ = [
    "DEFAULT_CAP",
    "OracleReport",
    "brute_directed_steiner",
    "brute_induced_steiner",
    "brute_st_paths",
    "brute_steiner_forests",
    "brute_steiner_trees",
    "brute_terminal_steiner",
    "check_directed_tree",
    "check_induced",
    "check_steiner_forest",
    "check_steiner_tree",
    "check_terminal_tree",
]

DEFAULT_CAP = 1 << 22


@dataclass(frozen=True)
class OracleReport:
    solutions: frozenset

    @property
    def count(self) -> int:
        return len(self.solutions)


def _guard(bits: int, cap: int) -> None:
    if (1 << bits) > cap:
        raise OracleCapError(f"2^{bits} subsets exceed the oracle cap of {cap}")


def _edge_list(g: Graph) -> list[tuple[int, int, int]]:
    return [(e, *g.ends[e]) for e in sorted(g.ends)]


def _classes(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Component label of every vertex under the given undirected edges."""
    label = list(range(n))

    def root(x: int) -> int:
        while label[x] != x:
            label[x] = label[label[x]]
            x = label[x]
        return x

    for u, v in edges:
        a, b = root(u), root(v)
        if a != b:
            label[a] = b
    return [root(x) for x in range(n)]


def _joins(n: int, edges: list[tuple[int, int]], groups: Sequence[Sequence[int]]) -> bool:
    lab = _classes(n, edges)
    return all(len({lab[v] for v in grp}) <= 1 for grp in groups)


def _reaches(n: int, arcs: list[tuple[int, int]], r: int, targets: Iterable[int]) -> bool:
    out: dict[int, list[int]] = {}
    for u, v in arcs:
        out.setdefault(u, []).append(v)
    seen = {r}
    stack = [r]
    while stack:
        x = stack.pop()
        for y in out.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return all(t in seen for t in targets)


def _subsets(items: list, limit: int | None = None):
    """Subsets as lists, in binary-counter order, optionally bounded in size."""
    k = len(items)
    for mask in range(1 << k):
        if limit is not None and mask.bit_count() > limit:
            continue
        yield [items[i] for i in range(k) if mask >> i & 1]


def _minimal_monotone(items: list, ok, limit: int | None) -> frozenset:
    """Inclusion-minimal subsets for an upward-closed property ``ok``."""
    found = set()
    for sub in _subsets(items, limit):
        if not ok(sub):
            continue
        if all(not ok(sub[:i] + sub[i + 1 :]) for i in range(len(sub))):
            found.add(tuple(sorted(x[0] if isinstance(x, tuple) else x for x in sub)))
    return frozenset(found)


def _minimal_family(family: Iterable[frozenset]) -> frozenset:
    family = list(set(family))
    return frozenset(
        tuple(sorted(a)) for a in family if not any(b < a for b in family)
    )


def brute_steiner_trees(g: Graph, W: Iterable[int], cap: int = DEFAULT_CAP) -> OracleReport:
    """Minimal edge sets connecting all terminals."""
    W = sorted(set(W))
    edges = _edge_list(g)
    _guard(len(edges), cap)
    ok = lambda sub: _joins(g.n, [(u, v) for _, u, v in sub], [W])
    return OracleReport(_minimal_monotone(edges, ok, g.n - 1))


def brute_steiner_forests(g: Graph, sets: Iterable[Iterable[int]],
                          cap: int = DEFAULT_CAP) -> OracleReport:
    """Minimal edge sets connecting every terminal set internally."""
    groups = [sorted(set(s)) for s in sets]
    edges = _edge_list(g)
    _guard(len(edges), cap)
    ok = lambda sub: _joins(g.n, [(u, v) for _, u, v in sub], groups)
    return OracleReport(_minimal_monotone(edges, ok, g.n - 1))


def brute_directed_steiner(d: Graph, r: int, W: Iterable[int],
                           cap: int = DEFAULT_CAP) -> OracleReport:
    """Minimal arc sets containing a directed path from ``r`` to every terminal."""
    W = sorted(set(W))
    arcs = _edge_list(d)
    _guard(len(arcs), cap)
    ok = lambda sub: _reaches(d.n, [(u, v) for _, u, v in sub], r, W)
    return OracleReport(_minimal_monotone(arcs, ok, d.n - 1))


def _is_tree(n: int, edges: list[tuple[int, int]]) -> bool:
    verts = {x for e in edges for x in e}
    if len(edges) != len(verts) - 1:
        return False
    lab = _classes(n, edges)
    return len({lab[v] for v in verts}) == 1


def brute_terminal_steiner(g: Graph, W: Iterable[int], cap: int = DEFAULT_CAP) -> OracleReport:
    """Inclusion-minimal trees that contain every terminal, each one as a leaf."""
    W = sorted(set(W))
    edges = _edge_list(g)
    _guard(len(edges), cap)
    valid = []
    for sub in _subsets(edges, g.n - 1):
        pairs = [(u, v) for _, u, v in sub]
        if not pairs or not _is_tree(g.n, pairs):
            continue
        deg: dict[int, int] = {}
        for u, v in pairs:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if all(deg.get(w) == 1 for w in W):
            valid.append(frozenset(e for e, _, _ in sub))
    return OracleReport(_minimal_family(valid))


def brute_induced_steiner(g: Graph, W: Iterable[int], cap: int = DEFAULT_CAP) -> OracleReport:
    """Inclusion-minimal vertex sets ``X`` with ``W`` inside and ``G[X]`` connected."""
    W = set(W)
    _guard(g.n, cap)
    valid = []
    for sub in _subsets(list(range(g.n))):
        X = set(sub)
        if not W <= X or not X:
            continue
        inner = [(u, v) for u, v in g.ends.values() if u in X and v in X]
        lab = _classes(g.n, inner)
        if len({lab[v] for v in X}) == 1:
            valid.append(frozenset(X))
    return OracleReport(_minimal_family(valid))


def brute_st_paths(g: Graph, s: int, t: int, cap: int = DEFAULT_CAP) -> OracleReport:
    """All simple s-t paths as tuples of edge ids in path order."""
    out: dict[int, list[tuple[int, int]]] = {}
    for e, u, v in _edge_list(g):
        out.setdefault(u, []).append((v, e))
        if not g.directed:
            out.setdefault(v, []).append((u, e))
    found = set()
    visited = {s}
    trail: list[int] = []

    def dfs(x: int) -> None:
        if len(found) > cap:
            raise OracleCapError(f"more than {cap} paths")
        if x == t:
            found.add(tuple(trail))
            return
        for y, e in out.get(x, ()):
            if y not in visited:
                visited.add(y)
                trail.append(e)
                dfs(y)
                trail.pop()
                visited.discard(y)

    if s != t:
        dfs(s)
    return OracleReport(frozenset(found))


# -- certificates ---------------------------------------------------------


def _degrees(g: Graph, edges: Iterable[int]) -> dict[int, int]:
    deg: dict[int, int] = {}
    for e in edges:
        for x in g.ends[e]:
            deg[x] = deg.get(x, 0) + 1
    return deg


def check_steiner_tree(g: Graph, W: Iterable[int], edges: Sequence[int]) -> bool:
    """A tree spanning ``W`` whose leaves are all terminals."""
    W = set(W)
    if len(W) == 1 and not edges:
        return True
    pairs = [g.ends[e] for e in edges]
    if not _is_tree(g.n, pairs):
        return False
    deg = _degrees(g, edges)
    if not W <= deg.keys():
        return False
    return all(v in W for v, k in deg.items() if k == 1)


def check_steiner_forest(g: Graph, sets: Iterable[Iterable[int]], edges: Sequence[int]) -> bool:
    """Acyclic, joins every terminal set, and each edge is needed by some set."""
    groups = [sorted(set(s)) for s in sets]
    pairs = [g.ends[e] for e in edges]
    lab = _classes(g.n, pairs)
    verts = {x for p in pairs for x in p}
    if len(pairs) != len(verts) - len({lab[v] for v in verts}):
        return False
    if not _joins(g.n, pairs, groups):
        return False
    return all(not _joins(g.n, pairs[:i] + pairs[i + 1 :], groups) for i in range(len(pairs)))


def check_terminal_tree(g: Graph, W: Iterable[int], edges: Sequence[int]) -> bool:
    """A tree whose leaves are exactly the terminals."""
    W = set(W)
    pairs = [g.ends[e] for e in edges]
    if not pairs or not _is_tree(g.n, pairs):
        return False
    deg = _degrees(g, edges)
    return {v for v, k in deg.items() if k == 1} == W


def check_directed_tree(d: Graph, r: int, W: Iterable[int], arcs: Sequence[int]) -> bool:
    """An arborescence rooted at ``r`` reaching every terminal, all sinks terminal."""
    W = set(W)
    indeg: dict[int, int] = {}
    outdeg: dict[int, int] = {}
    for a in arcs:
        u, v = d.ends[a]
        outdeg[u] = outdeg.get(u, 0) + 1
        indeg[v] = indeg.get(v, 0) + 1
    if indeg.get(r, 0) or any(k != 1 for k in indeg.values()):
        return False
    pairs = [d.ends[a] for a in arcs]
    verts = {x for p in pairs for x in p} | {r}
    if not _reaches(d.n, pairs, r, verts | W):
        return False
    return all(v in W for v in verts if v != r and not outdeg.get(v))


def check_induced(g: Graph, W: Iterable[int], X: Sequence[int]) -> bool:
    """``G[X]`` connected, ``W`` inside, and every non-terminal splits ``X``
    into exactly two parts that each hold a terminal."""
    W, X = set(W), set(X)
    if not W <= X:
        return False

    def parts(S: set[int]) -> list[set[int]]:
        inner = [(u, v) for u, v in g.ends.values() if u in S and v in S]
        lab = _classes(g.n, inner)
        groups: dict[int, set[int]] = {}
        for v in S:
            groups.setdefault(lab[v], set()).add(v)
        return list(groups.values())

    if len(parts(X)) != 1:
        return False
    for v in X - W:
        pieces = parts(X - {v})
        if len(pieces) != 2 or not all(p & W for p in pieces):
            return False
    return True
