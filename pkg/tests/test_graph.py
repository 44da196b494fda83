import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import complete, eid, path, rand_connected, rand_graph, square, star, triangle
from steinerenum.errors import GraphError
from steinerenum.graph import (
    Graph,
    bridges,
    components,
    contract,
    edge_set_vertices,
    lca_index,
    relabel,
    spanning_tree_containing,
)


def n_components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)})


def naive_bridges(g):
    base = n_components(g.n, g.ends.values())
    return {e for e in g.ends
            if n_components(g.n, [g.ends[f] for f in g.ends if f != e]) > base}


def bfs_parents(g, root):
    parent, depth = {root: root}, {root: 0}
    order = [root]
    for x in order:
        for y, _ in g.adj[x]:
            if y not in parent:
                parent[y], depth[y] = x, depth[x] + 1
                order.append(y)
    return parent, depth


def naive_lca(parent, depth, u, v):
    while depth[u] > depth[v]:
        u = parent[u]
    while depth[v] > depth[u]:
        v = parent[v]
    while u != v:
        u, v = parent[u], parent[v]
    return u


class TestGraph:
    def test_basic_accessors(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 1)])
        assert g.m == 3
        assert g.neighbors(1) == [0, 2]
        assert g.neighbors(0) == [1]
        assert g.degree(0) == 2
        assert g.other(1, 2) == 1
        assert g.other(1, 1) == 2
        assert g.adj[0] == [(1, 0), (1, 2)]

    def test_directed_in_out(self):
        g = Graph(3, [(0, 1), (2, 1)], directed=True)
        assert g.adj[1] == []
        assert g.radj[1] == [(0, 0), (2, 1)]
        assert g.degree(1) == 2

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(GraphError):
            Graph(3, edges)

    def test_rejects_duplicate_ids(self):
        with pytest.raises(GraphError):
            Graph(3, [(0, 1), (1, 2)], edge_ids=[4, 4])

    def test_unknown_edge(self):
        with pytest.raises(GraphError):
            triangle().endpoints(7)

    def test_subgraphs_keep_ids(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.edge_subgraph([3, 1]).edge_ids() == [1, 3]
        h = g.induced([0, 1, 2])
        assert h.n == 4 and h.edge_ids() == [0, 1]

    def test_edge_set_vertices(self):
        assert edge_set_vertices(square(), [0, 2]) == {0, 1, 2, 3}


class TestBridges:
    def test_path(self):
        assert bridges(path(3)) == {0, 1}

    def test_triangle(self):
        assert bridges(triangle()) == frozenset()

    def test_parallel_pair(self):
        assert bridges(Graph(2, [(0, 1), (0, 1)])) == frozenset()

    def test_directed_rejected(self):
        with pytest.raises(GraphError):
            bridges(path(3, directed=True))

    def test_exhaustive_small(self):
        # every simple graph on up to 5 vertices
        for n in range(1, 6):
            pairs = list(itertools.combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
                assert bridges(g) == naive_bridges(g)

    def test_random_multigraphs(self):
        rng = random.Random(7)
        for _ in range(400):
            n = rng.randint(1, 8)
            g = rand_graph(rng, n, rng.randint(0, 12)) if n > 1 else Graph(1, [])
            assert bridges(g) == naive_bridges(g)


class TestContract:
    def test_triangle(self):
        h, mapping = contract(triangle(), [0])
        assert h.n == 2 and mapping[0] == mapping[1]
        assert h.edge_ids() == [1, 2]
        assert sorted(h.endpoints(1)) == sorted(h.endpoints(2))

    def test_path_to_point(self):
        h, mapping = contract(path(3), [0, 1])
        assert (h.n, h.m) == (1, 0) and mapping == [0, 0, 0]

    def test_square_to_triangle(self):
        h, _ = contract(square(), [0])
        assert (h.n, h.m) == (3, 3)
        assert bridges(h) == frozenset()
        assert len({tuple(sorted(h.endpoints(e))) for e in h.edge_ids()}) == 3


class TestComponents:
    def test_restricted(self):
        assert components(path(3), [0, 2]) == [frozenset({0}), frozenset({2})]

    def test_whole(self):
        assert components(triangle()) == [frozenset({0, 1, 2})]

    def test_empty(self):
        assert components(triangle(), []) == []

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            components(triangle(), [5])


def is_spanning_tree(g, edges):
    return len(edges) == g.n - 1 and n_components(g.n, [g.ends[e] for e in edges]) == 1


class TestSpanningTree:
    def test_triangle(self):
        g = triangle()
        t = spanning_tree_containing(g, [eid(g, 0, 1)])
        assert t == {eid(g, 0, 1), eid(g, 0, 2)}
        assert is_spanning_tree(g, t)

    def test_path(self):
        assert spanning_tree_containing(path(3)) == {0, 1}

    def test_k4_superset(self):
        g = complete(4)
        t0 = {eid(g, 0, 1), eid(g, 2, 3)}
        t = spanning_tree_containing(g, t0)
        assert t0 <= t and is_spanning_tree(g, t)

    def test_cycle_in_t(self):
        with pytest.raises(GraphError):
            spanning_tree_containing(triangle(), [0, 1, 2])

    def test_disconnected(self):
        with pytest.raises(GraphError):
            spanning_tree_containing(Graph(3, [(0, 1)]))


class TestLca:
    def test_path(self):
        g = path(3)
        assert lca_index(g, g.edge_ids(), 0).lca(0, 2) == 0

    def test_star(self):
        g = star()
        idx = lca_index(g, g.edge_ids(), 0)
        assert idx.lca(1, 2) == 0
        assert all(idx.lca(v, v) == v for v in range(4))

    def test_not_a_tree(self):
        g = triangle()
        with pytest.raises(GraphError):
            lca_index(g, g.edge_ids(), 0)

    def test_random_trees_vs_naive(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randint(1, 64)
            g = rand_connected(rng, n, 0)
            root = rng.randrange(n)
            idx = lca_index(g, g.edge_ids(), root)
            parent, depth = bfs_parents(g, root)
            for _ in range(60):
                u, v = rng.randrange(n), rng.randrange(n)
                assert idx.lca(u, v) == naive_lca(parent, depth, u, v)
                p = idx.path_edges(u, v)
                assert len(p) == idx.depth[u] + idx.depth[v] - 2 * idx.depth[idx.lca(u, v)]


class TestRelabel:
    def test_keeps_ids(self):
        g = Graph(5, [(0, 4), (4, 2), (1, 3)])
        h, index = relabel(g, [0, 2, 4])
        assert index == {0: 0, 2: 1, 4: 2}
        assert h.edge_ids() == [0, 1]
        assert h.endpoints(1) == (2, 1)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 7), st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=12))
def test_bridges_property(n, raw):
    edges = [(u % n, v % n) for u, v in raw if u % n != v % n]
    g = Graph(n, edges)
    assert bridges(g) == naive_bridges(g)
