import random

import pytest

from helpers import path, rand_claw_free, rand_connected, rand_graph, square, star, triangle
from steinerenum.errors import GraphError, InfeasibleError
from steinerenum.graph import Graph
from steinerenum.induced_clawfree import (
    enum_minimal_induced_steiner,
    is_claw_free,
    iter_minimal_induced_steiner,
    mu,
    neighbors,
    reduce_to_induced,
)
from steinerenum.oracle import brute_induced_steiner, check_induced
from steinerenum.steiner_tree import iter_minimal_steiner_trees


class TestClawFree:
    def test_claw(self):
        assert not is_claw_free(star())

    def test_c4(self):
        assert is_claw_free(square())

    def test_line_graphs(self):
        rng = random.Random(61)
        for _ in range(100):
            g = rand_graph(rng, rng.randint(2, 7), rng.randint(1, 10))
            assert is_claw_free(reduce_to_induced(g, [])[0])


class TestMu:
    def test_single(self):
        assert mu(triangle(), [2], [2]) == {2}

    def test_path(self):
        assert mu(path(4), range(4), [0, 3]) == {0, 1, 2, 3}

    def test_c4_follows_smallest_id_rule(self):
        # deleting 1 first keeps {0, 3, 2} connected
        got = mu(square(), range(4), [0, 2])
        assert got == {0, 2, 3}
        assert brute_induced_steiner(square(), [0, 2]).solutions >= {tuple(sorted(got))}

    def test_preconditions(self):
        with pytest.raises(GraphError):
            mu(square(), [0, 2], [0, 2])
        with pytest.raises(GraphError):
            mu(square(), [0, 1], [2])


class TestNeighbors:
    def test_c4(self):
        got = neighbors(square(), [0, 2], [0, 1, 2])
        assert got == [(1, 3, frozenset({0, 2, 3}))]

    def test_path(self):
        assert neighbors(path(3), [0, 2], [0, 1, 2]) == []

    def test_all_terminals(self):
        assert neighbors(path(3), [0, 1, 2], [0, 1, 2]) == []

    def test_neighbors_are_solutions(self):
        rng = random.Random(62)
        for _ in range(100):
            h = rand_claw_free(rng)
            W = rng.sample(range(h.n), rng.randint(1, min(3, h.n)))
            try:
                sols = list(iter_minimal_induced_steiner(h, W))
            except InfeasibleError:
                continue
            for X in sols:
                for _, _, Z in neighbors(h, W, X):
                    assert check_induced(h, W, sorted(Z))


class TestEnumeration:
    def test_c4(self):
        got = set(iter_minimal_induced_steiner(square(), [0, 2]))
        assert got == {(0, 1, 2), (0, 2, 3)} == brute_induced_steiner(square(), [0, 2]).solutions

    def test_path(self):
        assert list(iter_minimal_induced_steiner(path(5), [1, 3])) == [(1, 2, 3)]

    def test_triangle_reduction(self):
        h, terms, _ = reduce_to_induced(triangle(), [0, 1])
        assert enum_minimal_induced_steiner(h, terms, lambda x: None) == 2

    def test_errors(self):
        with pytest.raises(GraphError):
            list(iter_minimal_induced_steiner(star(), [1, 2]))
        with pytest.raises(GraphError):
            list(iter_minimal_induced_steiner(square(), []))
        with pytest.raises(InfeasibleError):
            list(iter_minimal_induced_steiner(Graph(3, [(0, 1)]), [0, 2]))

    def test_random_vs_oracle(self):
        rng = random.Random(63)
        runs = 0
        for _ in range(250):
            h = rand_claw_free(rng)
            W = rng.sample(range(h.n), rng.randint(1, min(4, h.n)))
            want = brute_induced_steiner(h, W).solutions
            try:
                got = list(iter_minimal_induced_steiner(h, W))
            except InfeasibleError:
                assert not want
                continue
            runs += 1
            assert len(got) == len(set(got)) and set(got) == want
        assert runs > 100


class TestReduction:
    def test_triangle_shape(self):
        h, terms, back = reduce_to_induced(triangle(), [0, 1])
        assert (h.n, terms) == (5, [3, 4])
        assert sorted(back.values()) == [0, 1, 2]
        pairs = sorted(tuple(sorted(h.endpoints(e))) for e in h.edge_ids())
        # line graph K3 on 0..2, vertex 3 for terminal 0 (edges 01, 02), vertex 4 for terminal 1
        assert pairs == [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 4)]

    def test_path_shape(self):
        h, terms, _ = reduce_to_induced(path(3), [0, 2])
        assert h.n == 4 and terms == [2, 3]
        assert sorted(tuple(sorted(h.endpoints(e))) for e in h.edge_ids()) == [(0, 1), (0, 2), (1, 3)]

    def test_counts_match(self):
        rng = random.Random(64)
        for _ in range(60):
            n = rng.randint(2, 6)
            g = rand_connected(rng, n, rng.randint(0, 3))
            W = rng.sample(range(n), rng.randint(1, n))
            h, terms, back = reduce_to_induced(g, W)
            assert is_claw_free(h)
            trees = set(iter_minimal_steiner_trees(g, W))
            induced = list(iter_minimal_induced_steiner(h, terms))
            assert len(trees) == len(induced)
            if len(W) > 1:
                mapped = {tuple(sorted(back[v] for v in X if v in back)) for X in induced}
                assert mapped == trees
