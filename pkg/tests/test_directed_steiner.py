import random

import pytest

from helpers import path, rand_connected, rand_graph
from steinerenum.directed_steiner import has_second_solution, iter_minimal_directed_steiner_trees
from steinerenum.enumtree import MODES, EnumStats
from steinerenum.errors import GraphError, InfeasibleError
from steinerenum.graph import Graph
from steinerenum.oracle import brute_directed_steiner, brute_st_paths, check_directed_tree

R, A, W1, W2 = 0, 1, 2, 3


class TestExamples:
    def test_two_trees(self):
        d = Graph(4, [(R, A), (A, W1), (A, W2), (R, W2)], directed=True)
        want = {(0, 1, 2), (0, 1, 3)}
        for mode in MODES:
            assert set(iter_minimal_directed_steiner_trees(d, R, [W1, W2], mode)) == want
        assert brute_directed_steiner(d, R, [W1, W2]).solutions == want

    def test_directed_path(self):
        assert list(iter_minimal_directed_steiner_trees(path(3, directed=True), 0, [2])) == [(0, 1)]

    def test_directed_cycle(self):
        d = Graph(3, [(0, 1), (1, 2), (2, 0)], directed=True)
        assert list(iter_minimal_directed_steiner_trees(d, 0, [2])) == [(0, 1)]

    def test_errors(self):
        d = path(3, directed=True)
        with pytest.raises(GraphError):
            list(iter_minimal_directed_steiner_trees(d, 0, [0, 2]))
        with pytest.raises(InfeasibleError):
            list(iter_minimal_directed_steiner_trees(d, 2, [0]))
        with pytest.raises(GraphError):
            list(iter_minimal_directed_steiner_trees(path(3), 0, [2]))


class TestSecondSolution:
    def test_tree_is_unique(self):
        rng = random.Random(51)
        for _ in range(30):
            n = rng.randint(2, 10)
            t = rand_connected(rng, n, 0)
            # orient every edge away from vertex 0
            order, seen, arcs = [0], {0}, []
            for x in order:
                for y, _ in t.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        order.append(y)
                        arcs.append((x, y))
            d = Graph(n, arcs, directed=True)
            W = rng.sample(range(1, n), rng.randint(1, n - 1)) if n > 1 else []
            assert has_second_solution(d, 0, W).terminal is None

    def test_parallel_arcs(self):
        d = Graph(2, [(0, 1), (0, 1)], directed=True)
        assert has_second_solution(d, 0, [1]).terminal == 1

    def test_diamond(self):
        d = Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)], directed=True)
        assert has_second_solution(d, 0, [3]).terminal == 3
        assert brute_st_paths(d, 0, 3).count == 2

    def test_random_vs_oracle(self):
        rng = random.Random(52)
        for _ in range(300):
            n = rng.randint(2, 6)
            d = rand_graph(rng, n, rng.randint(1, 10), directed=True)
            reach = {0}
            frontier = [0]
            while frontier:
                x = frontier.pop()
                for y, _ in d.adj[x]:
                    if y not in reach:
                        reach.add(y)
                        frontier.append(y)
            W = sorted(reach - {0})
            if not W:
                continue
            W = rng.sample(W, rng.randint(1, len(W)))
            sols = brute_directed_steiner(d, 0, W).solutions
            w, tree = has_second_solution(d, 0, W)
            if w is None:
                assert sols == {tree}
            else:
                assert len(sols) >= 2 and w in W
                assert brute_st_paths(d, 0, w).count >= 2


def test_random_vs_oracle():
    rng = random.Random(53)
    for _ in range(250):
        n = rng.randint(2, 6)
        d = rand_graph(rng, n, rng.randint(1, 12), directed=True)
        r = rng.randrange(n)
        W = rng.sample([v for v in range(n) if v != r], rng.randint(1, n - 1))
        want = brute_directed_steiner(d, r, W).solutions
        for mode in MODES:
            stats = EnumStats()
            try:
                got = list(iter_minimal_directed_steiner_trees(d, r, W, mode, stats))
            except InfeasibleError:
                assert not want
                continue
            assert len(got) == len(set(got)) and set(got) == want
            assert all(check_directed_tree(d, r, W, s) for s in got)
            if mode != "plain":
                assert stats.tree.violations == 0
