import random
from collections import Counter

import pytest

from helpers import complete
from steinerenum.enumtree import DISCOVER, EXAMINE, LEAF, REVISIT, EnumStats, TreeStats, drive, walk
from steinerenum.errors import IntegrityError
from steinerenum.output_queue import OutputQueue, build_theta, wrap
from steinerenum.steiner_tree import iter_minimal_steiner_trees


def nested_expand(node):
    """Trees written as nested lists; any non-list is a leaf solution."""
    if isinstance(node, list):
        return None, iter(node)
    return node, None


def full_binary(depth, start=0):
    if depth == 0:
        return start
    half = 1 << (depth - 1)
    return [full_binary(depth - 1, start), full_binary(depth - 1, start + half)]


def random_tree(rng, budget):
    """Random tree with >= 2 children per internal node; leaves numbered in order."""
    counter = iter(range(10**9))

    def build(size):
        if size <= 1 or rng.random() < 0.2:
            return next(counter)
        k = rng.randint(2, min(4, size))
        cut = sorted(rng.sample(range(1, size), k - 1))
        parts = [b - a for a, b in zip([0] + cut, cut + [size])]
        return [build(p) for p in parts]

    return build(budget)


def ancestry(events):
    parent, stack = {}, []
    for kind, nid, _, _ in events:
        if kind in (DISCOVER, LEAF):
            parent[nid] = stack[-1] if stack else None
            if kind == DISCOVER:
                stack.append(nid)
        elif kind == EXAMINE:
            stack.pop()
    return parent


def is_descendant(parent, x, a):
    while x is not None:
        if x == a:
            return True
        x = parent[x]
    return False


class TestWalk:
    def test_event_sequence(self):
        events = list(walk([0, [1, 2]], nested_expand))
        kinds = [k for k, _, _, _ in events]
        assert kinds == [DISCOVER, LEAF, REVISIT, DISCOVER, LEAF, REVISIT, LEAF, EXAMINE, EXAMINE]

    def test_stats(self):
        stats = TreeStats()
        list(walk([0, [1], 2], nested_expand, stats))
        assert (stats.nodes, stats.internal, stats.leaves) == (5, 2, 3)
        assert stats.violations == 1 and stats.children == Counter({3: 1, 1: 1})

    def test_empty_internal_node(self):
        with pytest.raises(IntegrityError):
            list(walk([0, []], nested_expand))

    def test_tour_length(self):
        rng = random.Random(1)
        for _ in range(50):
            stats = TreeStats()
            events = list(walk(random_tree(rng, 60), nested_expand, stats))
            assert len(events) == 2 * stats.nodes - 1


class TestTheta:
    def test_path_shaped(self):
        events = list(walk([10, 11], nested_expand))
        assert build_theta(events) == {0: 1}

    def test_full_binary_depth_two(self):
        events = list(walk(full_binary(2), nested_expand))
        theta = build_theta(events)
        internal = {nid for k, nid, _, _ in events if k == DISCOVER}
        leaves = {nid for k, nid, _, _ in events if k == LEAF}
        assert set(theta) == internal and len(internal) == 3
        assert len(leaves - set(theta.values())) == 1

    def test_random_trees(self):
        rng = random.Random(2)
        for _ in range(100):
            events = list(walk(random_tree(rng, rng.randint(2, 100)), nested_expand))
            theta = build_theta(events)
            parent = ancestry(events)
            internal = {nid for k, nid, _, _ in events if k == DISCOVER}
            assert set(theta) == internal
            assert len(set(theta.values())) == len(theta)
            assert all(is_descendant(parent, leaf, node) for node, leaf in theta.items())


class TestQueue:
    def test_capacity_rounding(self):
        assert OutputQueue(5).capacity == 6
        assert OutputQueue(0).capacity == 2

    def test_fewer_solutions_than_buffer(self):
        count, stats = wrap(walk([0, [1, 2]], nested_expand), (out := []).append, 10)
        assert count == 3 and sorted(out) == [0, 1, 2]
        assert stats.max_gap == 0

    def test_multiset_preserved(self):
        rng = random.Random(3)
        for _ in range(100):
            tree = random_tree(rng, rng.randint(1, 150))
            plain = [sol for k, _, _, sol in walk(tree, nested_expand) if k == LEAF]
            for pacing in (True, False):
                out = []
                count, stats = wrap(walk(tree, nested_expand), out.append, rng.randint(1, 9), pacing)
                assert sorted(out) == sorted(plain) and count == len(plain)
                assert stats.theta_violations == 0

    def test_k4_matches_improved(self):
        g = complete(4)
        queued = list(iter_minimal_steiner_trees(g, range(4), "queued"))
        improved = list(iter_minimal_steiner_trees(g, range(4), "improved"))
        assert len(queued) == 16 and Counter(queued) == Counter(improved)

    def test_k6_gap(self):
        stats = EnumStats()
        sols = list(iter_minimal_steiner_trees(complete(6), range(6), "queued", stats))
        assert len(sols) == 6 ** 4
        assert stats.queue.max_gap <= 3
        assert stats.queue.occupancy_violations == 0

    def test_drive_plain_matches_leaves(self):
        tree = random_tree(random.Random(4), 40)
        leaves = [sol for k, _, _, sol in walk(tree, nested_expand) if k == LEAF]
        assert list(drive(tree, nested_expand, "plain", 4)) == leaves
