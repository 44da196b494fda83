"""Graph builders shared by the tests."""
import itertools
import random

from steinerenum.graph import Graph
from steinerenum.induced_clawfree import is_claw_free, reduce_to_induced


def rand_connected(rng: random.Random, n: int, extra: int) -> Graph:
    """Random spanning tree plus ``extra`` random edges (parallels allowed)."""
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    for _ in range(extra):
        edges.append(tuple(rng.sample(range(n), 2)))
    rng.shuffle(edges)
    return Graph(n, edges)


def rand_graph(rng: random.Random, n: int, m: int, directed: bool = False) -> Graph:
    return Graph(n, [tuple(rng.sample(range(n), 2)) for _ in range(m)], directed)



def rand_claw_free(rng: random.Random, max_n: int = 6) -> Graph:
    """Alternates line graphs with rejection-sampled claw-free graphs."""
    if rng.random() < 0.5:
        base = rand_graph(rng, rng.randint(2, 5), rng.randint(1, 6))
        h, _, _ = reduce_to_induced(base, [])
        if 0 < h.n <= max_n:
            return h
    while True:
        n = rng.randint(2, max_n)
        h = rand_graph(rng, n, rng.randint(1, 2 * n))
        if is_claw_free(h):
            return h


def complete(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))


def triangle() -> Graph:
    return Graph(3, [(0, 1), (0, 2), (1, 2)])


def path(n: int, directed: bool = False) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)], directed)


def square() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def diamond(directed: bool = False) -> Graph:
    return Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)], directed)


def star() -> Graph:
    """Center 0 with leaves 1, 2, 3."""
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def eid(g: Graph, u: int, v: int) -> int:
    """Id of the (first) edge joining u and v."""
    for e in g.edge_ids():
        a, b = g.endpoints(e)
        if (a, b) == (u, v) or (not g.directed and (b, a) == (u, v)):
            return e
    raise KeyError((u, v))


