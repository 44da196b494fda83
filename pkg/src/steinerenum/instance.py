"""Plain-text instance files.

::

    p undirected 4 5
    e 0 1
    e 1 2
    ...
    t 0 2
    r 0

``p`` gives the graph kind, vertex count and edge count; each ``e`` line
adds an edge whose id is its position among the ``e`` lines; each ``t``
line is one terminal set; ``r`` names the root for directed problems.
Blank lines and lines starting with ``c`` or ``#`` are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TextIO

from .errors import GraphError, SteinerEnumError
from .graph import Graph

__all__ = ["Instance", "InstanceError", "parse_instance", "read_instance"]


class InstanceError(SteinerEnumError):
    """Malformed instance file."""


@dataclass
class Instance:
    graph: Graph
    terminal_sets: list[list[int]] = field(default_factory=list)
    root: int | None = None


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise InstanceError(f"line {lineno}: expected integers, got {' '.join(parts)!r}") from None


def parse_instance(text: str) -> Instance:
    header = None
    edges: list[tuple[int, int]] = []
    sets: list[list[int]] = []
    root = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] in ("c", "#") or parts[0].startswith("#"):
            continue
        tag, rest = parts[0], parts[1:]
        if tag == "p":
            if header is not None:
                raise InstanceError(f"line {lineno}: second 'p' line")
            if len(rest) != 3 or rest[0] not in ("directed", "undirected"):
                raise InstanceError(f"line {lineno}: expected 'p <directed|undirected> <n> <m>'")
            n, m = _ints(rest[1:], lineno)
            if n < 0 or m < 0:
                raise InstanceError(f"line {lineno}: counts must be non-negative")
            header = (rest[0] == "directed", n, m)
            continue
        if header is None:
            raise InstanceError(f"line {lineno}: '{tag}' line before the 'p' line")
        n = header[1]
        if tag == "e":
            if len(rest) != 2:
                raise InstanceError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = _ints(rest, lineno)
            for x in (u, v):
                if not 0 <= x < n:
                    raise InstanceError(f"line {lineno}: vertex {x} outside 0..{n - 1}")
            if u == v:
                raise InstanceError(f"line {lineno}: self-loop at {u}")
            edges.append((u, v))
        elif tag == "t":
            vs = _ints(rest, lineno)
            if not vs:
                raise InstanceError(f"line {lineno}: empty terminal set")
            for x in vs:
                if not 0 <= x < n:
                    raise InstanceError(f"line {lineno}: terminal {x} outside 0..{n - 1}")
            sets.append(vs)
        elif tag == "r":
            if root is not None:
                raise InstanceError(f"line {lineno}: second 'r' line")
            if len(rest) != 1:
                raise InstanceError(f"line {lineno}: expected 'r <v>'")
            (root,) = _ints(rest, lineno)
            if not 0 <= root < n:
                raise InstanceError(f"line {lineno}: root {root} outside 0..{n - 1}")
        else:
            raise InstanceError(f"line {lineno}: unknown line type {tag!r}")
    if header is None:
        raise InstanceError("missing 'p' line")
    directed, n, m = header
    if len(edges) != m:
        raise InstanceError(f"header announces {m} edges but {len(edges)} were given")
    try:
        g = Graph(n, edges, directed)
    except GraphError as exc:
        raise InstanceError(str(exc)) from None
    return Instance(g, sets, root)


def read_instance(stream: TextIO) -> Instance:
    return parse_instance(stream.read())
