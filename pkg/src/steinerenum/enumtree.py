"""Depth-first traversal of an enumeration tree, reported as tour events.

Every enumerator in the package describes its search tree through a single
``expand(state)`` callback returning either ``(solution, None)`` for a leaf
or ``(None, children)`` where ``children`` is an iterator of child states.
:func:`walk` turns that into the Eulerian tour of the tree: one event per
visit, which is the unit the output queue and the delay checks count.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from typing import Any

from .errors import IntegrityError

__all__ = [
    "DISCOVER",
    "EXAMINE",
    "LEAF",
    "MODES",
    "REVISIT",
    "EnumStats",
    "TreeStats",
    "drive",
    "solutions",
    "walk",
]

DISCOVER = 0  # internal node reached for the first time
LEAF = 1  # leaf reached; carries its solution
REVISIT = 2  # back at an internal node, more children to go
EXAMINE = 3  # back at an internal node for the last time

Event = tuple[int, int, int, Any]  # (kind, node id, depth, solution or None)
Expand = Callable[[Any], tuple[Any, "Iterator[Any] | None"]]


@dataclass
class TreeStats:
    nodes: int = 0
    leaves: int = 0
    internal: int = 0
    single_child: int = 0
    children: Counter = field(default_factory=Counter)

    @property
    def violations(self) -> int:
        """Internal nodes with fewer than two children."""
        return self.single_child


_END = object()


def walk(root: Any, expand: Expand, stats: TreeStats | None = None) -> Iterator[Event]:
    """Yield the tour events of the tree rooted at ``root``.

    The next child of a node is produced right after the previous child's
    subtree is finished, so a return visit knows whether it is the last one.
    """
    if stats is None:
        stats = TreeStats()
    sol, kids = expand(root)
    stats.nodes += 1
    if kids is None:
        stats.leaves += 1
        yield (LEAF, 0, 0, sol)
        return
    stats.internal += 1
    yield (DISCOVER, 0, 0, None)
    first = next(kids, _END)
    if first is _END:
        raise IntegrityError("internal enumeration node without children")
    # frame: [node id, depth, children iterator, children seen, pending child]
    stack = [[0, 0, kids, 1, first]]
    next_id = 1
    while stack:
        top = stack[-1]
        child = top[4]
        depth = top[1] + 1
        sol, kids = expand(child)
        nid = next_id
        next_id += 1
        stats.nodes += 1
        if kids is None:
            stats.leaves += 1
            yield (LEAF, nid, depth, sol)
        else:
            stats.internal += 1
            yield (DISCOVER, nid, depth, None)
            first = next(kids, _END)
            if first is _END:
                raise IntegrityError("internal enumeration node without children")
            stack.append([nid, depth, kids, 1, first])
            continue
        # the leaf is done; climb while parents are exhausted
        while stack:
            top = stack[-1]
            nxt = next(top[2], _END)
            if nxt is _END:
                count = top[3]
                stats.children[count] += 1
                if count < 2:
                    stats.single_child += 1
                stack.pop()
                yield (EXAMINE, top[0], top[1], None)
                continue
            top[3] += 1
            top[4] = nxt
            yield (REVISIT, top[0], top[1], None)
            break


def solutions(events: Iterator[Event]) -> Iterator[Any]:
    """Plain emission: each leaf's solution at the moment it is reached."""
    for kind, _, _, sol in events:
        if kind == LEAF:
            yield sol


@dataclass
class EnumStats:
    """Counters filled in by an enumeration run."""

    tree: TreeStats = field(default_factory=TreeStats)
    queue: Any = None  # QueueStats when the output queue is in use
    visits: int = 0  # tour events produced so far


MODES = ("plain", "improved", "queued")


def check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {', '.join(MODES)}, got {mode!r}")


def _counted(events: Iterator[Event], stats: EnumStats) -> Iterator[Event]:
    for ev in events:
        stats.visits += 1
        yield ev


def drive(root: Any, expand: Expand, mode: str, n: int,
          stats: EnumStats | None = None) -> Iterator[Any]:
    """Walk the tree and emit solutions, through an output queue when ``mode == 'queued'``."""
    from .output_queue import OutputQueue

    if stats is None:
        stats = EnumStats()
    events = _counted(walk(root, expand, stats.tree), stats)
    if mode == "queued":
        q = OutputQueue(n)
        stats.queue = q.stats
        yield from q.run(events)
    else:
        yield from solutions(events)
