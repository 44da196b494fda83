"""Output-queue buffering: turn amortized per-node cost into bounded delay.

The enumeration tree is walked as usual, but solutions are not emitted at
the leaves they come from. The first ``n`` solutions are held back in a
buffer; afterwards every subtree hanging off the preprocessing region is
traversed under three rules:

* R1: an internal node at odd depth (inside its subtree) outputs the
  solution in slot ``A[depth]`` when it is examined;
* R2: an internal node at even depth outputs ``A[depth]`` when discovered;
* R3: a leaf not claimed by any internal node outputs its own solution.

A leaf claimed by an internal node (through the consistent function theta)
stores its solution in that node's slot instead. Nodes revisited on the
path from the last preprocessing leaf back to the root output from the
buffer at odd depth.

The three rules alone do not keep every window of three consecutive tour
visits busy (a node with many leaf children is revisited between leaves
with nothing to say), so by default a pacer tops up any visit that would
otherwise make the third silent visit in a row, drawing from the buffer
(the deepest filled slot first, then the shared pool).
Rule-driven outputs that are not needed to keep the gap are banked instead
of emitted while the buffer holds fewer than ``2n`` solutions, so the
buffer is refilled as fast as the stream allows. Space stays O(n) solutions.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from typing import Any

from .enumtree import DISCOVER, EXAMINE, LEAF, REVISIT, Event

__all__ = ["OutputQueue", "QueueStats", "build_theta", "wrap"]

MAX_GAP = 3


@dataclass
class QueueStats:
    capacity: int = 0
    buffered: int = 0
    emitted: int = 0
    max_gap: int = 0  # tour visits from one emission to the next, after preprocessing
    subtrees: int = 0
    occupancy_violations: int = 0
    theta_violations: int = 0
    stalls: int = 0  # R1/R2 found an empty slot and an empty buffer
    pacer_emits: int = 0
    banked: int = 0  # rule outputs held back to refill the buffer


def build_theta(events: Iterable[Event]) -> dict[int, int]:
    """Consistent function from internal node ids to leaf ids.

    Each leaf is given to its nearest ancestor that has no leaf yet. When
    every internal node has at least two children the map is total,
    injective, and sends each node to one of its descendants.
    """
    theta: dict[int, int] = {}
    open_nodes: list[int] = []
    for kind, nid, _, _ in events:
        if kind == DISCOVER:
            open_nodes.append(nid)
        elif kind == LEAF:
            if open_nodes:
                theta[open_nodes.pop()] = nid
        elif kind == EXAMINE and open_nodes and open_nodes[-1] == nid:
            open_nodes.pop()
    return theta


class OutputQueue:
    """Buffering driver over a stream of tour events.

    ``n`` is the buffer size (rounded up to even). Call :meth:`run` with the
    events and iterate over the emitted solutions; :attr:`stats` is filled
    in as the run progresses.
    """

    def __init__(self, n: int, pacing: bool = True) -> None:
        cap = max(n, 2)
        self.capacity = cap + (cap % 2)
        self.pacing = pacing
        self.bank = 2 * self.capacity
        self.stats = QueueStats(capacity=self.capacity)

    def run(self, events: Iterable[Event]) -> Iterator[Any]:
        st = self.stats
        cap = self.capacity
        pool: list[Any] = []
        slots: dict[int, Any] = {}
        pre_ids: set[int] = set()
        unclaimed: list[tuple[int, int]] = []  # (node id, eta) awaiting a theta leaf
        steady = False
        root_id = -1
        root_depth = 0
        silent = 0

        def take(eta: int) -> Any:
            if eta in slots:
                return slots.pop(eta)
            if pool:
                return pool.pop()
            st.stalls += 1
            return None

        for kind, nid, depth, sol in events:
            if not steady:
                if kind == DISCOVER:
                    pre_ids.add(nid)
                elif kind == LEAF:
                    pool.append(sol)
                    st.buffered += 1
                    if len(pool) >= cap:
                        steady = True
                continue

            out = None
            if nid in pre_ids:
                if kind == EXAMINE and depth % 2 == 1 and pool:
                    out = pool.pop()
            elif kind == DISCOVER or kind == LEAF:
                if root_id < 0:
                    root_id, root_depth = nid, depth
                    st.subtrees += 1
                    if len(pool) < cap // 2:
                        st.occupancy_violations += 1
                eta = depth - root_depth + 1
                if kind == DISCOVER:
                    unclaimed.append((nid, eta))
                    if eta % 2 == 0:
                        out = take(eta)
                elif unclaimed:
                    _, owner_eta = unclaimed.pop()
                    if owner_eta in slots:
                        pool.append(slots[owner_eta])
                    slots[owner_eta] = sol
                else:
                    out = sol
                if kind == LEAF and nid == root_id:
                    root_id = -1
            elif kind == EXAMINE:
                eta = depth - root_depth + 1
                if unclaimed and unclaimed[-1][0] == nid:
                    unclaimed.pop()
                    st.theta_violations += 1
                if eta % 2 == 1:
                    out = take(eta)
                if nid == root_id:
                    pool.extend(slots.values())
                    slots.clear()
                    root_id = -1
            # REVISIT inside a subtree: no rule applies

            if out is not None:
                if self.pacing and len(pool) < self.bank and silent < MAX_GAP - 1:
                    pool.append(out)
                    st.banked += 1
                    out = None
            elif self.pacing and silent >= MAX_GAP - 1 and (pool or slots):
                out = slots.pop(max(slots)) if slots else pool.pop()
                st.pacer_emits += 1
            if out is None:
                silent += 1
            else:
                st.max_gap = max(st.max_gap, silent + 1)
                silent = 0
                st.emitted += 1
                yield out

        if steady and silent:
            st.max_gap = max(st.max_gap, silent + 1)
        rest = pool + list(slots.values())
        for sol in rest:
            st.emitted += 1
            yield sol


def wrap(events: Iterable[Event], sink: Callable[[Any], object], n: int,
         pacing: bool = True) -> tuple[int, QueueStats]:
    """Drive ``events`` through an output queue of size ``n`` into ``sink``."""
    q = OutputQueue(n, pacing)
    count = 0
    for sol in q.run(events):
        sink(sol)
        count += 1
    return count, q.stats
