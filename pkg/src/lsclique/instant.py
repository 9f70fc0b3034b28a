"""Event-driven view of the instantaneous graph as a sweep moves forward in time."""

from __future__ import annotations

import heapq
from typing import Collection

from .stream import LinkStream


class EdgeAbsentError(LookupError):
    pass


class InstantCursor:
    """Adjacency of the graph of links alive at ``now``, with per-edge end times.

    ``adjacency[u]`` maps each current neighbour ``v`` to the end time of the
    unique link covering ``now`` for the pair.  Links are inserted when the
    sweep reaches their begin time and expired lazily through a heap keyed on
    end time, so moving between consecutive begin instants costs
    ``O(k log m)`` for ``k`` changed links.
    """

    def __init__(self, stream: LinkStream):
        self._links = stream.links
        self.adjacency: list[dict[int, int]] = [{} for _ in range(stream.n)]
        self._expiry: list[tuple[int, int, int]] = []
        self._next = 0
        self.now: int | None = None
        self.max_degree = 0
        # [start, stop) indices of the links beginning exactly at ``now``
        self.starting = (0, 0)

    @property
    def insert_position(self) -> int:
        return self._next

    def advance_to(self, t: int) -> None:
        if self.now is not None and t < self.now:
            raise ValueError(f"sweep moved backwards: {t} < {self.now}")
        adj = self.adjacency
        expiry = self._expiry
        # expire before inserting: a pair may get a new link right after its old one ends
        while expiry and expiry[0][0] < t:
            e, u, v = heapq.heappop(expiry)
            if adj[u].get(v) == e:
                del adj[u][v]
                del adj[v][u]

        links = self._links
        i = self._next
        m = len(links)
        start = i
        touched = []
        while i < m and links[i].begin <= t:
            b, e, u, v = links[i]
            if b < t:
                start = i + 1
            if e >= t:
                adj[u][v] = e
                adj[v][u] = e
                heapq.heappush(expiry, (e, u, v))
                touched.append(u)
                touched.append(v)
            i += 1
        self._next = i
        self.starting = (start, i)
        self.now = t
        if touched:
            self.max_degree = max(self.max_degree, max(len(adj[w]) for w in touched))

    def starting_links(self):
        start, stop = self.starting
        return self._links[start:stop]

    def neighbors(self, u: int) -> dict[int, int]:
        return self.adjacency[u]

    def edge_end_time(self, u: int, v: int) -> int:
        try:
            return self.adjacency[u][v]
        except KeyError:
            raise EdgeAbsentError(f"no edge {u}-{v} at t={self.now}") from None

    def clique_final_time(self, clique: Collection[int]) -> int:
        members = list(clique)
        if len(members) < 2:
            raise ValueError("a clique needs at least two vertices")
        return min(
            self.edge_end_time(members[i], members[j])
            for i in range(len(members))
            for j in range(i + 1, len(members))
        )

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])
