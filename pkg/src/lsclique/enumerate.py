"""Maximal clique enumeration in link streams.

The sweep visits every instant ``t`` where some link begins.  Each link
starting at ``t`` seeds a Bron-Kerbosch style recursion over the
instantaneous graph that lists the graph cliques containing that link.
Seed edges already processed at ``t`` are forbidden in later recursions,
so every time-maximal clique ``(C, [t, final_time(C)])`` starting at ``t``
is visited exactly once.  Each visited clique is kept if no vertex of its
common neighbourhood can join it without shortening its interval.

Every frame carries ``ext``: for each vertex ``w`` of the common
neighbourhood ``P | X``, the final time of ``R + {w}``.  It is updated in
``O(|P| + |X|)`` per recursive call and serves the maximality test, the
pivot selection and the end time of child cliques.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .instant import InstantCursor
from .stream import LinkStream


@dataclass(frozen=True, order=True)
class TimedClique:
    t0: int
    t1: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.t1 < self.t0:
            raise ValueError(f"clique interval [{self.t0}, {self.t1}] is reversed")
        if len(self.members) < 2:
            raise ValueError("a clique needs at least two vertices")

    def labeled(self, stream: LinkStream) -> tuple[int, int, tuple[str, ...]]:
        label = stream.vertices.label
        return self.t0, self.t1, tuple(sorted(label(v) for v in self.members))


@dataclass
class EnumCounters:
    n_vertices: int = 0
    n_links: int = 0
    n_instants: int = 0
    max_degree: int = 0
    max_clique_size: int = 0
    maximal_cliques: int = 0
    time_maximal_cliques: int = 0
    leaves: int = 0
    maximal_leaves: int = 0
    wall_time: float = 0.0

    @property
    def leaf_ratio(self) -> float:
        """Fraction of recursion leaves that emitted a maximal clique (1.0 without leaves)."""
        return self.maximal_leaves / self.leaves if self.leaves else 1.0

    @property
    def wasted_leaves(self) -> int:
        return self.leaves - self.maximal_leaves

    def as_dict(self) -> dict:
        out = asdict(self)
        out["leaf_ratio"] = round(self.leaf_ratio, 6)
        return out

    @classmethod
    def merge(cls, parts: Iterable[EnumCounters]) -> EnumCounters:
        """Combine counters of runs over disjoint begin-time ranges of one stream."""
        merged = cls()
        for c in parts:
            merged.n_vertices = max(merged.n_vertices, c.n_vertices)
            merged.n_links = max(merged.n_links, c.n_links)
            merged.n_instants = max(merged.n_instants, c.n_instants)
            merged.max_degree = max(merged.max_degree, c.max_degree)
            merged.max_clique_size = max(merged.max_clique_size, c.max_clique_size)
            merged.maximal_cliques += c.maximal_cliques
            merged.time_maximal_cliques += c.time_maximal_cliques
            merged.leaves += c.leaves
            merged.maximal_leaves += c.maximal_leaves
            merged.wall_time = max(merged.wall_time, c.wall_time)
        return merged


@dataclass
class EnumFrame:
    """State of one recursive call: clique ``R`` with candidates ``P`` and excluded ``X``."""

    R: list[int]
    P: set[int]
    X: set[int]
    end_of_R: int
    t: int
    ext: dict[int, int] = field(default_factory=dict)

    @classmethod
    def seed(cls, cursor: InstantCursor, u: int, v: int) -> EnumFrame:
        adj_u, adj_v = cursor.adjacency[u], cursor.adjacency[v]
        end = adj_u[v]
        common = adj_u.keys() & adj_v.keys()
        ext = {w: min(end, adj_u[w], adj_v[w]) for w in common}
        return cls([u, v], set(common), set(), end, cursor.now, ext)


class ForbidEdges:
    """Symmetric set of seed edges already used at the current instant."""

    def __init__(self) -> None:
        self._nbrs: dict[int, set[int]] = {}

    def add(self, u: int, v: int) -> None:
        self._nbrs.setdefault(u, set()).add(v)
        self._nbrs.setdefault(v, set()).add(u)

    def clear(self) -> None:
        self._nbrs.clear()

    def __contains__(self, edge: tuple[int, int]) -> bool:
        u, v = edge
        return v in self._nbrs.get(u, ())

    def touches(self, u: int, clique: Iterable[int]) -> bool:
        """True if some forbidden edge joins ``u`` to a vertex of ``clique``."""
        nb = self._nbrs.get(u)
        return nb is not None and not nb.isdisjoint(clique)

    def __len__(self) -> int:
        return sum(len(s) for s in self._nbrs.values()) // 2


def vertex_maximal(
    cursor: InstantCursor, clique: Iterable[int], neighborhood: Iterable[int], end_of_clique: int
) -> bool:
    """True iff adding any common neighbour strictly lowers the final time."""
    adj = cursor.adjacency
    members = list(clique)
    for w in neighborhood:
        adj_w = adj[w]
        if min(adj_w[v] for v in members) >= end_of_clique:
            return False
    return True


def pivot_deletions(frame: EnumFrame, adjacency: list[dict[int, int]], p: int) -> set[int]:
    """Candidates ``u`` adjacent to ``p`` with ``final(R+{u}) == final(R+{u, p})``."""
    ext = frame.ext
    adj_p = adjacency[p]
    ext_p = ext[p]
    out = set()
    for u in frame.P:
        e_up = adj_p.get(u)
        # final(R+{u,p}) = min(ext[u], ext[p], e(u,p)); equal to ext[u] iff the rest is >= it
        if e_up is not None and min(ext_p, e_up) >= ext[u]:
            out.add(u)
    return out


def choose_pivot(frame: EnumFrame, cursor: InstantCursor) -> tuple[int, set[int]]:
    """Pivot of ``P | X`` with the largest deletion set; ties go to P, then smallest id."""
    if not frame.P:
        raise ValueError("pivot needs a non-empty candidate set")
    best, best_del = -1, None
    for p in [*sorted(frame.P), *sorted(frame.X)]:
        dels = pivot_deletions(frame, cursor.adjacency, p)
        if best_del is None or len(dels) > len(best_del):
            best, best_del = p, dels
    return best, best_del


Sink = Callable[[TimedClique], None]
Visit = Callable[[EnumFrame, bool], None]


def gce(
    frame: EnumFrame,
    forbid: ForbidEdges,
    cursor: InstantCursor,
    sink: Sink,
    counters: EnumCounters,
    *,
    pivot: bool = True,
    visit: Visit | None = None,
    check: bool = False,
) -> None:
    """Visit the cliques ``R <= C <= R | P`` of the current graph avoiding forbidden edges.

    Each visited clique is tested for vertex-maximality on the spot and
    passed to ``sink`` when it passes.  ``visit(frame, maximal)`` is called
    for every visited clique when given.
    """
    counters.time_maximal_cliques += 1
    if check:
        check_frame(frame, cursor)

    R, P, X, end_R, ext = frame.R, frame.P, frame.X, frame.end_of_R, frame.ext
    maximal = not ext or max(ext.values()) < end_R
    if maximal:
        counters.maximal_cliques += 1
        if len(R) > counters.max_clique_size:
            counters.max_clique_size = len(R)
        sink(TimedClique(frame.t, end_R, tuple(sorted(R))))
    if visit is not None:
        visit(frame, maximal)

    if P:
        if pivot:
            _, dels = choose_pivot(frame, cursor)
            candidates = sorted(P - dels) if dels else sorted(P)
        else:
            candidates = sorted(P)
    else:
        candidates = ()

    adjacency = cursor.adjacency
    recursed = False
    for u in candidates:
        if forbid.touches(u, R):
            continue
        nbr = adjacency[u]
        end_u = ext[u]
        p2 = nbr.keys() & P
        x2 = nbr.keys() & X
        # final(R+{u,w}) = min(final(R+{w}), final(R+{u}), e(u,w))
        child_ext = {w: min(ext[w], nbr[w], end_u) for w in p2}
        for w in x2:
            child_ext[w] = min(ext[w], nbr[w], end_u)
        R.append(u)
        gce(
            EnumFrame(R, p2, x2, end_u, frame.t, child_ext),
            forbid, cursor, sink, counters, pivot=pivot, visit=visit, check=check,
        )
        R.pop()
        P.discard(u)
        X.add(u)
        recursed = True

    if not recursed:
        counters.leaves += 1
        if maximal:
            counters.maximal_leaves += 1


def check_frame(frame: EnumFrame, cursor: InstantCursor) -> None:
    """Assert the frame invariants against a recomputation from the cursor."""
    adj = cursor.adjacency
    R = frame.R
    common = set(adj[R[0]])
    for v in R[1:]:
        common &= adj[v].keys()
    assert frame.P | frame.X == common, "P | X is not the common neighbourhood of R"
    assert not frame.P & frame.X, "P and X overlap"
    assert frame.end_of_R == cursor.clique_final_time(R), "stale final time of R"
    for w in common:
        assert frame.ext[w] == cursor.clique_final_time([*R, w]), f"stale extension time for {w}"


def run_enumeration(
    stream: LinkStream,
    sink: Sink,
    *,
    pivot: bool = True,
    begin_range: tuple[int, int | None] | None = None,
    check: bool = False,
) -> EnumCounters:
    """Stream every maximal clique starting in ``begin_range`` into ``sink``.

    ``begin_range = (lo, hi)`` keeps instants ``lo <= t < hi`` (``hi=None``
    is unbounded).  Cliques arrive in nondecreasing start time.
    """
    start = time.perf_counter()
    counters = EnumCounters(
        n_vertices=stream.n,
        n_links=stream.m,
        n_instants=len({x for link in stream.links for x in (link.begin, link.end)}),
    )
    instants = stream.begin_times()
    if begin_range is not None:
        lo, hi = begin_range
        instants = [t for t in instants if t >= lo and (hi is None or t < hi)]

    cursor = InstantCursor(stream)
    forbid = ForbidEdges()
    for t in instants:
        cursor.advance_to(t)
        forbid.clear()
        for _, _, u, v in cursor.starting_links():
            gce(EnumFrame.seed(cursor, u, v), forbid, cursor, sink, counters, pivot=pivot, check=check)
            forbid.add(u, v)
    counters.max_degree = cursor.max_degree
    counters.wall_time = time.perf_counter() - start
    return counters


def enumerate_maximal_cliques(
    stream: LinkStream,
    *,
    pivot: bool = True,
    begin_range: tuple[int, int | None] | None = None,
    check: bool = False,
) -> tuple[list[TimedClique], EnumCounters]:
    cliques: list[TimedClique] = []
    counters = run_enumeration(
        stream, cliques.append, pivot=pivot, begin_range=begin_range, check=check
    )
    return cliques, counters
