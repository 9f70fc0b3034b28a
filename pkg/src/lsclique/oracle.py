"""Brute-force reference enumeration, for small streams only.

Works directly on the raw link list: each instantaneous graph is rebuilt
from scratch and every vertex subset around each starting link is tried.
Nothing here is shared with the sweep enumerator.
"""

from __future__ import annotations

from itertools import combinations

from .enumerate import TimedClique
from .stream import LinkStream

MAX_ORACLE_VERTICES = 12
MAX_ORACLE_LINKS = 100


class OracleSizeError(ValueError):
    pass


def check_size(stream: LinkStream) -> None:
    if stream.n > MAX_ORACLE_VERTICES or stream.m > MAX_ORACLE_LINKS:
        raise OracleSizeError(
            f"stream too large for the oracle (n={stream.n}, m={stream.m}; "
            f"limits n<={MAX_ORACLE_VERTICES}, m<={MAX_ORACLE_LINKS})"
        )


def graph_at(stream: LinkStream, t: int) -> dict[frozenset[int], int]:
    """Edges alive at ``t`` mapped to the end time of their covering link."""
    return {frozenset((u, v)): e for b, e, u, v in stream.links if b <= t <= e}


def _final_time(edges: dict[frozenset[int], int], clique) -> int | None:
    """Minimum end time over the pairs of ``clique``, or None if one pair is missing."""
    ends = []
    for x, y in combinations(clique, 2):
        e = edges.get(frozenset((x, y)))
        if e is None:
            return None
        ends.append(e)
    return min(ends)


def oracle_enumerate(stream: LinkStream, force: bool = False) -> set[TimedClique]:
    """All maximal cliques, by exhaustive subset search at every begin instant."""
    if not force:
        check_size(stream)
    found: set[TimedClique] = set()
    for t in sorted({link.begin for link in stream.links}):
        edges = graph_at(stream, t)
        nodes = sorted({x for pair in edges for x in pair})
        seeds = [(u, v) for b, _, u, v in stream.links if b == t]
        for u, v in seeds:
            around = [
                w for w in nodes
                if w not in (u, v)
                and frozenset((u, w)) in edges
                and frozenset((v, w)) in edges
            ]
            for mask in range(1 << len(around)):
                clique = [u, v] + [w for i, w in enumerate(around) if mask >> i & 1]
                t1 = _final_time(edges, clique)
                if t1 is None:
                    continue
                extendable = False
                for w in nodes:
                    if w in clique:
                        continue
                    grown = _final_time(edges, clique + [w])
                    if grown is not None and grown >= t1:
                        extendable = True
                        break
                if not extendable:
                    found.add(TimedClique(t, t1, tuple(sorted(clique))))
    return found


def certify(stream: LinkStream, clique: TimedClique) -> list[str]:
    """Check a clique against the raw links; returns the violated properties.

    The four properties are: every pair is covered by a single link over the
    whole interval, the interval ends at the first end time of the covering
    links, some pair starts exactly at ``t0``, and no outside vertex can join
    without shortening the interval.
    """
    problems = []
    t0, t1, members = clique.t0, clique.t1, clique.members
    cover: dict[frozenset[int], tuple[int, int]] = {}
    for b, e, u, v in stream.links:
        if u in members and v in members and b <= t0 <= e:
            cover[frozenset((u, v))] = (b, e)
    pairs = [frozenset(p) for p in combinations(members, 2)]
    if any(p not in cover or cover[p][1] < t1 for p in pairs):
        problems.append("pair not covered over the whole interval")
        return problems
    if min(cover[p][1] for p in pairs) != t1:
        problems.append("interval does not end at the final time")
    if not any(cover[p][0] == t0 for p in pairs):
        problems.append("no pair begins at the start time")
    edges = graph_at(stream, t0)
    others = {x for pair in edges for x in pair} - set(members)
    for w in sorted(others):
        grown = _final_time(edges, [*members, w])
        if grown is not None and grown >= t1:
            problems.append(f"vertex {w} extends the clique")
            break
    return problems
