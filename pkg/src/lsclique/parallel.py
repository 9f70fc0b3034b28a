"""Parallel enumeration over disjoint ranges of begin times.

Cliques are keyed by their start instant, so workers that own disjoint
begin-time ranges never produce the same clique.  Each worker builds its own
cursor from the shared, read-only stream.
"""

from __future__ import annotations

import bisect
import os
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import accumulate

from .enumerate import EnumCounters, TimedClique, enumerate_maximal_cliques
from .stream import LinkStream


@dataclass
class SplitPlan:
    """Half-open begin-time ranges ``[boundaries[i], boundaries[i+1])``.

    The last boundary is one past the last begin time.  Empty ranges have
    equal boundaries.
    """

    boundaries: list[int]
    counts: list[int]
    burst: int = 0

    def ranges(self) -> list[tuple[int, int]]:
        return list(zip(self.boundaries, self.boundaries[1:]))

    def __len__(self) -> int:
        return len(self.counts)


def _instant_bursts(stream: LinkStream) -> tuple[list[int], list[int]]:
    """Distinct begin instants and the number of links starting at each."""
    instants: list[int] = []
    sizes: list[int] = []
    for link in stream.links:
        if instants and instants[-1] == link.begin:
            sizes[-1] += 1
        else:
            instants.append(link.begin)
            sizes.append(1)
    return instants, sizes


def _nearest_cuts(prefix: list[int], n_th: int) -> list[int]:
    """Cut positions (indices into ``prefix``) nearest to the count quantiles."""
    m = prefix[-1]
    cuts = [0]
    for k in range(1, n_th):
        target = k * m / n_th
        j = bisect.bisect_left(prefix, target)
        if j > 0 and (j == len(prefix) or target - prefix[j - 1] <= prefix[j] - target):
            j -= 1
        cuts.append(max(j, cuts[-1]))
    cuts.append(len(prefix) - 1)
    return cuts


def _spread(prefix: list[int], cuts: list[int]) -> int:
    counts = [prefix[b] - prefix[a] for a, b in zip(cuts, cuts[1:])]
    return max(counts) - min(counts)


def _balanced_cuts(prefix: list[int], n_th: int, width: int) -> list[int] | None:
    """Cuts whose range counts all lie in ``[low, low + width]`` for some ``low``.

    ``low`` is tried from the value nearest the ideal share outward.  A
    reachability table over (range index, cut position) decides each
    candidate; ranges are then rebuilt backwards, preferring cuts nearest
    the quantile targets.
    """
    m = prefix[-1]
    size = len(prefix)
    share = m / n_th
    lows = range(max(0, int(share) - width), int(share) + 1)
    for low in sorted(lows, key=lambda x: abs(x + width / 2 - share)):
        high = low + width
        reach = [[False] * size for _ in range(n_th + 1)]
        reach[0][0] = True
        for k in range(1, n_th + 1):
            prev = reach[k - 1]
            seen = list(accumulate(prev, initial=0))
            row = reach[k]
            for j in range(size):
                # predecessors i with prefix[j] - high <= prefix[i] <= prefix[j] - low
                lo_i = bisect.bisect_left(prefix, prefix[j] - high)
                hi_i = bisect.bisect_right(prefix, prefix[j] - low)
                hi_i = min(hi_i, j + 1)
                if lo_i < hi_i and seen[hi_i] - seen[lo_i] > 0:
                    row[j] = True
        if not reach[n_th][size - 1]:
            continue
        cuts = [size - 1]
        for k in range(n_th, 0, -1):
            j = cuts[-1]
            target = (k - 1) * m / n_th
            options = [
                i for i in range(j + 1)
                if reach[k - 1][i] and low <= prefix[j] - prefix[i] <= high
            ]
            cuts.append(min(options, key=lambda i: (abs(prefix[i] - target), i)))
        return cuts[::-1]
    return None


def split_intervals(stream: LinkStream, n_th: int) -> SplitPlan:
    """Split begin times into ``n_th`` ranges holding about ``m / n_th`` starting links.

    Boundaries sit at the quantiles of the begin-sorted links, moved to the
    nearest instant boundary so no instant is split.  When that leaves a
    count spread larger than the biggest single-instant burst, the cuts are
    recomputed to bring the spread within the burst.
    """
    if n_th < 1:
        raise ValueError(f"need at least one range, got {n_th}")
    instants, sizes = _instant_bursts(stream)
    if not instants:
        return SplitPlan([0] * (n_th + 1), [0] * n_th, 0)
    prefix = [0, *accumulate(sizes)]
    burst = max(sizes)
    cuts = _nearest_cuts(prefix, n_th)
    if _spread(prefix, cuts) > burst:
        cuts = _balanced_cuts(prefix, n_th, burst) or cuts
    edges = [*instants, instants[-1] + 1]
    boundaries = [edges[c] for c in cuts]
    counts = [prefix[b] - prefix[a] for a, b in zip(cuts, cuts[1:])]
    return SplitPlan(boundaries, counts, burst)


@dataclass
class ParallelResult:
    cliques: list[TimedClique]
    counters: EnumCounters
    plan: SplitPlan
    worker_times: list[float] = field(default_factory=list)


_SHARED: LinkStream | None = None


def _install(stream: LinkStream) -> None:
    global _SHARED
    _SHARED = stream


def _worker(begin_range: tuple[int, int], pivot: bool, stream: LinkStream | None = None):
    stream = stream if stream is not None else _SHARED
    start = time.perf_counter()
    cliques, counters = enumerate_maximal_cliques(stream, pivot=pivot, begin_range=begin_range)
    return cliques, counters, time.perf_counter() - start


def parallel_enumerate(
    stream: LinkStream,
    n_th: int,
    *,
    pivot: bool = True,
    executor: Executor | None = None,
) -> ParallelResult:
    """Enumerate with one worker per range and merge in range order.

    Without an ``executor`` a process pool of ``n_th`` workers is created
    (``n_th == 1`` runs inline).  A caller-supplied executor receives the
    stream with every task.
    """
    plan = split_intervals(stream, n_th)
    jobs = [r for r, count in zip(plan.ranges(), plan.counts) if count]
    if executor is not None:
        futures = [executor.submit(_worker, r, pivot, stream) for r in jobs]
        results = [f.result() for f in futures]
    elif n_th == 1 or len(jobs) <= 1:
        results = [_worker(r, pivot, stream) for r in jobs]
    else:
        workers = min(len(jobs), os.cpu_count() or 1, n_th)
        with ProcessPoolExecutor(max_workers=workers, initializer=_install, initargs=(stream,)) as pool:
            futures = [pool.submit(_worker, r, pivot) for r in jobs]
            results = [f.result() for f in futures]

    cliques: list[TimedClique] = []
    for part, _, _ in results:
        cliques.extend(part)
    counters = EnumCounters.merge(c for _, c, _ in results)
    if not results:
        counters = EnumCounters(n_vertices=stream.n, n_links=stream.m)
    worker_times = [w for _, _, w in results]
    counters.wall_time = max(worker_times, default=0.0)
    return ParallelResult(cliques, counters, plan, worker_times)
