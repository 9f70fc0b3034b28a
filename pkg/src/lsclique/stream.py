"""Link stream ingestion: parsing, overlap merging and vertex interning.

A link ``(b, e, u, v)`` means ``u`` and ``v`` interact during the closed
interval ``[b, e]``.  Streams are undirected and simple once normalized: no
self-loops, and the links of any vertex pair have pairwise disjoint,
non-touching intervals.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

MAX_TIME = 2**63 - 1

FORMATS = ("interval", "instantaneous")


class StreamError(ValueError):
    """Invalid stream input, optionally tied to a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class Link(NamedTuple):
    begin: int
    end: int
    u: int
    v: int


@dataclass(frozen=True)
class StreamConfig:
    input_format: str = "interval"
    delta: int = 0

    def __post_init__(self) -> None:
        if self.input_format not in FORMATS:
            raise StreamError(f"unknown input format {self.input_format!r}")
        if not 0 <= self.delta <= MAX_TIME:
            raise StreamError(f"delta must be a non-negative 63-bit integer, got {self.delta}")


class VertexTable:
    """Bidirectional label <-> dense id mapping, ids in first-appearance order."""

    def __init__(self, labels: Iterable[str] = ()):
        self._labels: list[str] = []
        self._ids: dict[str, int] = {}
        for label in labels:
            self.intern(label)

    def intern(self, label: str) -> int:
        vid = self._ids.get(label)
        if vid is None:
            vid = self._ids[label] = len(self._labels)
            self._labels.append(label)
        return vid

    def id(self, label: str) -> int:
        return self._ids[label]

    def label(self, vid: int) -> str:
        return self._labels[vid]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label: object) -> bool:
        return label in self._ids

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VertexTable) and self._labels == other._labels

    def __repr__(self) -> str:
        return f"VertexTable({self._labels!r})"


@dataclass(frozen=True, eq=False)
class LinkStream:
    """Normalized stream: links sorted by ``(begin, u, v)`` with ``u < v``."""

    links: tuple[Link, ...]
    vertices: VertexTable = field(default_factory=VertexTable)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.links)

    @property
    def horizon(self) -> tuple[int, int] | None:
        if not self.links:
            return None
        return self.links[0].begin, max(link.end for link in self.links)

    def begin_times(self) -> list[int]:
        """Distinct begin instants, ascending."""
        return sorted({link.begin for link in self.links})

    def labeled_links(self) -> list[tuple[int, int, str, str]]:
        """Links with labels instead of ids, in a label-independent canonical order."""
        out = []
        for b, e, u, v in self.links:
            lu, lv = self.vertices.label(u), self.vertices.label(v)
            if lv < lu:
                lu, lv = lv, lu
            out.append((b, e, lu, lv))
        out.sort()
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinkStream):
            return NotImplemented
        return self.labeled_links() == other.labeled_links()

    def __repr__(self) -> str:
        return f"LinkStream(n={self.n}, m={self.m}, horizon={self.horizon})"


def _parse_time(token: str, lineno: int) -> int:
    if not token.isdigit():
        raise StreamError(f"invalid timestamp {token!r}", lineno)
    value = int(token)
    if value > MAX_TIME:
        raise StreamError(f"timestamp {token} exceeds 63 bits", lineno)
    return value


def parse_links(
    text: str | bytes, config: StreamConfig, vertices: VertexTable | None = None
) -> tuple[list[Link], VertexTable]:
    """Parse raw links, one per data line; no merging is done here.

    Interval lines are ``b e u v``, instantaneous lines ``t u v`` (expanded to
    ``(t, t + delta, u, v)``).  Lines starting with ``#`` and blank lines are
    skipped.  Labels are interned into ``vertices`` (a fresh table if omitted).
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if vertices is None:
        vertices = VertexTable()
    interval = config.input_format == "interval"
    ntok = 4 if interval else 3
    delta = config.delta
    links: list[Link] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != ntok:
            raise StreamError(f"expected {ntok} tokens, got {len(tokens)}", lineno)
        if interval:
            b = _parse_time(tokens[0], lineno)
            e = _parse_time(tokens[1], lineno)
            if e < b:
                raise StreamError(f"end {e} before begin {b}", lineno)
        else:
            b = _parse_time(tokens[0], lineno)
            if b > MAX_TIME - delta:
                raise StreamError(f"timestamp {b} + delta {delta} overflows 63 bits", lineno)
            e = b + delta
        lu, lv = tokens[-2], tokens[-1]
        if lu == lv:
            raise StreamError(f"self-loop on {lu!r}", lineno)
        u, v = vertices.intern(lu), vertices.intern(lv)
        if v < u:
            u, v = v, u
        links.append(Link(b, e, u, v))
    return links, vertices


def normalize(raw: Iterable[Link], vertices: VertexTable | None = None) -> LinkStream:
    """Merge overlapping or touching links of each pair and sort the result.

    Two links of the same pair whose closed intervals share at least one
    instant are replaced by the link spanning their union, repeatedly, until
    the stream is simple.
    """
    by_pair: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
    max_id = -1
    for b, e, u, v in raw:
        if u == v:
            raise StreamError(f"self-loop on vertex {u}")
        if e < b:
            raise StreamError(f"end {e} before begin {b}")
        if v < u:
            u, v = v, u
        by_pair[u, v].append((b, e))
        max_id = max(max_id, v)

    merged: list[Link] = []
    for (u, v), spans in by_pair.items():
        spans.sort()
        cur_b, cur_e = spans[0]
        for b, e in spans[1:]:
            if b <= cur_e:
                cur_e = max(cur_e, e)
            else:
                merged.append(Link(cur_b, cur_e, u, v))
                cur_b, cur_e = b, e
        merged.append(Link(cur_b, cur_e, u, v))
    merged.sort(key=lambda link: (link.begin, link.u, link.v))

    if vertices is None:
        vertices = VertexTable(str(i) for i in range(max_id + 1))
    elif max_id >= len(vertices):
        raise StreamError(f"vertex id {max_id} missing from the vertex table")
    return LinkStream(tuple(merged), vertices)


def read_stream(text: str | bytes, config: StreamConfig) -> LinkStream:
    links, vertices = parse_links(text, config)
    return normalize(links, vertices)


def load_stream(path: str, config: StreamConfig) -> LinkStream:
    with open(path, "rb") as fh:
        return read_stream(fh.read(), config)


def serialize(stream: LinkStream) -> str:
    """Interval-format text, one ``b e u v`` line per link in stream order."""
    label = stream.vertices.label
    return "".join(f"{b} {e} {label(u)} {label(v)}\n" for b, e, u, v in stream.links)


def stream_from_tuples(
    links: Iterable[tuple[int, int, str, str]],
) -> LinkStream:
    """Build a normalized stream from labeled ``(b, e, u, v)`` tuples."""
    vertices = VertexTable()
    raw = []
    for b, e, lu, lv in links:
        if lu == lv:
            raise StreamError(f"self-loop on {lu!r}")
        u, v = vertices.intern(lu), vertices.intern(lv)
        raw.append(Link(b, e, min(u, v), max(u, v)))
    return normalize(raw, vertices)
