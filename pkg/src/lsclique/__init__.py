"""Maximal clique enumeration in link streams."""

from .enumerate import (
    EnumCounters,
    TimedClique,
    enumerate_maximal_cliques,
    run_enumeration,
)
from .oracle import certify, oracle_enumerate
from .parallel import parallel_enumerate, split_intervals
from .stream import (
    Link,
    LinkStream,
    StreamConfig,
    StreamError,
    load_stream,
    normalize,
    parse_links,
    read_stream,
    serialize,
    stream_from_tuples,
)

__all__ = [
    "EnumCounters",
    "Link",
    "LinkStream",
    "StreamConfig",
    "StreamError",
    "TimedClique",
    "certify",
    "enumerate_maximal_cliques",
    "load_stream",
    "normalize",
    "oracle_enumerate",
    "parallel_enumerate",
    "parse_links",
    "read_stream",
    "run_enumeration",
    "serialize",
    "split_intervals",
    "stream_from_tuples",
]
