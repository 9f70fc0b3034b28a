"""Command-line front end.

    lsclique INPUT --format {interval,instantaneous} [options]
    lsclique bench DATASET [--delta D ...] [--file PATH]

Exit status: 0 on success, 2 on input or flag errors, 1 on internal failure
or an oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import TextIO

from .datasets import DATASETS, DatasetUnavailable, locate, to_instantaneous
from .enumerate import EnumCounters, TimedClique, run_enumeration
from .oracle import OracleSizeError, check_size, oracle_enumerate
from .parallel import parallel_enumerate
from .stream import LinkStream, StreamConfig, StreamError, read_stream

EXIT_OK, EXIT_FAILURE, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def format_clique(stream: LinkStream, clique: TimedClique) -> str:
    # str order is code point order, which matches bytewise order of the UTF-8 labels
    t0, t1, labels = clique.labeled(stream)
    return f"{t0} {t1} {' '.join(labels)}\n"


def parse_output(text: str) -> set[tuple[int, int, tuple[str, ...]]]:
    """Read back clique lines written by the tool."""
    out = set()
    for line in text.splitlines():
        if line.strip():
            t0, t1, *members = line.split()
            out.add((int(t0), int(t1), tuple(members)))
    return out


def _enum_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lsclique", description="Enumerate maximal cliques of a link stream.")
    p.add_argument("input", help="link stream file")
    p.add_argument("--format", required=True, choices=["interval", "instantaneous"])
    p.add_argument("--delta", type=int, default=None, help="duration given to instantaneous links")
    p.add_argument("--no-pivot", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--sorted", action="store_true", help="canonical (t0, t1, members) order")
    p.add_argument("--stats", metavar="FILE", help="write counters as JSON")
    p.add_argument("-o", "--output", metavar="FILE", help="clique output (default stdout)")
    p.add_argument("--oracle", action="store_true", help="use the brute-force enumerator")
    p.add_argument("--check", action="store_true", help="compare against the brute-force enumerator")
    p.add_argument("--force", action="store_true", help="allow the oracle on large streams")
    return p


def _bench_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lsclique bench", description="Reproduce dataset statistics.")
    p.add_argument("dataset", choices=sorted(DATASETS))
    p.add_argument("--delta", type=int, nargs="+", default=[0, 125, 3125])
    p.add_argument("--file", help="raw contact list to use instead of the cache")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--no-pivot", action="store_true")
    p.add_argument("--json", action="store_true", help="one JSON object per delta")
    return p


def _stats_payload(counters: EnumCounters, worker_times: list[float]) -> dict:
    payload = counters.as_dict()
    payload["worker_wall_times"] = worker_times
    return payload


def _run_enum(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    if args.delta is not None and args.format == "interval":
        raise UsageError("--delta only applies to --format instantaneous")
    if args.oracle and args.check:
        raise UsageError("--oracle and --check are exclusive")
    config = StreamConfig(args.format, args.delta or 0)
    try:
        with open(args.input, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise StreamError(f"cannot read {args.input}: {exc.strerror}") from exc
    stream = read_stream(data, config)
    if (args.oracle or args.check) and not args.force:
        check_size(stream)

    sink_file = open(args.output, "w", encoding="utf-8") if args.output else out
    try:
        if args.oracle:
            start = time.perf_counter()
            cliques = sorted(oracle_enumerate(stream, force=True))
            for c in cliques:
                sink_file.write(format_clique(stream, c))
            counters = EnumCounters(stream.n, stream.m, maximal_cliques=len(cliques))
            counters.max_clique_size = max((len(c.members) for c in cliques), default=0)
            counters.wall_time = time.perf_counter() - start
            worker_times = [counters.wall_time]
        elif args.threads == 1 and not args.sorted and not args.check:
            counters = run_enumeration(
                stream, lambda c: sink_file.write(format_clique(stream, c)), pivot=not args.no_pivot
            )
            worker_times = [counters.wall_time]
        else:
            result = parallel_enumerate(stream, args.threads, pivot=not args.no_pivot)
            cliques = sorted(result.cliques) if args.sorted else result.cliques
            for c in cliques:
                sink_file.write(format_clique(stream, c))
            counters, worker_times = result.counters, result.worker_times
    finally:
        if sink_file is not out:
            sink_file.close()

    if args.stats:
        with open(args.stats, "w", encoding="utf-8") as fh:
            json.dump(_stats_payload(counters, worker_times), fh, indent=2)
            fh.write("\n")

    if args.check:
        expected = oracle_enumerate(stream, force=True)
        got = set(cliques)
        if got != expected or len(got) != len(cliques):
            missing, extra = len(expected - got), len(got - expected)
            dupes = len(cliques) - len(got)
            err.write(f"oracle mismatch: {missing} missing, {extra} extra, {dupes} duplicated\n")
            return EXIT_FAILURE
        err.write(f"oracle match: {len(expected)} cliques\n")
    return EXIT_OK


def _run_bench(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    ds = DATASETS[args.dataset]
    try:
        path = args.file or locate(args.dataset)
    except DatasetUnavailable as exc:
        err.write(f"{exc}\n")
        return EXIT_INPUT
    with open(path, encoding="utf-8") as fh:
        text = to_instantaneous(fh.read())
    all_match = True
    if not args.json:
        out.write(f"{'dataset':<14}{'delta':>6}{'m':>8}{'d':>6}{'alpha':>8}{'q':>4}  reference         match  time\n")
    for delta in args.delta:
        stream = read_stream(text, StreamConfig("instantaneous", delta))
        result = parallel_enumerate(stream, args.threads, pivot=not args.no_pivot)
        c = result.counters
        got = (stream.m, c.max_degree, c.maximal_cliques, c.max_clique_size)
        ref = ds.reference.get(delta)
        match = None if ref is None else got == ref
        all_match &= match is not False
        if args.json:
            row = {"dataset": ds.name, "delta": delta, **c.as_dict(), "reference": ref, "match": match}
            out.write(json.dumps(row) + "\n")
        else:
            ref_txt = "-" if ref is None else "/".join(map(str, ref))
            flag = "-" if match is None else ("yes" if match else "NO")
            out.write(
                f"{ds.name:<14}{delta:>6}{got[0]:>8}{got[1]:>6}{got[2]:>8}{got[3]:>4}  "
                f"{ref_txt:<17} {flag:>5}  {c.wall_time:.2f}s\n"
            )
    return EXIT_OK if all_match else EXIT_FAILURE


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        if argv and argv[0] == "bench":
            return _run_bench(_bench_parser().parse_args(argv[1:]), out, err)
        return _run_enum(_enum_parser().parse_args(argv), out, err)
    except (UsageError, StreamError, OracleSizeError) as exc:
        err.write(f"lsclique: {exc}\n")
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - last-resort exit status
        err.write(f"lsclique: internal error: {exc!r}\n")
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())
