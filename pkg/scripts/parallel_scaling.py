"""Wall time and split balance of the parallel driver for several worker counts."""

import argparse
import time
from dataclasses import dataclass, field

from lsclique.datasets import DATASETS, locate, to_instantaneous
from lsclique.enumerate import enumerate_maximal_cliques
from lsclique.parallel import parallel_enumerate
from lsclique.stream import StreamConfig, read_stream


@dataclass
class ScalingConfig:
    dataset: str = "highschool12"
    delta: int = 125
    workers: list[int] = field(default_factory=lambda: [1, 2, 4, 8])


def main(cfg: ScalingConfig) -> None:
    text = to_instantaneous(locate(cfg.dataset).read_text(encoding="utf-8"))
    stream = read_stream(text, StreamConfig("instantaneous", cfg.delta))
    start = time.perf_counter()
    seq, _ = enumerate_maximal_cliques(stream)
    base = time.perf_counter() - start
    print(f"{cfg.dataset} delta={cfg.delta}: m={stream.m}, sequential {base:.2f}s, {len(seq)} cliques")
    print(f"{'workers':>8}{'wall':>8}{'speedup':>9}{'slowest':>9}  links per range")
    for n_th in cfg.workers:
        start = time.perf_counter()
        result = parallel_enumerate(stream, n_th)
        wall = time.perf_counter() - start
        assert set(result.cliques) == set(seq)
        slowest = max(result.worker_times, default=0.0)
        print(f"{n_th:>8}{wall:>8.2f}{base / wall:>9.2f}{slowest:>9.2f}  {result.plan.counts}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("dataset", nargs="?", default="highschool12", choices=list(DATASETS))
    p.add_argument("--delta", type=int, default=125)
    p.add_argument("--workers", type=int, nargs="+", default=[1, 2, 4, 8])
    a = p.parse_args()
    main(ScalingConfig(a.dataset, a.delta, a.workers))
