"""Leaf counts with and without the pivot on complete streams and on random streams."""

import argparse
import random
from dataclasses import dataclass
from itertools import combinations

from lsclique.enumerate import enumerate_maximal_cliques
from lsclique.stream import Link, normalize, stream_from_tuples


@dataclass
class PivotConfig:
    q_min: int = 3
    q_max: int = 12
    random_seeds: int = 100
    n_max: int = 12
    m_max: int = 120


def complete(q: int):
    return stream_from_tuples([(0, 10, u, v) for u, v in combinations(range(q), 2)])


def random_contacts(seed: int, n_max: int, m_max: int):
    rng = random.Random(seed)
    n, m, delta = rng.randint(2, n_max), rng.randint(1, m_max), rng.randint(0, 5)
    raw = []
    for _ in range(m):
        u, v = sorted(rng.sample(range(n), 2))
        t = rng.randint(0, 40)
        raw.append(Link(t, t + delta, u, v))
    return normalize(raw)


def main(cfg: PivotConfig) -> None:
    print("complete streams on one interval")
    print(f"{'q':>3}{'leaves':>9}{'pivot':>7}{'2^(q-1)-1':>11}{'ratio':>8}{'alpha_T':>9}{'pivot':>7}")
    for q in range(cfg.q_min, cfg.q_max + 1):
        stream = complete(q)
        _, plain = enumerate_maximal_cliques(stream, pivot=False)
        _, piv = enumerate_maximal_cliques(stream, pivot=True)
        print(
            f"{q:>3}{plain.leaves:>9}{piv.leaves:>7}{2 ** (q - 1) - 1:>11}"
            f"{plain.leaves / piv.leaves:>8.1f}{plain.time_maximal_cliques:>9}{piv.time_maximal_cliques:>7}"
        )

    plain_r, piv_r, plain_t, piv_t = [], [], 0, 0
    for seed in range(cfg.random_seeds):
        stream = random_contacts(seed, cfg.n_max, cfg.m_max)
        _, plain = enumerate_maximal_cliques(stream, pivot=False)
        _, piv = enumerate_maximal_cliques(stream, pivot=True)
        plain_r.append(plain.leaf_ratio)
        piv_r.append(piv.leaf_ratio)
        plain_t += plain.time_maximal_cliques
        piv_t += piv.time_maximal_cliques
    print(f"\nrandom streams ({cfg.random_seeds} seeds)")
    print(f"mean r without pivot {sum(plain_r) / len(plain_r):.3f}, with pivot {sum(piv_r) / len(piv_r):.3f}")
    print(f"total alpha_T without pivot {plain_t}, with pivot {piv_t}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--q-max", type=int, default=12)
    p.add_argument("--seeds", type=int, default=100)
    a = p.parse_args()
    main(PivotConfig(q_max=a.q_max, random_seeds=a.seeds))
