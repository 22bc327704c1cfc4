"""How often random parallel partial morphisms are congruent, and how the greedy decision fares.

    python scripts/congruence_rates.py --pairs 500 --seeds 0 1 2
"""
from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass, field

from stabcat.endo import EndoTheory
from stabcat.preord import PreordTheory
from stabcat.sampling import random_parallel_pair
from stabcat.stable import StableCategory


@dataclass(frozen=True)
class RatesConfig:
    pairs: int = 500
    seeds: tuple[int, ...] = (0,)
    max_src: int = 6
    max_dst: int = 4


@dataclass
class Tally:
    congruent: int = 0
    disagreements: int = 0
    greedy_s: float = 0.0
    exhaustive_s: float = 0.0
    zero_zero: int = 0
    sizes: list[int] = field(default_factory=list)


def measure(theory, seed: int, cfg: RatesConfig) -> Tally:
    S, rng, t = StableCategory(theory), random.Random(seed), Tally()
    for _ in range(cfg.pairs):
        p1, p2 = random_parallel_pair(theory, rng, cfg.max_src, cfg.max_dst)
        a = time.perf_counter()
        fast, _ = S.eq(p1, p2)
        b = time.perf_counter()
        slow = S.eq_exhaustive(p1, p2)
        c = time.perf_counter()
        t.greedy_s += b - a
        t.exhaustive_s += c - b
        t.congruent += slow
        t.disagreements += fast != slow
        t.zero_zero += S.reduce(p1).is_zero() and S.reduce(p2).is_zero()
        t.sizes.append(p1.src.n)
    return t


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=500)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    args = ap.parse_args()
    cfg = RatesConfig(args.pairs, tuple(args.seeds))
    print("instance  seed  congruent  both-zero  disagreements  mean-src  greedy-ms  exhaustive-ms")
    for th in (PreordTheory(), EndoTheory()):
        for seed in cfg.seeds:
            t = measure(th, seed, cfg)
            print(f"{th.name:<8}  {seed:>4}  {t.congruent:>9}  {t.zero_zero:>9}  {t.disagreements:>13}  "
                  f"{sum(t.sizes) / len(t.sizes):>8.2f}  {1000 * t.greedy_s:>9.1f}  {1000 * t.exhaustive_s:>13.1f}")


if __name__ == "__main__":
    main()
