"""Count objects, morphisms and stable morphisms of each instance by carrier size.

    python scripts/census.py --max-n 3
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from stabcat.category import homs
from stabcat.endo import EndoTheory
from stabcat.preord import PreordTheory
from stabcat.stable import StableCategory, all_partials


@dataclass(frozen=True)
class CensusConfig:
    max_n: int = 3


def census(theory, cfg: CensusConfig) -> list[str]:
    S = StableCategory(theory)
    lines = [f"{theory.name}:", "  n  objects  torsion  free  trivial  morphisms  partials  stable"]
    for n in range(cfg.max_n + 1):
        objs = [X for X in theory.objects(cfg.max_n) if X.n == n]
        everyone = theory.objects(cfg.max_n)
        mors = sum(len(homs(X, Y)) for X in objs for Y in everyone)
        parts = sum(sum(1 for _ in all_partials(X, Y)) for X in objs for Y in everyone)
        stable = sum(len(S.homs(X, Y)) for X in objs for Y in everyone)
        lines.append(f"  {n}  {len(objs):>7}  {sum(map(theory.is_torsion, objs)):>7}  "
                     f"{sum(map(theory.is_torsionfree, objs)):>4}  {sum(map(theory.is_trivial_obj, objs)):>7}  "
                     f"{mors:>9}  {parts:>8}  {stable:>6}")
    return lines


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=3)
    cfg = CensusConfig(ap.parse_args().max_n)
    print("Morphism columns count maps out of objects of size n into every object of size <= max-n.")
    for th in (PreordTheory(), EndoTheory()):
        print("\n".join(census(th, cfg)))


if __name__ == "__main__":
    main()
