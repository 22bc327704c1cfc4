"""Tabulate a Stab fragment and write it with DOT drawings of a few objects.

    python scripts/export_fragment.py --category endo --max-n 2 --out-dir fragment/

Writes ``stab.txt`` (a tt-category document readable by ``stabcat universal
--target``) and one ``.dot`` file per object and canonical sequence.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from stabcat import docfmt
from stabcat.dot import object_dot, sequence_dot
from stabcat.endo import EndoTheory
from stabcat.preord import PreordTheory
from stabcat.pretorsion import canonical_sequence
from stabcat.stable import StableCategory
from stabcat.universality import tabulate_stab


@dataclass(frozen=True)
class ExportConfig:
    category: str = "endo"
    max_n: int = 2
    out_dir: Path = Path("fragment")


def export(cfg: ExportConfig) -> None:
    theory = PreordTheory() if cfg.category == "preord" else EndoTheory()
    S = StableCategory(theory)
    objs = theory.objects(cfg.max_n)
    stab = tabulate_stab(S, objs)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    docfmt.dump(docfmt.as_document(stab.bare()), cfg.out_dir / "stab.txt")
    for i, X in enumerate(objs):
        (cfg.out_dir / f"object{i}.dot").write_text(object_dot(X, f"object{i}"))
        (cfg.out_dir / f"sequence{i}.dot").write_text(sequence_dot(canonical_sequence(X, theory)))
    with open(cfg.out_dir / "index.txt", "w") as fh:
        for i, X in enumerate(objs):
            fh.write(f"{i}\t{X!r}\n")
    print(f"{len(objs)} objects, {len(stab.dom)} stable morphisms, {len(stab.comp)} composites -> {cfg.out_dir}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--category", choices=("preord", "endo"), default="endo")
    ap.add_argument("--max-n", type=int, default=2)
    ap.add_argument("--out-dir", type=Path, default=Path("fragment"))
    args = ap.parse_args()
    export(ExportConfig(args.category, args.max_n, args.out_dir))


if __name__ == "__main__":
    main()
