"""Acceptance of the centre argument ``c`` across radial stars.

Prints, for each n, the number of extensions and whether ``c`` is
credulously / skeptically accepted under stb, sem, stage and para.

    python scripts/radial_star.py --min 3 --max 9
"""

import argparse
import time
from dataclasses import dataclass

from paraf import Semantics, gen_radial_star, radial_star_family, solve

SEMANTICS = (Semantics.STB, Semantics.SEM, Semantics.STAGE, Semantics.PARA)


@dataclass
class Config:
    n_min: int = 3
    n_max: int = 8


def row(n: int) -> str:
    f = gen_radial_star(n)
    cells = []
    for sem in SEMANTICS:
        found = solve(f, sem)
        cred = any("c" in e for e in found)
        skep = bool(found) and all("c" in e for e in found)
        cells.append(f"{len(found):>3} {'C' if cred else '-'}{'S' if skep else '-'}")
    closed = ""
    if n % 2:
        direct = solve(f, Semantics.PARA).as_sets()
        closed = "closed form ok" if direct == set(radial_star_family(n)) else "closed form MISMATCH"
    return f"{n:>3} | " + " | ".join(cells) + f" | {closed}"


def main(cfg: Config) -> None:
    header = " n  | " + " | ".join(f"{s.value:>6}" for s in SEMANTICS)
    print(header)
    print("-" * len(header))
    for n in range(cfg.n_min, cfg.n_max + 1):
        start = time.perf_counter()
        line = row(n)
        print(f"{line}  ({time.perf_counter() - start:.2f}s)")
    print("\ncells: <#extensions> <C if c is credulous><S if c is skeptical>")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--min", type=int, default=3, dest="n_min")
    ap.add_argument("--max", type=int, default=8, dest="n_max")
    main(Config(**vars(ap.parse_args())))
