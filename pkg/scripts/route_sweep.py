"""Time the four routes to paracoherent extensions on random frameworks and
confirm they agree.

Routes: direct minimal-stabilizer search, stable extensions of the guarded
shadow framework, semi-equilibrium models of P_F, and externally supported
models of P_F.

    python scripts/route_sweep.py --sizes 4 6 8 10 --per-size 20 --p 0.25
"""

import argparse
import time
from collections import defaultdict
from dataclasses import dataclass, field

from paraf import (
    af_to_program,
    gen_random,
    mes_models,
    paracoherent_extensions,
    paracoherent_via_shadow,
    seq_models,
    to_extensions,
)


@dataclass
class Config:
    sizes: list[int] = field(default_factory=lambda: [4, 6, 8, 10])
    per_size: int = 20
    p: float = 0.25
    seed: int = 0


ROUTES = {
    "direct": paracoherent_extensions,
    "shadow": paracoherent_via_shadow,
    "seq": lambda f: to_extensions(f, seq_models(af_to_program(f))),
    "mes": lambda f: to_extensions(f, mes_models(af_to_program(f))),
}


def main(cfg: Config) -> int:
    disagreements = 0
    print(f"{'n':>3} " + " ".join(f"{r:>9}" for r in ROUTES) + "   (mean seconds)")
    for n in cfg.sizes:
        spent = defaultdict(float)
        for i in range(cfg.per_size):
            f = gen_random(n, cfg.p, cfg.seed * 100_000 + n * 1000 + i)
            results = {}
            for name, route in ROUTES.items():
                start = time.perf_counter()
                results[name] = route(f)
                spent[name] += time.perf_counter() - start
            if len(set(results.values())) != 1:
                disagreements += 1
                print(f"  routes disagree on n={n} instance {i}")
        print(f"{n:>3} " + " ".join(f"{spent[r] / cfg.per_size:>9.4f}" for r in ROUTES))
    print(f"{disagreements} disagreement(s)")
    return 1 if disagreements else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 6, 8, 10])
    ap.add_argument("--per-size", type=int, default=20)
    ap.add_argument("--p", type=float, default=0.25)
    ap.add_argument("--seed", type=int, default=0)
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
