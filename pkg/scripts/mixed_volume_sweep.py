"""Mixed volumes of random lattice polygon pairs by cup product and by polarization (CSV)."""

import argparse
import sys
from dataclasses import dataclass

from polycup import fixtures
from polycup import linalg as la
from polycup.geometry import mixed_volume, mixed_volume_by_polarization


@dataclass
class Config:
    count: int = 20
    seed: int = 0


def main(cfg: Config) -> int:
    print("pair,n_vertices_a,n_vertices_b,cup,polarization,v")
    bad = 0
    for k in range(cfg.count):
        A = fixtures.random_lattice_polygon(cfg.seed + 2 * k)
        B = fixtures.random_lattice_polygon(cfg.seed + 2 * k + 1)
        val, v = mixed_volume([A, B], seed=k)
        pol = mixed_volume_by_polarization(A, B)
        bad += val != pol
        print(f"{k},{len(A)},{len(B)},{la.fmt(val)},{la.fmt(pol)},\"{','.join(la.fmt(x) for x in v)}\"")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    sys.exit(main(Config(a.count, a.seed)))
