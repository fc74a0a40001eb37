"""Summarize the complexes of non-crossing interior tuples.

For each (n, d) prints the vertex count, f-vector, Euler characteristic,
clique-complex verdict and the number of maximal non-crossing sets that
are smaller than a facet.

    python3 scripts/complex_scan.py --n 2 --dims 1 2 3 4
"""
import argparse
from dataclasses import dataclass, field

from cyclic_tilt.complex import (
    build_complex,
    euler_characteristic,
    f_vector,
    find_nonextendable,
    is_clique_complex,
)
from cyclic_tilt.serialize import tuple_label


@dataclass
class ScanConfig:
    n: int = 2
    dims: list = field(default_factory=lambda: [1, 2, 3, 4])


def scan(cfg):
    for d in cfg.dims:
        c = build_complex(cfg.n, d)
        yield {
            "n": cfg.n,
            "d": d,
            "vertices": len(c.vertices),
            "f": f_vector(c),
            "chi": euler_characteristic(c),
            "clique": is_clique_complex(c),
            "nonextendable": find_nonextendable(cfg.n, d),
        }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--dims", type=int, nargs="+", default=[1, 2, 3, 4])
    ap.add_argument("--show-sets", action="store_true")
    args = ap.parse_args()
    for row in scan(ScanConfig(args.n, args.dims)):
        print(
            f"n={row['n']} d={row['d']} vertices={row['vertices']} f={row['f']} "
            f"chi={row['chi']} clique={row['clique']} nonextendable={len(row['nonextendable'])}"
        )
        if args.show_sets:
            for s in row["nonextendable"]:
                print("   ", " ".join(tuple_label(t) for t in s))


if __name__ == "__main__":
    main()
