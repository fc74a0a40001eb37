"""Scan all intertwining interior pairs for degenerate exchange angles.

An angle is degenerate when all its middle layers are empty.  The scan
reports how many such pairs exist and whether each one is related by
the suspension permutation.

    python3 scripts/degenerate_angle_scan.py --max-m 9 --dims 1 2 3
"""
import argparse
import itertools
from dataclasses import dataclass

from cyclic_tilt.cluster import ClusterObject, exchange_angles
from cyclic_tilt.combinatorics import Params, enumerate_index_set, intertwines, suspend, unsuspend


@dataclass
class AngleScanConfig:
    dims: tuple = (1, 2, 3)
    max_m: int = 9


def scan(cfg):
    for d in cfg.dims:
        for m in range(2 * d + 2, cfg.max_m + 1):
            n = m - 2 * d - 1
            inner = enumerate_index_set(Params(m, d), interior_only=True)
            row = {"d": d, "m": m, "pairs": 0, "e_empty": 0, "f_empty": 0, "unexplained": 0}
            for a, b in itertools.permutations(inner, 2):
                if not intertwines(a, b):
                    continue
                ang = exchange_angles(ClusterObject(n, d, a), ClusterObject(n, d, b))
                row["pairs"] += 1
                if ang.e_empty():
                    row["e_empty"] += 1
                    row["unexplained"] += b != suspend(a, m)
                if ang.f_empty():
                    row["f_empty"] += 1
                    row["unexplained"] += b != unsuspend(a, m)
            yield row


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--max-m", type=int, default=9)
    args = ap.parse_args()
    for row in scan(AngleScanConfig(tuple(args.dims), args.max_m)):
        print(" ".join(f"{k}={v}" for k, v in row.items()))


if __name__ == "__main__":
    main()
