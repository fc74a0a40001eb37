"""Count triangulations of C(m, 2d) by enumerating e-sets.

    python3 scripts/count_triangulations.py --max-m 11 --threads 4
"""
import argparse
import time
from dataclasses import dataclass

from cyclic_tilt.combinatorics import Params
from cyclic_tilt.triangulation import DEFAULT_BUDGET, enumerate_facesets


@dataclass
class CountConfig:
    dims: tuple = (1, 2, 3)
    max_m: int = 10
    threads: int = 1
    budget: int = DEFAULT_BUDGET


def count_table(cfg):
    rows = []
    for d in cfg.dims:
        for m in range(2 * d + 1, cfg.max_m + 1):
            start = time.perf_counter()
            n = len(enumerate_facesets(Params(m, d), cfg.budget, cfg.threads))
            rows.append((d, m, n, time.perf_counter() - start))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--max-m", type=int, default=10)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    args = ap.parse_args()
    cfg = CountConfig(tuple(args.dims), args.max_m, args.threads, args.budget)
    print(f"{'d':>2} {'m':>3} {'count':>10} {'seconds':>9}")
    for d, m, n, secs in count_table(cfg):
        print(f"{d:>2} {m:>3} {n:>10} {secs:>9.2f}")


if __name__ == "__main__":
    main()
