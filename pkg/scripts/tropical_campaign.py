"""Randomized check of the tropical exchange relation on laminations.

Each worker handles one stream of the seeded generator, so the totals do
not depend on the number of workers.

    python3 scripts/tropical_campaign.py --d 3 --m 10 --cases 20000 --workers 4
"""
import argparse
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from cyclic_tilt.combinatorics import Params, enumerate_index_set, intertwines
from cyclic_tilt.tropical import (
    m_special,
    make_rng,
    n_special,
    random_lamination,
    tropical_exchange_check,
)


@dataclass(frozen=True)
class CampaignConfig:
    d: int = 2
    m: int = 9
    cases: int = 10_000
    seed: int = 0
    max_leaves: int = 5
    streams: int = 16


def run_stream(cfg, stream):
    inner = enumerate_index_set(Params(cfg.m, cfg.d), interior_only=True)
    pairs = [(a, b) for a, b in itertools.permutations(inner, 2) if intertwines(a, b)]
    rng = make_rng(cfg.seed, stream)
    share = cfg.cases // cfg.streams + (stream < cfg.cases % cfg.streams)
    tally = {"cases": 0, "hold": 0, "equal": 0, "m_special": 0, "n_special": 0}
    for _ in range(share):
        a, b = pairs[int(rng.integers(len(pairs)))]
        lam = random_lamination(rng, cfg.m, cfg.d, int(rng.integers(1, cfg.max_leaves + 1)))
        res = tropical_exchange_check(a, b, lam)
        tally["cases"] += 1
        tally["hold"] += res.holds
        tally["equal"] += res.rhs_m == res.rhs_n
        tally["m_special"] += any(m_special(a, b, x) for x in lam.leaves)
        tally["n_special"] += any(n_special(a, b, x) for x in lam.leaves)
    return tally


def run_campaign(cfg, workers=1):
    streams = range(cfg.streams)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(run_stream, [cfg] * cfg.streams, streams))
    else:
        parts = [run_stream(cfg, s) for s in streams]
    return {k: sum(p[k] for p in parts) for k in parts[0]}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--m", type=int, default=9)
    ap.add_argument("--cases", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-leaves", type=int, default=5)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    cfg = CampaignConfig(args.d, args.m, args.cases, args.seed, args.max_leaves)
    t = run_campaign(cfg, args.workers)
    print(f"d={cfg.d} m={cfg.m} seed={cfg.seed}")
    print(f"relation holds: {t['hold']}/{t['cases']}")
    print(f"rhs_m == rhs_n: {t['equal']}/{t['cases']}")
    print(f"laminations with an m-special leaf: {t['m_special']}")
    print(f"laminations with an n-special leaf: {t['n_special']}")


if __name__ == "__main__":
    main()
