"""Invariant battery run by ``cyclic-tilt verify``.

Each check returns a ``Check``; the battery never raises on a failed
invariant, it reports it.
"""
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .combinatorics import (
    Params,
    crossing,
    enumerate_index_set,
    intertwines,
    is_separated,
    suspend,
    unsuspend,
)
from .geometry import affinely_independent, simplices_intersect_interior
from .mutation import build_flip_graph, flip
from .triangulation import (
    DEFAULT_BUDGET,
    contract_vertex1,
    delete12,
    e_set,
    enumerate_facesets,
    faceset_contract1,
    faceset_delete12,
    is_non_intertwining,
    reconstruct,
    validate,
)
from .tropical import make_rng, random_lamination, tropical_exchange_check


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def check_index_sets(p):
    all_t = enumerate_index_set(p)
    inner = enumerate_index_set(p, interior_only=True)
    brute = [c for c in combinations(range(1, p.m + 1), p.d + 1) if is_separated(c)]
    ok = (
        all_t == brute
        and len(all_t) == comb(p.m - p.d, p.d + 1)
        and len(all_t) - len(inner) == p.boundary_count
    )
    return Check("index-sets", ok, f"|I|={len(all_t)} |I_int|={len(inner)}")


def check_suspension(p):
    inner = enumerate_index_set(p, interior_only=True)
    images = [suspend(t, p.m) for t in inner]
    ok = sorted(images) == inner and all(unsuspend(s, p.m) == t for s, t in zip(images, inner))
    return Check("suspension-bijection", ok)


def check_geometry(p):
    inner = enumerate_index_set(p, interior_only=True)
    bad = []
    for a, b in combinations(inner, 2):
        if set(a) & set(b):
            if crossing(a, b) or not affinely_independent(sorted(set(a) | set(b)), p.d):
                bad.append((a, b))
        elif simplices_intersect_interior(a, b) != crossing(a, b):
            bad.append((a, b))
    return Check("geometric-oracle", not bad, f"{len(bad)} mismatches" if bad else "")


def check_triangulations(p, facesets):
    problems = []
    boundary = set(enumerate_index_set(p)) - set(enumerate_index_set(p, interior_only=True))
    for x in facesets:
        t = reconstruct(x)
        if len(x) != p.face_count or len(t) != p.face_count:
            problems.append("size")
        if not is_non_intertwining(x.faces):
            problems.append("intertwining")
        if e_set(t) != x or not validate(t):
            problems.append("roundtrip")
        if not boundary <= x.faces:
            problems.append("boundary")
        if p.m > 2 * p.d + 1:
            if e_set(contract_vertex1(t)) != faceset_contract1(x):
                problems.append("contract")
            s12 = delete12(t)
            if {c[0::2] for c in s12} != faceset_delete12(x).faces:
                problems.append("delete12")
    return Check("triangulations", not problems, f"{len(facesets)} triangulations; {sorted(set(problems))}")


def check_flip_graph(p, budget, threads):
    g = build_flip_graph(p, budget, threads)
    bad = 0
    for i, j, o, n in g.edges:
        x, y = g.nodes[i], g.nodes[j]
        if x.faces ^ y.faces != {o, n} or intertwines(o, n) == intertwines(n, o):
            bad += 1
        back = flip(y, n)
        if back is None or back[0] != x or back[1] != o:
            bad += 1
    return Check("flip-graph", bad == 0 and g.is_connected(), f"{len(g.nodes)} nodes, {len(g.edges)} edges")


def check_tropical(p, cases, seed):
    inner = enumerate_index_set(p, interior_only=True)
    pairs = [(a, b) for a in inner for b in inner if intertwines(a, b)]
    if not pairs:
        return Check("tropical", True, "no intertwining pairs")
    held = 0
    for k in range(cases):
        rng = make_rng(seed, k)
        a, b = pairs[int(rng.integers(len(pairs)))]
        lam = random_lamination(rng, p.m, p.d, int(rng.integers(1, 6)))
        held += tropical_exchange_check(a, b, lam).holds
    return Check("tropical", held == cases, f"{held}/{cases} hold")


def run_battery(p, budget=DEFAULT_BUDGET, threads=1, tropical_cases=1000, seed=0):
    checks = [check_index_sets(p), check_suspension(p), check_geometry(p)]
    facesets = enumerate_facesets(p, budget, threads)
    checks.append(check_triangulations(p, facesets))
    checks.append(check_flip_graph(p, budget, threads))
    checks.append(check_tropical(p, tropical_cases, seed))
    return checks


