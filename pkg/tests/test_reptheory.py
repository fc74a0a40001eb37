import itertools

import networkx as nx
import pytest

from cyclic_tilt.combinatorics import Params, crossing, enumerate_index_set, intertwines
from cyclic_tilt.errors import ExchangeObstruction, InvalidArgument
from cyclic_tilt.mutation import flippable
from cyclic_tilt.reptheory import (
    ModuleIndex,
    Zero,
    ext_d_nonzero,
    exchange_layers,
    hom_nonzero,
    injective_coresolution,
    is_composition_factor,
    is_injective,
    is_projective,
    projective_resolution,
    tau_d,
    tau_d_inv,
    tilting_exchange,
)
from cyclic_tilt.triangulation import enumerate_facesets

ND = [(n, d) for d in (1, 2, 3) for n in (1, 2, 3, 4)]


def idx(n, d, *t):
    return ModuleIndex(n, d, t)


def all_indices(n, d):
    return [ModuleIndex(n, d, t) for t in enumerate_index_set(Params(n + 2 * d, d))]


def test_hom_examples():
    assert hom_nonzero(idx(2, 1, 1, 3), idx(2, 1, 1, 4))
    assert not hom_nonzero(idx(2, 1, 1, 3), idx(2, 1, 2, 4))


def test_hom_chain_2537():
    # d=1 with n+2d >= 7
    assert hom_nonzero(idx(5, 1, 2, 5), idx(5, 1, 3, 7))


def test_ext_examples():
    assert ext_d_nonzero(idx(2, 2, 2, 4, 6), idx(2, 2, 1, 3, 5))
    assert not ext_d_nonzero(idx(2, 2, 1, 3, 5), idx(2, 2, 2, 4, 6))
    assert not ext_d_nonzero(idx(2, 2, 1, 3, 5), idx(2, 2, 1, 3, 5))


def test_projective_injective_examples():
    a = idx(2, 2, 1, 4, 6)
    assert is_projective(a) and is_injective(a)
    b = idx(2, 2, 2, 4, 6)
    assert is_injective(b) and not is_projective(b)
    c = idx(2, 1, 2, 4)
    assert is_injective(c) and not is_projective(c)


def test_tau_examples():
    assert tau_d(idx(2, 2, 2, 4, 6)) == idx(2, 2, 1, 3, 5)
    assert tau_d(idx(2, 2, 1, 3, 5)) is Zero
    assert tau_d_inv(idx(2, 2, 2, 4, 6)) is Zero


@pytest.mark.parametrize("n,d", ND)
def test_tau_inverse(n, d):
    for i in all_indices(n, d):
        if not is_projective(i):
            assert tau_d_inv(tau_d(i)) == i
        if not is_injective(i):
            assert tau_d(tau_d_inv(i)) == i


@pytest.mark.parametrize("n,d", ND)
def test_tau_orbits_cover_indices(n, d):
    seen = []
    for p in all_indices(n, d):
        if not is_projective(p):
            continue
        cur = p
        while cur is not Zero:
            seen.append(cur.tuple)
            cur = tau_d_inv(cur)
    assert sorted(seen) == sorted(i.tuple for i in all_indices(n, d))
    assert len(set(seen)) == len(seen)


def test_resolution_examples():
    assert [t.tuple for t in projective_resolution(idx(2, 1, 2, 4))] == [(1, 4), (1, 3)]
    assert [t.tuple for t in projective_resolution(idx(2, 2, 2, 4, 6))] == [(1, 4, 6), (1, 3, 6), (1, 3, 5)]
    assert [t.tuple for t in injective_coresolution(idx(2, 2, 1, 3, 5))] == [(1, 3, 6), (1, 4, 6), (2, 4, 6)]
    p = idx(2, 2, 1, 3, 5)
    assert projective_resolution(p) == [p]


@pytest.mark.parametrize("n,d", ND)
def test_resolutions_are_projective_and_injective(n, d):
    for i in all_indices(n, d):
        res = projective_resolution(i)
        assert all(is_projective(t) for t in res) and len(res) <= d + 1
        cores = injective_coresolution(i)
        assert all(is_injective(t) for t in cores) and len(cores) <= d + 1
        if not is_projective(i):
            # the first term covers i, the last is the end of the chain
            assert hom_nonzero(res[0], i)


@pytest.mark.parametrize("n,d", ND)
def test_hom_agrees_with_composition_factors(n, d):
    # Hom(P_s, M_j) != 0 iff S_s is a composition factor of M_j
    for p in all_indices(n, d):
        if not is_projective(p):
            continue
        s = tuple(v - 2 for v in p.tuple[1:])
        for j in all_indices(n, d):
            assert hom_nonzero(p, j) == is_composition_factor(s, j)


@pytest.mark.parametrize("n,d", ND)
def test_ext_exactly_one_direction(n, d):
    for i, j in itertools.combinations(all_indices(n, d), 2):
        if crossing(i.tuple, j.tuple):
            assert ext_d_nonzero(i, j) != ext_d_nonzero(j, i)
        else:
            assert not ext_d_nonzero(i, j) and not ext_d_nonzero(j, i)


def test_exchange_examples():
    seq = tilting_exchange(idx(2, 1, 1, 3), idx(2, 1, 2, 4))
    assert [[u.tuple for u in layer] for layer in seq.layers] == [[(1, 4)]]
    seq = tilting_exchange(idx(2, 2, 1, 3, 5), idx(2, 2, 2, 4, 6))
    assert [[u.tuple for u in layer] for layer in seq.layers] == [[(1, 3, 6)], [(1, 4, 6)]]
    with pytest.raises(InvalidArgument):
        tilting_exchange(idx(2, 1, 1, 3), idx(2, 1, 1, 3))
    with pytest.raises(InvalidArgument):
        tilting_exchange(idx(2, 1, 2, 4), idx(2, 1, 1, 3))
    with pytest.raises(ExchangeObstruction):
        tilting_exchange(idx(2, 1, 1, 3), idx(2, 1, 2, 4), {(1, 3), (2, 3)})


@pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3)])
def test_exchange_layers_lie_in_tilting_set(n, d):
    p = Params(n + 2 * d, d)
    for x in enumerate_facesets(p):
        for a, b, y in flippable(x):
            src, dst, t = (a, b, x) if intertwines(a, b) else (b, a, y)
            seq = tilting_exchange(ModuleIndex(n, d, src), ModuleIndex(n, d, dst), t)
            assert seq.source.tuple == src and seq.target.tuple == dst
            assert len(seq.layers) == d


@pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3)])
def test_tilting_sets_are_maximal_rigid_sets(n, d):
    p = Params(n + 2 * d, d)
    items = enumerate_index_set(p)
    g = nx.Graph()
    g.add_nodes_from(items)
    g.add_edges_from((a, b) for a, b in itertools.combinations(items, 2) if not crossing(a, b))
    rigid = sorted(sorted(c) for c in nx.find_cliques(g) if len(c) == p.face_count)
    ours = [x.sorted_faces() for x in enumerate_facesets(p)]
    assert ours == rigid
