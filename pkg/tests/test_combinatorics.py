import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_separated
from cyclic_tilt.combinatorics import (
    FaceKind,
    Params,
    classify_face,
    crossing,
    enumerate_index_set,
    intertwines,
    is_interior,
    is_separated,
    m_index,
    n_index,
    subset_masks,
    suspend,
    unsuspend,
)
from cyclic_tilt.errors import InvalidArgument


@pytest.mark.parametrize("t,expected", [((1, 3, 5), True), ((1, 2, 4), False), ((2, 4, 7, 9), True)])
def test_is_separated(t, expected):
    assert is_separated(t) is expected


@pytest.mark.parametrize("t,m,expected", [((2, 4, 6), 7, True), ((1, 3, 7), 7, False), ((1, 3, 5), 5, False)])
def test_is_interior(t, m, expected):
    assert is_interior(t, m) is expected


@pytest.mark.parametrize(
    "t,kind", [((2, 3), FaceKind.LOWER), ((1, 6), FaceKind.UPPER), ((2, 4), FaceKind.INTERNAL)]
)
def test_classify_face(t, kind):
    assert classify_face(t, 6) is kind


def test_classify_internal_matches_interior():
    for m, d in [(7, 2), (9, 3), (8, 1)]:
        for t in itertools.combinations(range(1, m + 1), d + 1):
            assert (classify_face(t, m) is FaceKind.INTERNAL) == is_interior(t, m)


def test_intertwines_and_crossing():
    assert intertwines((1, 3), (2, 4))
    assert intertwines((1, 3, 5), (2, 4, 6))
    assert not intertwines((1, 4), (2, 3))
    assert crossing((1, 3), (2, 4)) and crossing((2, 4), (1, 3))
    assert not crossing((1, 3), (1, 4))


def test_m_index_examples():
    assert m_index((1, 3, 5), (2, 4, 6), {0}) == (1, 4, 6)
    assert m_index((1, 3, 5), (2, 4, 6), {0, 1, 2}) == (1, 3, 5)
    assert m_index((1, 3), (2, 4), set()) == (2, 4)


def test_n_index_examples():
    assert n_index((1, 3), (2, 5), {1}) == (3, 5)
    assert n_index((1, 3), (2, 5), {0}) == (1, 2)
    assert n_index((1, 3, 5), (2, 4, 6), set()) == (2, 4, 6)


def test_index_maps_reject_non_intertwining():
    with pytest.raises(InvalidArgument):
        m_index((2, 4), (1, 3), {0})
    with pytest.raises(InvalidArgument):
        n_index((1, 4), (2, 3), {1})


def test_subset_mask_order():
    assert subset_masks(1) == [frozenset(), {0}, {1}, {0, 1}]
    sizes = [len(x) for x in subset_masks(3)]
    assert sizes == sorted(sizes) and len(sizes) == 16


def test_suspend_examples():
    assert suspend((2, 4), 6) == (1, 3)
    assert suspend((1, 3), 6) == (2, 6)
    assert unsuspend((2, 6), 6) == (1, 3)
    with pytest.raises(InvalidArgument):
        suspend((1, 6), 6)


@pytest.mark.parametrize("m,d", [(m, d) for d in (1, 2, 3) for m in range(2 * d + 1, 13)])
def test_suspension_is_bijection(m, d):
    inner = enumerate_index_set(Params(m, d), interior_only=True)
    images = [suspend(t, m) for t in inner]
    assert sorted(images) == inner
    assert all(unsuspend(s, m) == t for s, t in zip(images, inner))
    assert all(suspend(unsuspend(t, m), m) == t for t in inner)


def test_index_set_examples():
    labels = ["13", "14", "15", "16", "24", "25", "26", "35", "36", "46"]
    got = enumerate_index_set(Params(6, 1))
    assert ["".join(map(str, t)) for t in got] == labels
    assert len(enumerate_index_set(Params(6, 1), interior_only=True)) == 9
    assert len(enumerate_index_set(Params(8, 2))) == 20


@pytest.mark.parametrize("m,d", [(m, d) for d in (1, 2, 3, 4) for m in range(2 * d + 1, 14)])
def test_index_set_counts(m, d):
    p = Params(m, d)
    all_t = enumerate_index_set(p)
    inner = enumerate_index_set(p, interior_only=True)
    assert all_t == brute_separated(m, d + 1)
    assert len(all_t) == comb(m - d, d + 1)
    assert len(all_t) - len(inner) == comb(m - d - 2, d - 1)


def test_params_reject_small_m():
    with pytest.raises(InvalidArgument):
        Params(4, 2)


increasing = st.lists(st.integers(1, 20), min_size=3, max_size=3, unique=True).map(lambda v: tuple(sorted(v)))


@given(increasing, increasing)
def test_intertwining_antisymmetric(a, b):
    assert not (a != b and intertwines(a, b) and intertwines(b, a))
    assert crossing(a, b) == crossing(b, a)


@given(st.data())
def test_index_maps_extremes(data):
    d = data.draw(st.integers(1, 4))
    vals = sorted(data.draw(st.lists(st.integers(1, 40), min_size=2 * d + 2, max_size=2 * d + 2, unique=True)))
    a, b = tuple(vals[0::2]), tuple(vals[1::2])
    full = set(range(d + 1))
    assert m_index(a, b, set()) == b and m_index(a, b, full) == a
    assert n_index(a, b, set()) == b and n_index(a, b, full) == a
    x = data.draw(st.sets(st.integers(0, d)))
    mt = m_index(a, b, x)
    assert all(p < q for p, q in zip(mt, mt[1:]))
