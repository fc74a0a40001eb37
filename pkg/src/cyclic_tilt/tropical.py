"""Generalized laminations and the tropical exchange relation.

A leaf is an increasing tuple of rationals avoiding the vertex labels
1..m; a lamination is a finite set of pairwise non-intertwining leaves.
``I_A(L)`` counts the leaves that intertwine ``A`` in either order.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .combinatorics import crossing, intertwines, m_index, n_index, subset_masks
from .errors import InvalidArgument


def _leaf(entries, m):
    leaf = tuple(Fraction(v) for v in entries)
    if any(x >= y for x, y in zip(leaf, leaf[1:])):
        raise InvalidArgument(f"leaf {leaf} is not strictly increasing")
    if any(v.denominator == 1 and 1 <= v <= m for v in leaf):
        raise InvalidArgument(f"leaf {leaf} hits a vertex label in [1, {m}]")
    return leaf


@dataclass(frozen=True)
class Lamination:
    m: int
    d: int
    leaves: tuple = ()

    def __post_init__(self):
        leaves = tuple(sorted({_leaf(x, self.m) for x in self.leaves}))
        if any(len(x) != self.d + 1 for x in leaves):
            raise InvalidArgument(f"leaves must have length {self.d + 1}")
        for i, x in enumerate(leaves):
            for y in leaves[i + 1:]:
                if crossing(x, y):
                    raise InvalidArgument(f"leaves {x} and {y} intertwine")
        object.__setattr__(self, "leaves", leaves)

    def __len__(self):
        return len(self.leaves)


def intersection_count(a, lam):
    leaves = lam.leaves if isinstance(lam, Lamination) else lam
    return sum(1 for leaf in leaves if crossing(a, leaf))


def m_special(a, b, leaf):
    return all(x < v < y for x, v, y in zip(a, leaf, b))


def n_special(a, b, leaf):
    """b_{i-1} < leaf_i < a_i for all i, read cyclically.

    The gap between b_d and a_0 wraps around the circle, so a leaf entry
    below a_0 or above b_d may occupy it.  In the second case the leaf
    is rotated so that entry comes first.
    """
    d = len(a) - 1
    if leaf[0] < a[0] and all(b[i - 1] < leaf[i] < a[i] for i in range(1, d + 1)):
        return True
    return leaf[d] > b[d] and all(b[i] < leaf[i] < a[i + 1] for i in range(d))


def _family_map(family):
    if family in ("M", "m"):
        return m_index
    if family in ("N", "n"):
        return n_index
    raise InvalidArgument(f"unknown family {family!r}")


def signed_sum(a, b, leaf, family="M"):
    """Sum over all X of (-1)^|X| I_{m_X(a,b)}(leaf) (or n_X)."""
    index = _family_map(family)
    d = len(a) - 1
    total = 0
    for x in subset_masks(d):
        if crossing(index(a, b, x), leaf):
            total += -1 if len(x) % 2 else 1
    return total


def exchange_terms(a, b, family="M"):
    """Signed tuples of one side of the exchange relation.

    Returns ``[(sign, tuple), ...]`` over proper subsets X, with sign
    (-1)^(|X|+d).  The X = {} term is ``b`` itself.
    """
    index = _family_map(family)
    d = len(a) - 1
    out = []
    for x in subset_masks(d):
        if len(x) == d + 1:
            continue
        sign = 1 if (len(x) + d) % 2 == 0 else -1
        out.append((sign, index(a, b, x)))
    return out


def evaluate(terms, lam):
    return sum(sign * intersection_count(t, lam) for sign, t in terms)


@dataclass(frozen=True)
class TropicalCheck:
    lhs: int
    rhs_m: int
    rhs_n: int

    @property
    def holds(self):
        return self.lhs == max(self.rhs_m, self.rhs_n)


def tropical_exchange_check(a, b, lam):
    """Evaluate both sides of I_a = max(rhs_m, rhs_n) on the lamination."""
    if not intertwines(a, b):
        raise InvalidArgument(f"{a!r} must intertwine {b!r}")
    leaves = lam.leaves if isinstance(lam, Lamination) else tuple(lam)
    m_side = [leaf for leaf in leaves if m_special(a, b, leaf)]
    n_side = [leaf for leaf in leaves if n_special(a, b, leaf)]
    assert not (m_side and n_side), "lamination has both m- and n-special leaves"
    return TropicalCheck(
        intersection_count(a, leaves),
        evaluate(exchange_terms(a, b, "M"), leaves),
        evaluate(exchange_terms(a, b, "N"), leaves),
    )


# -- random laminations --------------------------------------------------


def random_parameter(rng, m, depth=3):
    """A non-integral rational in (0, m + 1): k + j/2^r with j odd."""
    r = int(rng.integers(1, depth + 1))
    denom = 1 << r
    j = int(rng.integers(0, denom // 2)) * 2 + 1
    k = int(rng.integers(0, m + 1))
    return Fraction(k * denom + j, denom)


def random_leaf(rng, m, d):
    while True:
        vals = sorted({random_parameter(rng, m) for _ in range(d + 1)})
        if len(vals) == d + 1:
            return tuple(vals)


def random_lamination(rng, m, d, size, max_tries=200):
    """Grow a lamination leaf by leaf, retrying leaves that intertwine."""
    leaves = []
    tries = 0
    while len(leaves) < size and tries < max_tries:
        tries += 1
        leaf = random_leaf(rng, m, d)
        if leaf in leaves or any(crossing(leaf, x) for x in leaves):
            continue
        leaves.append(leaf)
    return Lamination(m, d, leaves)


def make_rng(seed, stream=0):
    """Reproducible generator for job ``stream`` of a seeded campaign."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream,)))
