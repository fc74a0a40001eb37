"""Predicates and index sets on increasing (d+1)-tuples.

Vertex labels are 1-based and tuples are plain Python tuples of ints.
Anything that only compares entries (``intertwines``, ``crossing``) also
works on tuples of ``Fraction`` values.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb

from .errors import InvalidArgument


@dataclass(frozen=True)
class Params:
    """Vertex count ``m`` and half-dimension ``d`` of C(m, 2d)."""

    m: int
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise InvalidArgument(f"d must be >= 1, got {self.d}")
        if self.m < 2 * self.d + 1:
            raise InvalidArgument(f"m must be >= 2d+1, got m={self.m}, d={self.d}")

    @property
    def face_count(self):
        """Size of every triangulation e-set, binom(m-d-1, d)."""
        return comb(self.m - self.d - 1, self.d)

    @property
    def boundary_count(self):
        """Number of separated tuples containing both 1 and m."""
        return comb(self.m - self.d - 2, self.d - 1)


class FaceKind(Enum):
    LOWER = "lower"
    UPPER = "upper"
    INTERNAL = "internal"


def check_simplex(t, m=None, length=None):
    """Raise InvalidArgument unless ``t`` is strictly increasing (and in range)."""
    if length is not None and len(t) != length:
        raise InvalidArgument(f"expected a {length}-tuple, got {t!r}")
    if any(x >= y for x, y in zip(t, t[1:])):
        raise InvalidArgument(f"tuple is not strictly increasing: {t!r}")
    if m is not None and t and (t[0] < 1 or t[-1] > m):
        raise InvalidArgument(f"entries of {t!r} must lie in [1, {m}]")


def is_separated(t):
    return all(y - x >= 2 for x, y in zip(t, t[1:]))


def is_interior(t, m):
    return is_separated(t) and t[-1] + 2 <= t[0] + m


def classify_face(t, m):
    if not is_separated(t):
        return FaceKind.LOWER
    if t[0] == 1 and t[-1] == m:
        return FaceKind.UPPER
    return FaceKind.INTERNAL


def intertwines(a, b):
    """True iff a_0 < b_0 < a_1 < b_1 < ... < a_d < b_d."""
    if len(a) != len(b):
        return False
    for k, (x, y) in enumerate(zip(a, b)):
        if not x < y:
            return False
        if k + 1 < len(a) and not y < a[k + 1]:
            return False
    return True


def crossing(a, b):
    return intertwines(a, b) or intertwines(b, a)


def subset_masks(d):
    """All X of {0..d} as frozensets, ordered by (popcount, bitmask value)."""
    bits = range(1 << (d + 1))
    ordered = sorted(bits, key=lambda v: (bin(v).count("1"), v))
    return [frozenset(k for k in range(d + 1) if v >> k & 1) for v in ordered]


def m_index(a, b, x):
    """Take ``a_k`` for ``k`` in ``x`` and ``b_k`` otherwise.

    Only defined when ``a`` intertwines ``b``; the result is then increasing.
    """
    if not intertwines(a, b):
        raise InvalidArgument(f"m_index needs {a!r} to intertwine {b!r}")
    return tuple(a[k] if k in x else b[k] for k in range(len(a)))


def n_index(a, b, x):
    """sort({a_k : k in x} + {b_{k-1} : k not in x}) with b_{-1} = b_d."""
    if not intertwines(a, b):
        raise InvalidArgument(f"n_index needs {a!r} to intertwine {b!r}")
    entries = [a[k] if k in x else b[k - 1] for k in range(len(a))]
    if len(set(entries)) != len(entries):
        raise InvalidArgument(f"n_index produced a repeated entry from {a!r}, {b!r}")
    return tuple(sorted(entries))


def suspend(t, m):
    if not is_interior(t, m):
        raise InvalidArgument(f"{t!r} is not interior for m={m}")
    if t[0] > 1:
        return tuple(x - 1 for x in t)
    return tuple(x - 1 for x in t[1:]) + (m,)


def unsuspend(t, m):
    if not is_interior(t, m):
        raise InvalidArgument(f"{t!r} is not interior for m={m}")
    if t[-1] < m:
        return tuple(x + 1 for x in t)
    return (1,) + tuple(x + 1 for x in t[:-1])


def enumerate_index_set(p, interior_only=False):
    """Separated (d+1)-tuples from [1, m] in lexicographic order."""
    out = []

    def extend(prefix, lo):
        if len(prefix) == p.d + 1:
            if not interior_only or prefix[-1] + 2 <= prefix[0] + p.m:
                out.append(tuple(prefix))
            return
        remaining = p.d - len(prefix)
        for v in range(lo, p.m - 2 * remaining + 1):
            prefix.append(v)
            extend(prefix, v + 2)
            prefix.pop()

    extend([], 1)
    return out


def separated_subtuples(vertices, size):
    """All separated ``size``-subsets of ``vertices`` as sorted tuples."""
    return [c for c in combinations(sorted(vertices), size) if is_separated(c)]
