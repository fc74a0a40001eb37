"""Index-level combinatorics of the higher Auslander algebras A_n^d.

Indecomposable summands of the cluster tilting module are indexed by
separated (d+1)-tuples from [1, n+2d].  Nothing here models actual
modules or morphisms; every function answers a question about indices.
"""
from dataclasses import dataclass

from .combinatorics import (
    check_simplex,
    intertwines,
    is_separated,
    m_index,
    subset_masks,
)
from .errors import ExchangeObstruction, InvalidArgument


@dataclass(frozen=True)
class ModuleIndex:
    n: int
    d: int
    tuple: tuple

    def __post_init__(self):
        t = tuple(self.tuple)
        object.__setattr__(self, "tuple", t)
        check_simplex(t, self.top, self.d + 1)
        if not is_separated(t):
            raise InvalidArgument(f"{t!r} is not separated")

    @property
    def top(self):
        return self.n + 2 * self.d

    def shifted(self, delta):
        return ModuleIndex(self.n, self.d, tuple(v + delta for v in self.tuple))

    def with_tuple(self, t):
        return ModuleIndex(self.n, self.d, t)


class _Zero:
    """The zero module: the value of tau_d on projectives (and dually)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Zero"


Zero = _Zero()


def _same_algebra(i, j):
    if (i.n, i.d) != (j.n, j.d):
        raise InvalidArgument("indices belong to different algebras")


def hom_nonzero(i, j):
    """i_0-1 < j_0 < i_1-1 < j_1 < ... < i_d-1 < j_d."""
    _same_algebra(i, j)
    chain = []
    for x, y in zip(i.tuple, j.tuple):
        chain.extend((x - 1, y))
    return all(u < v for u, v in zip(chain, chain[1:]))


def ext_d_nonzero(i, j):
    """Ext^d(M_i, M_j) is nonzero iff j intertwines i."""
    _same_algebra(i, j)
    return intertwines(j.tuple, i.tuple)


def is_composition_factor(j, i):
    """Is the simple S_j (a d-tuple) a composition factor of M_i?"""
    chain = []
    for k, y in enumerate(j):
        chain.extend((i.tuple[k] - 1, y))
    chain.append(i.tuple[-1] - 1)
    return all(u < v for u, v in zip(chain, chain[1:]))


def is_projective(i):
    return i.tuple[0] == 1


def is_injective(i):
    return i.tuple[-1] == i.top


def tau_d(i):
    if i.tuple[0] == 1:
        return Zero
    return i.shifted(-1)


def tau_d_inv(i):
    if i.tuple[-1] == i.top:
        return Zero
    return i.shifted(1)


def projective_resolution(i):
    """Terms P_0, P_1, ..., P_d of the minimal projective resolution.

    P_k = M_(1, i_0+1, ..., i_{k-1}+1, i_{k+1}, ..., i_d).
    """
    if is_projective(i):
        return [i]
    t = i.tuple
    d = i.d
    return [i.with_tuple((1, *(v + 1 for v in t[:k]), *t[k + 1:])) for k in range(d + 1)]


def injective_coresolution(i):
    """Terms I^0, ..., I^d of the coresolution by injectives.

    I^k = M_(i_0, ..., i_{d-1-k}, i_{d-k+1}-1, ..., i_d-1, n+2d).
    """
    if is_injective(i):
        return [i]
    t = i.tuple
    d = i.d
    return [
        i.with_tuple((*t[: d - k], *(v - 1 for v in t[d - k + 1:]), i.top))
        for k in range(d + 1)
    ]


@dataclass(frozen=True)
class ExchangeSequence:
    source: ModuleIndex
    target: ModuleIndex
    layers: tuple  # E_d, ..., E_1; each a tuple of ModuleIndex


def exchange_layers(i, j):
    """Separated m_X(i, j) grouped by |X|, listed for |X| = d, ..., 1."""
    if not intertwines(i.tuple, j.tuple):
        raise InvalidArgument(f"{i.tuple!r} does not intertwine {j.tuple!r}")
    by_size = {r: set() for r in range(1, i.d + 1)}
    for x in subset_masks(i.d):
        if 0 < len(x) <= i.d:
            t = m_index(i.tuple, j.tuple, x)
            if is_separated(t):
                by_size[len(x)].add(t)
    return [sorted(by_size[r]) for r in range(i.d, 0, -1)]


def tilting_exchange(i, j, t=None):
    """Exchange sequence M_i -> E_d -> ... -> E_1 -> M_j for i intertwining j.

    ``t`` is the tilting set (a collection of tuples) containing ``i``; when
    given, every separated m_X other than i and j must already lie in it.
    """
    _same_algebra(i, j)
    if i.tuple == j.tuple or not intertwines(i.tuple, j.tuple):
        raise InvalidArgument(f"{i.tuple!r} must intertwine {j.tuple!r}")
    layers = exchange_layers(i, j)
    if t is not None:
        faces = set(getattr(t, "faces", t))
        if i.tuple not in faces or j.tuple in faces:
            raise ExchangeObstruction("tilting set must contain the source and not the target")
        missing = [u for layer in layers for u in layer if u not in faces]
        if missing:
            raise ExchangeObstruction(f"middle terms missing from the tilting set: {missing}")
    return ExchangeSequence(
        i, j, tuple(tuple(i.with_tuple(u) for u in layer) for layer in layers)
    )
