"""Index-level model of the (d+2)-angulated cluster category of A_n^d.

Indecomposable objects are interior (d+1)-tuples for m = n + 2d + 1.
"""
from dataclasses import dataclass

from .combinatorics import (
    Params,
    check_simplex,
    crossing,
    intertwines,
    is_interior,
    m_index,
    n_index,
    subset_masks,
    suspend,
    unsuspend,
)
from .errors import InvalidArgument
from .mutation import flip
from .triangulation import DEFAULT_BUDGET, enumerate_facesets


def ambient(n, d):
    return n + 2 * d + 1


@dataclass(frozen=True)
class ClusterObject:
    n: int
    d: int
    tuple: tuple

    def __post_init__(self):
        t = tuple(self.tuple)
        object.__setattr__(self, "tuple", t)
        check_simplex(t, self.m, self.d + 1)
        if not is_interior(t, self.m):
            raise InvalidArgument(f"{t!r} is not interior for m={self.m}")

    @property
    def m(self):
        return ambient(self.n, self.d)


def cluster_hom_d_nonzero(a, b):
    """Hom(O_a, O_b[d]) != 0; symmetric in a and b."""
    return crossing(a.tuple, b.tuple)


def cluster_suspend(a):
    return ClusterObject(a.n, a.d, suspend(a.tuple, a.m))


def cluster_unsuspend(a):
    return ClusterObject(a.n, a.d, unsuspend(a.tuple, a.m))


@dataclass(frozen=True)
class ExchangeAngles:
    source: ClusterObject
    target: ClusterObject
    E: tuple  # E_d, ..., E_1
    F: tuple  # F_1, ..., F_d

    def e_empty(self):
        return not any(self.E)

    def f_empty(self):
        return not any(self.F)


def exchange_angles(a, b):
    """Middle terms of both exchange (d+2)-angles for a intertwining b."""
    if (a.n, a.d) != (b.n, b.d):
        raise InvalidArgument("objects live in different categories")
    if not intertwines(a.tuple, b.tuple):
        raise InvalidArgument(f"{a.tuple!r} must intertwine {b.tuple!r}")
    d, m = a.d, a.m
    e_layers = {r: set() for r in range(1, d + 1)}
    f_layers = {r: set() for r in range(1, d + 1)}
    for x in subset_masks(d):
        if not 0 < len(x) <= d:
            continue
        mt = m_index(a.tuple, b.tuple, x)
        if is_interior(mt, m):
            e_layers[len(x)].add(mt)
        nt = n_index(a.tuple, b.tuple, x)
        if is_interior(nt, m):
            f_layers[len(x)].add(nt)

    def wrap(ts):
        return tuple(ClusterObject(a.n, d, t) for t in sorted(ts))

    return ExchangeAngles(
        a,
        b,
        tuple(wrap(e_layers[r]) for r in range(d, 0, -1)),
        tuple(wrap(f_layers[r]) for r in range(1, d + 1)),
    )


def oriented_exchange_angles(a, b):
    """exchange_angles with the roles swapped when b intertwines a."""
    if intertwines(b.tuple, a.tuple):
        return exchange_angles(b, a)
    return exchange_angles(a, b)


def cluster_tilting_sets(n, d, budget=DEFAULT_BUDGET, threads=1):
    """Interior parts of all triangulation e-sets of C(n+2d+1, 2d)."""
    p = Params(ambient(n, d), d)
    return [x.interior() for x in enumerate_facesets(p, budget, threads)]


def mutate(full, a):
    """Mutate a cluster tilting set at ``a`` through its full e-set.

    Returns the new interior set, or None when no mutation exists.
    """
    res = flip(full, a)
    if res is None:
        return None
    return res[0].interior()
