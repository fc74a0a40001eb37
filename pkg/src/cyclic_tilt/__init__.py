"""Triangulations of even-dimensional cyclic polytopes and the tilting
combinatorics of higher Auslander algebras of type A."""

from .combinatorics import (
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
    suspend,
    unsuspend,
)
from .errors import ExchangeObstruction, InvalidArgument, LimitExceeded, NotATriangulation
from .triangulation import (
    FaceSet,
    Triangulation,
    e_set,
    enumerate_facesets,
    enumerate_triangulations,
    reconstruct,
    validate,
)

__version__ = "0.1.0"
