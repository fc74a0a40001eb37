"""Triangulations of C(m, 2d) as sets of (2d+1)-tuples and their e-sets.

Both ``Triangulation`` and ``FaceSet`` carry a ``first`` label so that the
contraction operations, which live on the vertex range [2, m] or [3, m],
can be represented without relabelling.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .combinatorics import (
    Params,
    crossing,
    enumerate_index_set,
    is_separated,
)
from .errors import LimitExceeded, NotATriangulation

DEFAULT_BUDGET = 10**7
# below this many candidates a process pool costs more than it saves
PARALLEL_MIN_ITEMS = 40


def _vertex_count(m, first):
    return m - first + 1


def expected_size(m, d, first=1):
    """binom(m-d-1, d) for the vertex range [first, m]."""
    return comb(_vertex_count(m, first) - d - 1, d)


@dataclass(frozen=True)
class Triangulation:
    m: int
    d: int
    cells: frozenset
    first: int = 1

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(tuple(c) for c in self.cells))

    def sorted_cells(self):
        return sorted(self.cells)

    def __len__(self):
        return len(self.cells)


@dataclass(frozen=True)
class FaceSet:
    m: int
    d: int
    faces: frozenset = field(default_factory=frozenset)
    first: int = 1

    def __post_init__(self):
        object.__setattr__(self, "faces", frozenset(tuple(f) for f in self.faces))

    def sorted_faces(self):
        return sorted(self.faces)

    def interior(self):
        """Faces that are internal d-simplices (drop the forced boundary ones)."""
        n = _vertex_count(self.m, self.first)
        return frozenset(f for f in self.faces if f[-1] + 2 <= f[0] + n)

    def __len__(self):
        return len(self.faces)

    def __contains__(self, item):
        return tuple(item) in self.faces

    def __iter__(self):
        return iter(self.sorted_faces())


def even_face(cell):
    return tuple(cell[0::2])


def odd_face(cell):
    return tuple(cell[1::2])


def e_set(t):
    return FaceSet(t.m, t.d, {even_face(c) for c in t.cells}, t.first)


def is_non_intertwining(faces):
    faces = list(faces)
    return not any(
        crossing(a, b) for i, a in enumerate(faces) for b in faces[i + 1:]
    )


def reconstruct(x):
    """The unique triangulation whose e-set is ``x``.

    Cells are the (2d+1)-subsets of the vertex range all of whose separated
    (d+1)-subsets lie in ``x``.  Partial subsets are abandoned as soon as a
    completed separated subset falls outside ``x``.
    """
    faces = x.faces
    d = x.d
    target = expected_size(x.m, d, x.first)
    if len(faces) != target:
        raise NotATriangulation(f"face set has {len(faces)} elements, expected {target}")
    if not all(is_separated(f) and len(f) == d + 1 for f in faces):
        raise NotATriangulation("face set contains a non-separated tuple")
    if not is_non_intertwining(faces):
        raise NotATriangulation("face set is not non-intertwining")

    cells = []
    labels = range(x.first, x.m + 1)
    size = 2 * d + 1

    def closed_under(prefix):
        # every separated (d+1)-subset ending at prefix[-1] must be a face
        last = prefix[-1]
        stack = [((), 0)]
        while stack:
            chosen, start = stack.pop()
            if len(chosen) == d:
                if (*chosen, last) not in faces:
                    return False
                continue
            for i in range(start, len(prefix) - 1):
                v = prefix[i]
                if chosen and v - chosen[-1] < 2:
                    continue
                if last - v < 2 * (d - len(chosen)):
                    break
                stack.append(((*chosen, v), i + 1))
        return True

    def extend(prefix, idx):
        if len(prefix) == size:
            cells.append(tuple(prefix))
            return
        need = size - len(prefix)
        for i in range(idx, len(labels) - need + 1):
            prefix.append(labels[i])
            if len(prefix) < d + 1 or closed_under(prefix):
                extend(prefix, i + 1)
            prefix.pop()

    extend([], 0)
    if len(cells) != target:
        raise NotATriangulation(f"reconstruction produced {len(cells)} cells, expected {target}")
    return Triangulation(x.m, d, cells, x.first)


def validate(t):
    target = expected_size(t.m, t.d, t.first)
    if len(t.cells) != target:
        return False
    if any(len(c) != 2 * t.d + 1 or list(c) != sorted(set(c)) for c in t.cells):
        return False
    if any(c[0] < t.first or c[-1] > t.m for c in t.cells):
        return False
    x = e_set(t)
    if len(x) != target or not is_non_intertwining(x.faces):
        return False
    try:
        return reconstruct(x).cells == t.cells
    except NotATriangulation:
        return False


def contract_vertex1(t):
    """S/1: glue vertex 1 onto vertex 2, dropping degenerate cells."""
    lo = t.first
    cells = set()
    for c in t.cells:
        relabelled = tuple(lo + 1 if v == lo else v for v in c)
        if len(set(relabelled)) == len(relabelled):
            cells.add(relabelled)
    return Triangulation(t.m, t.d, cells, lo + 1)


def link_vertex(cells, v):
    return frozenset(tuple(u for u in c if u != v) for c in cells if v in c)


def link_vertex1(t):
    """S\\1: cells through vertex 1 with 1 removed (2d-tuples on [2, m])."""
    return link_vertex(t.cells, t.first)


def delete12(t):
    """S\\{1,2} = (S\\1)\\2, as a set of (2d-1)-tuples on [3, m]."""
    return link_vertex(link_vertex1(t), t.first + 1)


def faceset_contract1(x):
    lo = x.first
    faces = set()
    for f in x.faces:
        g = tuple(lo + 1 if v == lo else v for v in f)
        if is_separated(g):
            faces.add(g)
    return FaceSet(x.m, x.d, faces, lo + 1)


def faceset_delete12(x):
    lo = x.first
    faces = set()
    for f in x.faces:
        if f[0] != lo:
            continue
        rest = f[1:]
        if rest and rest[0] < lo + 2:
            continue
        if (lo + 1, *rest) in x.faces or lo + 2 in rest:
            faces.add(rest)
    return FaceSet(x.m, x.d - 1, faces, lo + 2)


# -- enumeration -------------------------------------------------------------


class _Search:
    """Bitset backtracking over pairwise non-crossing subsets of a fixed size."""

    def __init__(self, items, need, budget):
        self.items = items
        self.need = need
        self.budget = budget
        self.nodes = 0
        n = len(items)
        self.cross = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if crossing(items[i], items[j]):
                    self.cross[i] |= 1 << j
                    self.cross[j] |= 1 << i
        self.after = [((1 << n) - 1) & ~((1 << (i + 1)) - 1) for i in range(n)]

    def run(self, chosen, allowed, need, out):
        self.nodes += 1
        if self.nodes > self.budget:
            raise LimitExceeded(self.budget)
        if need == 0:
            out.append(chosen)
            return
        if bin(allowed).count("1") < need:
            return
        while allowed:
            low = allowed & -allowed
            i = low.bit_length() - 1
            allowed ^= low
            if bin(allowed).count("1") + 1 < need:
                return
            self.run(chosen | low, allowed & ~self.cross[i], need - 1, out)

    def branch(self, i):
        out = []
        self.run(1 << i, self.after[i] & ~self.cross[i], self.need - 1, out)
        return out

    def decode(self, mask):
        return [self.items[i] for i in range(len(self.items)) if mask >> i & 1]


def non_crossing_subsets(items, size, budget=DEFAULT_BUDGET, threads=1):
    """All pairwise non-crossing ``size``-subsets of ``items`` (as sorted lists)."""
    items = list(items)
    search = _Search(items, size, budget)
    if size == 0:
        return [[]]
    if threads > 1 and len(items) >= PARALLEL_MIN_ITEMS:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_branch, [(items, size, budget, i) for i in range(len(items))]))
        total = sum(n for n, _ in results)
        if total > budget:
            raise LimitExceeded(budget)
        masks = [mk for _, ms in results for mk in ms]
    else:
        masks = []
        for i in range(len(items)):
            masks.extend(search.branch(i))
    return [search.decode(mk) for mk in masks]


def _run_branch(job):
    items, size, budget, i = job
    search = _Search(items, size, budget)
    out = search.branch(i)
    return search.nodes, out


def enumerate_facesets(p, budget=DEFAULT_BUDGET, threads=1):
    """All triangulation e-sets of C(m, 2d), sorted by their sorted face lists."""
    interior = enumerate_index_set(p, interior_only=True)
    inner = set(interior)
    boundary = [t for t in enumerate_index_set(p) if t not in inner]
    need = p.face_count - len(boundary)
    chosen = non_crossing_subsets(interior, need, budget, threads)
    sets = [FaceSet(p.m, p.d, boundary + c) for c in chosen]
    return sorted(sets, key=FaceSet.sorted_faces)


def enumerate_triangulations(p, budget=DEFAULT_BUDGET, threads=1):
    return [reconstruct(x) for x in enumerate_facesets(p, budget, threads)]
