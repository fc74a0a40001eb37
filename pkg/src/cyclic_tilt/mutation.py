"""Bistellar flips as single-element exchanges on e-sets."""
from collections import deque
from dataclasses import dataclass

from .combinatorics import (
    Params,
    crossing,
    enumerate_index_set,
    separated_subtuples,
)
from .errors import InvalidArgument
from .triangulation import (
    DEFAULT_BUDGET,
    FaceSet,
    enumerate_facesets,
    expected_size,
    is_non_intertwining,
)


def exchangeable(a, b):
    return a != b and crossing(a, b)


def complements_condition(a, b, r):
    """Check the local criterion for ``a`` and ``b`` both completing ``r``."""
    faces = r.faces
    if a in faces or b in faces:
        return False
    if len(faces) != expected_size(r.m, r.d, r.first) - 1:
        return False
    if not is_non_intertwining(faces):
        return False
    required = separated_subtuples(set(a) | set(b), r.d + 1)
    return all(t in faces for t in required if t != a and t != b)


def flip(x, a):
    """Exchange ``a`` out of the e-set ``x``.

    Returns ``(new_faceset, b)`` or ``None`` when no flip exists at ``a``.
    """
    a = tuple(a)
    if a not in x.faces:
        raise InvalidArgument(f"{a!r} is not in the face set")
    n = x.m - x.first + 1
    if not (a[-1] + 2 <= a[0] + n):
        raise InvalidArgument(f"{a!r} is not an interior tuple")
    rest = x.faces - {a}
    found = []
    for b in _interior(x):
        if b in x.faces or not crossing(a, b):
            continue
        if not any(crossing(b, c) for c in rest):
            found.append(b)
    assert len(found) <= 1, f"flip at {a!r} is not unique: {found}"
    if not found:
        return None
    (b,) = found
    return FaceSet(x.m, x.d, rest | {b}, x.first), b


def _interior(x):
    shift = x.first - 1
    p = Params(x.m - shift, x.d)
    return [tuple(v + shift for v in t) for t in enumerate_index_set(p, interior_only=True)]


def flippable(x):
    """Interior faces of ``x`` at which a flip exists, with their partners."""
    out = []
    for a in sorted(x.interior()):
        res = flip(x, a)
        if res is not None:
            out.append((a, res[1], res[0]))
    return out


@dataclass
class FlipGraph:
    nodes: list
    edges: list  # (i, j, out_tuple, in_tuple) with i < j

    def adjacency(self):
        adj = {i: set() for i in range(len(self.nodes))}
        for i, j, _, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def is_connected(self):
        if not self.nodes:
            return True
        adj = self.adjacency()
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in adj[v] - seen:
                seen.add(w)
                queue.append(w)
        return len(seen) == len(self.nodes)


def build_flip_graph(p, budget=DEFAULT_BUDGET, threads=1):
    nodes = enumerate_facesets(p, budget, threads)
    index = {x.faces: i for i, x in enumerate(nodes)}
    edges = {}
    for i, x in enumerate(nodes):
        for a, b, y in flippable(x):
            j = index[y.faces]
            key = (min(i, j), max(i, j))
            if key not in edges:
                # label the edge from the lower-indexed node's point of view
                edges[key] = (a, b) if i < j else (b, a)
    graph = FlipGraph(nodes, [(i, j, o, n) for (i, j), (o, n) in sorted(edges.items())])
    assert graph.is_connected(), "flip graph is disconnected"
    return graph
