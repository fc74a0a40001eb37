"""The complex of pairwise non-crossing interior tuples and its faces."""
from dataclasses import dataclass
from itertools import combinations

from .cluster import ambient, cluster_tilting_sets
from .combinatorics import Params, crossing, enumerate_index_set
from .triangulation import DEFAULT_BUDGET


@dataclass
class SimplicialComplex:
    vertices: list
    facets: list  # sorted tuples of vertex indices

    def faces(self):
        """Every face, including the empty one, as a set of index tuples."""
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(combinations(f, k))
        return out

    def compatible_pairs(self):
        pairs = set()
        for f in self.facets:
            pairs.update(combinations(f, 2))
        return pairs


def build_complex(n, d, budget=DEFAULT_BUDGET, threads=1):
    p = Params(ambient(n, d), d)
    vertices = enumerate_index_set(p, interior_only=True)
    index = {t: i for i, t in enumerate(vertices)}
    facets = sorted(
        tuple(sorted(index[t] for t in s))
        for s in cluster_tilting_sets(n, d, budget, threads)
    )
    return SimplicialComplex(vertices, facets)


def bron_kerbosch(adj):
    """Maximal cliques of the graph ``{v: set(neighbours)}``, with pivoting."""
    cliques = []

    def expand(r, p, x):
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(adj), set())
    return sorted(cliques)


def _graph(n_vertices, edges):
    adj = {v: set() for v in range(n_vertices)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def is_clique_complex(c):
    """True iff every pairwise-compatible vertex set lies in some facet."""
    adj = _graph(len(c.vertices), c.compatible_pairs())
    facets = [set(f) for f in c.facets]
    return all(any(set(q) <= f for f in facets) for q in bron_kerbosch(adj))


def non_crossing_graph(vertices):
    edges = [
        (i, j)
        for i, j in combinations(range(len(vertices)), 2)
        if not crossing(vertices[i], vertices[j])
    ]
    return _graph(len(vertices), edges)


def find_nonextendable(n, d):
    """Inclusion-maximal non-crossing sets of interior tuples below facet size."""
    p = Params(ambient(n, d), d)
    vertices = enumerate_index_set(p, interior_only=True)
    facet_size = p.face_count - p.boundary_count
    cliques = bron_kerbosch(non_crossing_graph(vertices))
    return [[vertices[i] for i in q] for q in cliques if len(q) < facet_size]


def f_vector(c):
    """(f_0, f_1, ...): number of faces with i+1 vertices."""
    counts = {}
    for f in c.faces():
        if f:
            counts[len(f) - 1] = counts.get(len(f) - 1, 0) + 1
    return [counts.get(i, 0) for i in range(max(counts, default=-1) + 1)]


def euler_characteristic(c):
    return sum((-1) ** i * f for i, f in enumerate(f_vector(c)))


def reduced_euler_characteristic(c):
    return euler_characteristic(c) - 1


def incompatibility_cycle(c):
    """Order the vertices so incompatible pairs sit maximally far apart.

    Returns the cyclic order as a list of vertex indices, or None if the
    incompatibility graph is not a single cycle through every vertex.
    """
    n = len(c.vertices)
    compatible = c.compatible_pairs()
    bad = _graph(n, [(i, j) for i, j in combinations(range(n), 2) if (i, j) not in compatible])
    if n < 3 or any(len(bad[v]) != 2 for v in bad):
        return None
    walk = [0]
    prev, cur = None, 0
    while True:
        nxt = min(bad[cur] - {prev}) if prev is not None else min(bad[cur])
        if nxt == 0:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    if len(walk) != n or n % 2 == 0:
        return None
    # consecutive walk entries are (n+1)/2 steps apart in the cycle
    step = (n + 1) // 2
    order = [None] * n
    for k, v in enumerate(walk):
        order[(k * step) % n] = v
    return order
