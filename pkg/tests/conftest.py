import itertools
from fractions import Fraction

import pytest

ACCEPTANCE_LINES = []


def polygon_triangulations(vertices):
    """Triangulations of a convex polygon, by choosing the apex over the last edge.

    Independent of everything in the package: each triangulation is a
    frozenset of triangles.
    """
    vertices = tuple(vertices)
    if len(vertices) < 3:
        return [frozenset()]
    first, last = vertices[0], vertices[-1]
    out = []
    for k in range(1, len(vertices) - 1):
        apex = vertices[k]
        for left in polygon_triangulations(vertices[: k + 1]):
            for right in polygon_triangulations(vertices[k:]):
                out.append(left | right | {(first, apex, last)})
    return out


def brute_separated(m, size):
    return [c for c in itertools.combinations(range(1, m + 1), size)
            if all(y - x >= 2 for x, y in zip(c, c[1:]))]


def lagrange_dependency(params):
    """Affine dependency of moment-curve points via divided differences.

    The coefficient of point i is 1 / prod_{j != i} (t_i - t_j).
    """
    params = [Fraction(t) for t in params]
    out = []
    for i, t in enumerate(params):
        prod = Fraction(1)
        for j, s in enumerate(params):
            if i != j:
                prod *= t - s
        out.append(1 / prod)
    return out


@pytest.fixture
def hexagon_fan():
    from cyclic_tilt.triangulation import Triangulation

    return Triangulation(6, 1, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
