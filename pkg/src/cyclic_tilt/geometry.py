"""Exact moment-curve oracle.

Points are p_t = (t, t^2, ..., t^{2d}).  Everything here runs over
``fractions.Fraction``; floats are rejected outright.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidArgument


def _as_fraction(t):
    if isinstance(t, float):
        raise InvalidArgument("moment-curve parameters must be exact, not float")
    return Fraction(t)


def _homogeneous_matrix(params, dim):
    """Rows (t^0, ..., t^dim) transposed: row k holds t^k for every point."""
    return [[t ** k for t in params] for k in range(dim + 1)]


def bareiss_kernel(matrix):
    """Kernel basis of ``matrix`` (list of rows) via fraction-free elimination.

    Returns a list of kernel vectors (one per free column).  Entries stay in
    the ring generated by the input; each Bareiss step divides exactly by the
    previous pivot.
    """
    rows = [list(r) for r in matrix]
    n_rows, n_cols = len(rows), len(rows[0])
    pivots = []
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        p = rows[r][c]
        for i in range(r + 1, n_rows):
            for j in range(c + 1, n_cols):
                rows[i][j] = (p * rows[i][j] - rows[i][c] * rows[r][j]) / prev
            rows[i][c] = 0
        prev = p
        pivots.append(c)
        r += 1

    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n_cols
        vec[f] = Fraction(1)
        for i in reversed(range(len(pivots))):
            c = pivots[i]
            s = sum(rows[i][j] * vec[j] for j in range(c + 1, n_cols))
            vec[c] = -Fraction(s) / rows[i][c]
        basis.append(vec)
    return basis


def affine_kernel(params, d):
    """Kernel of the affine map c -> (sum c_i, sum c_i p_{t_i}) on the given points."""
    pts = [_as_fraction(t) for t in params]
    return bareiss_kernel(_homogeneous_matrix(pts, 2 * d))


def affinely_independent(params, d):
    return not affine_kernel(params, d)


@dataclass(frozen=True)
class AffineDependency:
    params: tuple
    coefficients: tuple

    @property
    def even(self):
        return self.coefficients[0::2]

    @property
    def odd(self):
        return self.coefficients[1::2]


def affine_dependency(params):
    """The unique affine dependency among 2d+2 increasing moment-curve points.

    Coefficients are all positive; the even-position and odd-position
    classes (0-based positions) each sum to 1.
    """
    params = tuple(_as_fraction(t) for t in params)
    if len(params) < 4 or len(params) % 2:
        raise InvalidArgument(f"need 2d+2 >= 4 parameters, got {len(params)}")
    if any(x >= y for x, y in zip(params, params[1:])):
        raise InvalidArgument("parameters must be distinct and strictly increasing")
    d = (len(params) - 2) // 2
    kernel = affine_kernel(params, d)
    assert len(kernel) == 1, f"expected a one-dimensional kernel, got {len(kernel)}"
    (vec,) = kernel
    signs = [v > 0 for v in vec]
    assert all(v != 0 for v in vec) and all(
        s != t for s, t in zip(signs, signs[1:])
    ), f"dependency does not alternate in sign: {vec}"
    scale = sum(vec[0::2])
    coeffs = tuple(abs(v / scale) for v in vec)
    return AffineDependency(params, coeffs)


def simplices_intersect_interior(a, b):
    """Do the open simplices conv{p_t : t in a} and conv{p_t : t in b} meet?

    Decided from the sign pattern of the affine dependency on the union,
    without assuming anything about how the parameters interleave.
    """
    a = [_as_fraction(t) for t in a]
    b = [_as_fraction(t) for t in b]
    if len(a) != len(b):
        raise InvalidArgument("simplices must have the same dimension")
    if set(a) & set(b) or len(set(a)) != len(a) or len(set(b)) != len(b):
        raise InvalidArgument("parameters must be pairwise distinct")
    d = len(a) - 1
    pts = a + b
    kernel = affine_kernel(pts, d)
    if len(kernel) != 1:
        return False
    (vec,) = kernel
    if any(v == 0 for v in vec):
        return False
    pos = {t for t, v in zip(pts, vec) if v > 0}
    return pos == set(a) or pos == set(b)
