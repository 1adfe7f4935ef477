"""Hochschild cochain complex of an algebra with coefficients in itself.

An n-cochain is a multilinear map ``A^n -> A`` stored as a flat vector of
``dim**(n+1)`` scalars.  Coordinate ``flat_index(n, dim, (k, j1, ..., jn))``
is the coefficient of ``e_k`` in ``phi(e_j1, ..., e_jn)``; ``k`` varies
slowest and ``jn`` fastest.  For ``n = 1`` that is the row-major
flattening of the matrix ``rho`` whose column ``j`` holds ``phi(e_j)``.

The coboundary is

    (d phi)(x1, ..., x_{n+1}) = x1 phi(x2, ..., x_{n+1})
        + sum_{i=1..n} (-1)^i phi(x1, ..., xi x_{i+1}, ..., x_{n+1})
        + (-1)^{n+1} phi(x1, ..., xn) x_{n+1}
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Algebra, basis_vector, multiply
from .linalg import (
    LinalgError,
    Matrix,
    Subspace,
    column_space_basis,
    extend_to_complement,
    nullspace_basis,
    span,
)
from .scalar import ONE, ZERO, as_scalar

MAX_DEGREE = 3

__all__ = [
    "MAX_DEGREE",
    "DegreeError",
    "Cochain",
    "CohomologyResult",
    "flat_index",
    "unflat_index",
    "apply_cochain",
    "delta_matrix",
    "cocycle_space",
    "coboundary_space",
    "cohomology",
    "derivations_by_leibniz",
    "inner_derivations_by_ad",
    "is_derivation",
    "ad",
    "vector_to_rho",
    "rho_to_vector",
]


class DegreeError(ValueError):
    pass


def flat_index(degree: int, dim: int, multi_index: Sequence[int]) -> int:
    """0-based flat position of the 1-based index tuple ``(k, j1, ..., j_degree)``."""
    if len(multi_index) != degree + 1:
        raise IndexError(f"expected {degree + 1} indices, got {len(multi_index)}")
    pos = 0
    for idx in multi_index:
        if not 1 <= idx <= dim:
            raise IndexError(f"index {idx} out of range 1..{dim}")
        pos = pos * dim + (idx - 1)
    return pos


def unflat_index(degree: int, dim: int, pos: int) -> tuple:
    if not 0 <= pos < dim ** (degree + 1):
        raise IndexError(f"flat index {pos} out of range")
    out = []
    for _ in range(degree + 1):
        pos, r = divmod(pos, dim)
        out.append(r + 1)
    return tuple(reversed(out))


@dataclass(frozen=True)
class Cochain:
    degree: int
    dim: int
    coords: tuple

    def __post_init__(self):
        coords = tuple(as_scalar(x) for x in self.coords)
        if len(coords) != self.dim ** (self.degree + 1):
            raise ValueError("cochain has the wrong number of coordinates")
        object.__setattr__(self, "coords", coords)

    def as_rho(self) -> Matrix:
        """Degree-1 cochain as the n x n matrix with column j = phi(e_j)."""
        if self.degree != 1:
            raise ValueError("only degree-1 cochains have a matrix form")
        return vector_to_rho(self.coords, self.dim)


def vector_to_rho(vec: Sequence, n: int) -> Matrix:
    return Matrix._raw([tuple(vec[k * n : (k + 1) * n]) for k in range(n)], n)


def rho_to_vector(rho: Matrix) -> tuple:
    return tuple(x for r in rho.row_list() for x in r)


def apply_cochain(A: Algebra, phi: Cochain, args: Sequence[Sequence]) -> tuple:
    """Evaluate a cochain on ``degree`` elements by multilinear expansion."""
    n = A.dim
    if phi.dim != n:
        raise ValueError("cochain and algebra dimensions differ")
    if len(args) != phi.degree:
        raise ValueError(f"cochain of degree {phi.degree} takes {phi.degree} arguments")
    args = [tuple(as_scalar(x) for x in a) for a in args]
    out = [ZERO] * n
    inner = n ** phi.degree
    supports = [[(j, x) for j, x in enumerate(a) if x] for a in args]
    for combo in itertools.product(*supports):
        f = ONE
        off = 0
        for j, x in combo:
            f = f * x
            off = off * n + j
        for k in range(n):
            v = phi.coords[k * inner + off]
            if v:
                out[k] = out[k] + f * v
    return tuple(out)


def delta_matrix(A: Algebra, n: int, max_degree: int = MAX_DEGREE) -> Matrix:
    """Matrix of the coboundary ``C^n -> C^{n+1}`` in flat coordinates."""
    if n < 0:
        raise DegreeError("degree must be nonnegative")
    if n > max_degree:
        raise DegreeError(f"degree {n} exceeds the configured cap {max_degree}")
    d = A.dim
    c = A.c
    # nonzero structure constants by (i, j) and by (i, *, k) patterns
    prod_nz = {
        (i, j): [(k, x) for k, x in enumerate(c[i][j]) if x] for i in range(d) for j in range(d)
    }
    left_nz = [[] for _ in range(d)]  # left_nz[a] = [(m, k, c[a][m][k])]: a * e_m contributes to e_k
    right_nz = [[] for _ in range(d)]  # right_nz[b] = [(m, k, c[m][b][k])]
    for i in range(d):
        for j in range(d):
            for k, x in prod_nz[(i, j)]:
                left_nz[i].append((j, k, x))
                right_nz[j].append((i, k, x))
    in_inner = d ** n  # number of argument tuples for an n-cochain
    out_args = d ** (n + 1)
    rows: list = [None] * (d * out_args)
    last_sign = ONE if (n + 1) % 2 == 0 else -ONE
    for js in itertools.product(range(d), repeat=n + 1):
        # per output coordinate k: dict col -> coefficient
        acc = [dict() for _ in range(d)]
        # x1 * phi(x2..x_{n+1})
        off_tail = 0
        for j in js[1:]:
            off_tail = off_tail * d + j
        for m, k, x in left_nz[js[0]]:
            col = m * in_inner + off_tail
            acc[k][col] = acc[k].get(col, ZERO) + x
        # (-1)^i phi(x1, ..., xi x_{i+1}, ..., x_{n+1})
        for i in range(n):
            sign = -ONE if i % 2 == 0 else ONE
            nz = prod_nz[(js[i], js[i + 1])]
            if not nz:
                continue
            before = js[:i]
            after = js[i + 2 :]
            for p, x in nz:
                off = 0
                for j in before + (p,) + after:
                    off = off * d + j
                v = sign * x
                for k in range(d):
                    col = k * in_inner + off
                    acc[k][col] = acc[k].get(col, ZERO) + v
        # (-1)^{n+1} phi(x1..xn) x_{n+1}
        off_head = 0
        for j in js[:-1]:
            off_head = off_head * d + j
        for m, k, x in right_nz[js[-1]]:
            col = m * in_inner + off_head
            acc[k][col] = acc[k].get(col, ZERO) + last_sign * x
        off_js = 0
        for j in js:
            off_js = off_js * d + j
        for k in range(d):
            rows[k * out_args + off_js] = {col: v for col, v in acc[k].items() if v}
    return Matrix.from_sparse(d * out_args, d * in_inner, rows)


def cocycle_space(A: Algebra, n: int, max_degree: int = MAX_DEGREE) -> Subspace:
    return nullspace_basis(delta_matrix(A, n, max_degree))


def coboundary_space(A: Algebra, n: int, max_degree: int = MAX_DEGREE) -> Subspace:
    """Image of the coboundary landing in degree n; zero for n = 0."""
    if n < 0:
        raise DegreeError("degree must be nonnegative")
    if n == 0:
        return Subspace(A.dim, ())
    return column_space_basis(delta_matrix(A, n - 1, max_degree))


@dataclass
class CohomologyResult:
    degree: int
    z_dim: int
    b_dim: int
    h_dim: int
    z_basis: Subspace
    b_basis: Subspace
    coset_reps: list = field(default_factory=list)  # list[Cochain]


def cohomology(A: Algebra, n: int, max_degree: int = MAX_DEGREE) -> CohomologyResult:
    z = cocycle_space(A, n, max_degree)
    b = coboundary_space(A, n, max_degree)
    try:
        reps = extend_to_complement(b, z)
    except LinalgError as exc:
        raise RuntimeError(f"coboundaries not contained in cocycles in degree {n}") from exc
    return CohomologyResult(
        degree=n,
        z_dim=z.dim,
        b_dim=b.dim,
        h_dim=z.dim - b.dim,
        z_basis=z,
        b_basis=b,
        coset_reps=[Cochain(n, A.dim, v) for v in reps],
    )


def derivations_by_leibniz(A: Algebra) -> Subspace:
    """Solve the derivation system directly in the unknowns rho[t][k].

    For all i, j, t::

        sum_k c[i][j][k] rho[t][k] = sum_k (rho[k][i] c[k][j][t] + rho[k][j] c[i][k][t])

    Unknown rho[t][k] sits at flat position ``t*n + k``.
    """
    n = A.dim
    c = A.c
    rows = []
    for i in range(n):
        for j in range(n):
            for t in range(n):
                eq: dict = {}
                for k in range(n):
                    x = c[i][j][k]
                    if x:
                        col = t * n + k
                        eq[col] = eq.get(col, ZERO) + x
                    x = c[k][j][t]
                    if x:
                        col = k * n + i
                        eq[col] = eq.get(col, ZERO) - x
                    x = c[i][k][t]
                    if x:
                        col = k * n + j
                        eq[col] = eq.get(col, ZERO) - x
                rows.append({col: v for col, v in eq.items() if v})
    return nullspace_basis(Matrix.from_sparse(len(rows), n * n, rows))


def inner_derivations_by_ad(A: Algebra) -> Subspace:
    """Image of ``a -> rho(a)`` with ``rho[j][i] = sum_t a_t (c[i][t][j] - c[t][i][j])``."""
    n = A.dim
    c = A.c
    images = []
    for t in range(n):
        rho = [[c[i][t][j] - c[t][i][j] for i in range(n)] for j in range(n)]
        images.append([x for r in rho for x in r])
    return span(images, n * n)


def _as_rho(A: Algebra, rho) -> Matrix:
    if not isinstance(rho, Matrix):
        rho = Matrix(rho)
    if rho.shape != (A.dim, A.dim):
        raise ValueError(f"linear map must be {A.dim}x{A.dim}")
    return rho


def is_derivation(A: Algebra, rho) -> bool:
    """Leibniz rule ``rho(e_i e_j) = rho(e_i) e_j + e_i rho(e_j)`` on all basis pairs."""
    rho = _as_rho(A, rho)
    n = A.dim
    imgs = [rho.column(j) for j in range(n)]
    e = [basis_vector(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = rho @ A.c[i][j]
            a = multiply(A, imgs[i], e[j])
            b = multiply(A, e[i], imgs[j])
            if lhs != tuple(x + y for x, y in zip(a, b)):
                return False
    return True


def ad(A: Algebra, a: Sequence) -> Matrix:
    """Matrix of ``x -> x a - a x`` (column j is the image of e_j)."""
    n = A.dim
    a = tuple(as_scalar(x) for x in a)
    if len(a) != n:
        raise ValueError(f"element length must be {n}")
    cols = []
    for j in range(n):
        ej = basis_vector(n, j)
        xa = multiply(A, ej, a)
        ax = multiply(A, a, ej)
        cols.append(tuple(p - q for p, q in zip(xa, ax)))
    return Matrix.from_columns(cols, n)


def center_via_delta0(A: Algebra) -> Subspace:
    """Kernel of delta^0, which is the center."""
    return cocycle_space(A, 0)
