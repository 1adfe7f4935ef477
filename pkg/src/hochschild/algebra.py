"""Finite-dimensional algebras given by structure constants.

The product is ``e_i e_j = sum_k c[i][j][k] e_k``.  Indices are 0-based
internally; labels and reports use the 1-based ``e1 .. en`` names.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .linalg import LinalgError, Matrix, Subspace, inverse, nullspace_basis, span
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "Algebra",
    "AssociativityReport",
    "multiply",
    "check_associativity",
    "descending_series",
    "chi_invariant",
    "is_nilpotent",
    "is_commutative",
    "center",
    "change_basis",
    "basis_vector",
]


@dataclass(frozen=True, eq=False)
class Algebra:
    name: str
    dim: int
    c: tuple  # c[i][j][k], nested tuples of Scalar
    basis_labels: tuple = ()
    params: Mapping[str, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        if not self.basis_labels:
            object.__setattr__(self, "basis_labels", tuple(f"e{k + 1}" for k in range(self.dim)))
        if len(self.basis_labels) != self.dim:
            raise ValueError("basis_labels length must equal dim")
        n = self.dim
        if len(self.c) != n or any(len(r) != n or any(len(t) != n for t in r) for r in self.c):
            raise ValueError(f"structure constants must be a {n}x{n}x{n} array")

    @classmethod
    def from_products(cls, name: str, dim: int, products: Mapping, **kw) -> "Algebra":
        """Build from ``{(i, j): {k: coeff}}`` with 1-based indices; absent pairs are zero."""
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in products.items():
            for k, coeff in terms.items():
                for idx in (i, j, k):
                    if not 1 <= idx <= dim:
                        raise ValueError(f"index {idx} out of range 1..{dim}")
                c[i - 1][j - 1][k - 1] = c[i - 1][j - 1][k - 1] + as_scalar(coeff)
        return cls(name, dim, _freeze(c), **kw)

    @classmethod
    def zero(cls, dim: int, name: str = "zero") -> "Algebra":
        return cls.from_products(name, dim, {})

    def product_table(self) -> dict:
        """Nonzero products as ``{(i, j): {k: Scalar}}`` with 1-based indices."""
        out = {}
        for i in range(self.dim):
            for j in range(self.dim):
                terms = {k + 1: x for k, x in enumerate(self.c[i][j]) if x}
                if terms:
                    out[(i + 1, j + 1)] = terms
        return out

    def same_constants(self, other: "Algebra") -> bool:
        return self.dim == other.dim and self.c == other.c

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, dim={self.dim})"


def _freeze(c) -> tuple:
    return tuple(tuple(tuple(t) for t in r) for r in c)


def basis_vector(n: int, i: int) -> tuple:
    return tuple(ONE if k == i else ZERO for k in range(n))


def multiply(A: Algebra, x: Sequence, y: Sequence) -> tuple:
    """Product of two elements given by coordinate vectors."""
    n = A.dim
    if len(x) != n or len(y) != n:
        raise ValueError(f"element length must be {n}")
    out = [ZERO] * n
    c = A.c
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            row = c[i][j]
            f = None
            for k, ck in enumerate(row):
                if ck:
                    if f is None:
                        f = xi * yj
                    out[k] = out[k] + f * ck
    return tuple(out)


@dataclass
class AssociativityReport:
    ok: bool
    violations: list = field(default_factory=list)  # (i, j, k, (xy)z, x(yz)), 1-based

    def first(self):
        return self.violations[0] if self.violations else None


def check_associativity(A: Algebra) -> AssociativityReport:
    """Exhaustive check of ``(e_i e_j) e_k == e_i (e_j e_k)`` over all basis triples."""
    n = A.dim
    e = [basis_vector(n, i) for i in range(n)]
    prod = [[A.c[i][j] for j in range(n)] for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = multiply(A, prod[i][j], e[k])
                right = multiply(A, e[i], prod[j][k])
                if left != right:
                    bad.append((i + 1, j + 1, k + 1, left, right))
    return AssociativityReport(not bad, bad)


def descending_series(A: Algebra) -> list[Subspace]:
    """``[A^1, A^2, ...]`` with ``A^k = A . A^(k-1)``.

    Stops at the first zero term, or when a term repeats the previous one
    (the algebra is then not nilpotent and the repeated term is dropped).
    """
    n = A.dim
    e = [basis_vector(n, i) for i in range(n)]
    series = [span(e, n)]
    while series[-1].dim > 0 and len(series) <= n:
        prev = series[-1]
        nxt = span([multiply(A, ei, v) for ei in e for v in prev.basis], n)
        if nxt == prev:
            break
        series.append(nxt)
    return series


def chi_invariant(A: Algebra) -> tuple:
    """``(dim A, dim A^2, ..., dim A^n)``."""
    dims = [s.dim for s in descending_series(A)]
    # a stabilized nonzero series keeps its last dimension
    while len(dims) < A.dim:
        dims.append(dims[-1])
    return tuple(dims[: A.dim])


def is_nilpotent(A: Algebra) -> bool:
    return descending_series(A)[-1].dim == 0


def is_commutative(A: Algebra) -> bool:
    n = A.dim
    return all(A.c[i][j] == A.c[j][i] for i in range(n) for j in range(i + 1, n))


def commutator_matrix(A: Algebra) -> Matrix:
    """n^2 x n matrix of ``x -> e_i x - x e_i`` stacked over i (row index i*n + k)."""
    n = A.dim
    c = A.c
    return Matrix._raw(
        [tuple(c[i][s][k] - c[s][i][k] for s in range(n)) for i in range(n) for k in range(n)],
        n,
    )


def center(A: Algebra) -> Subspace:
    """Elements commuting with every basis element."""
    return nullspace_basis(commutator_matrix(A))


def change_basis(A: Algebra, P) -> Algebra:
    """Constants of ``A`` in the basis ``f_j = sum_i P[i][j] e_i``."""
    if not isinstance(P, Matrix):
        P = Matrix(P)
    n = A.dim
    if P.shape != (n, n):
        raise ValueError(f"basis change must be {n}x{n}")
    try:
        Q = inverse(P)
    except LinalgError as exc:
        raise ValueError("basis change matrix is singular") from exc
    cols = [P.column(a) for a in range(n)]
    new = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            prod = multiply(A, cols[a], cols[b])  # f_a f_b in e-coordinates
            coords = Q @ prod
            new[a][b] = list(coords)
    return Algebra(A.name, n, _freeze(new), A.basis_labels, dict(A.params))
