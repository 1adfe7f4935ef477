"""Dense exact linear algebra over :class:`~hochschild.scalar.Scalar`.

Everything is deterministic: pivots are the first nonzero entry found
scanning columns left to right and rows top to bottom, and subspaces are
stored by the RREF of their basis rows so that equal subspaces compare
equal structurally.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, as_scalar, format_scalar

Vector = tuple  # tuple[Scalar, ...]

__all__ = [
    "Matrix",
    "Subspace",
    "LinalgError",
    "rref",
    "rank",
    "nullspace_basis",
    "column_space_basis",
    "extend_to_complement",
    "span",
    "inverse",
    "solve_in_span",
]


class LinalgError(ValueError):
    pass


class Matrix:
    """Row-major dense matrix of Scalars; treat as immutable."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = [tuple(as_scalar(x) for x in row) for row in data]
        if cols is None:
            if not rows:
                raise LinalgError("column count required for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise LinalgError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows

    @classmethod
    def _raw(cls, rows: list, cols: int) -> "Matrix":
        m = object.__new__(cls)
        m.rows = len(rows)
        m.cols = cols
        m._data = rows
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        zrow = (ZERO,) * cols
        return cls._raw([zrow] * rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(
            [tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)], n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        columns = [tuple(as_scalar(x) for x in c) for c in columns]
        if nrows is None:
            if not columns:
                raise LinalgError("row count required for a matrix with no columns")
            nrows = len(columns[0])
        return cls._raw([tuple(c[i] for c in columns) for i in range(nrows)], len(columns))

    @classmethod
    def from_sparse(cls, rows: int, cols: int, entries: Sequence[dict]) -> "Matrix":
        """Build from one ``{col: Scalar}`` dict per row."""
        data = []
        zrow = (ZERO,) * cols
        for d in entries:
            if not d:
                data.append(zrow)
                continue
            r = [ZERO] * cols
            for c, v in d.items():
                r[c] = v
            data.append(tuple(r))
        return cls._raw(data, cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def row_list(self) -> list:
        return list(self._data)

    def transpose(self) -> "Matrix":
        return Matrix._raw(
            [tuple(r[j] for r in self._data) for j in range(self.cols)], self.rows
        )

    def is_zero(self) -> bool:
        return not any(x for r in self._data for x in r)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise LinalgError(f"shape mismatch {self.shape} @ {other.shape}")
            # both operands are usually very sparse (coboundary matrices)
            other_nz = [[(j, x) for j, x in enumerate(r) if x] for r in other._data]
            out = []
            for r in self._data:
                acc: dict = {}
                for k, a in enumerate(r):
                    if not a:
                        continue
                    for j, b in other_nz[k]:
                        v = acc.get(j)
                        acc[j] = a * b if v is None else v + a * b
                out.append(acc)
            return Matrix.from_sparse(self.rows, other.cols, out)
        vec = tuple(other)
        if len(vec) != self.cols:
            raise LinalgError("vector length does not match column count")
        res = []
        for r in self._data:
            s = ZERO
            for a, b in zip(r, vec):
                if a and b:
                    s = s + a * b
            res.append(s)
        return tuple(res)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise LinalgError("shape mismatch")
        return Matrix._raw(
            [tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)],
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise LinalgError("shape mismatch")
        return Matrix._raw(
            [tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)],
            self.cols,
        )

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix._raw([tuple(c * a for a in r) for r in self._data], self.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self._data)))

    def __repr__(self) -> str:
        return f"Matrix({self.to_strings()!r})"

    def to_strings(self) -> list[list[str]]:
        return [[format_scalar(x) for x in r] for r in self._data]


def _rref_rows(rows: list, ncols: int) -> tuple[list, list]:
    """Gauss-Jordan on a list of mutable row lists; returns (rows, pivots)."""
    pivots = []
    nrows = len(rows)
    prow = 0
    for col in range(ncols):
        if prow == nrows:
            break
        for r in range(prow, nrows):
            if rows[r][col]:
                break
        else:
            continue
        if r != prow:
            rows[prow], rows[r] = rows[r], rows[prow]
        pivot_row = rows[prow]
        p = pivot_row[col]
        if p != ONE:
            pinv = p.inv()
            for c in range(col, ncols):
                if pivot_row[c]:
                    pivot_row[c] = pivot_row[c] * pinv
        nz = [c for c in range(col, ncols) if pivot_row[c]]
        for r in range(nrows):
            if r == prow:
                continue
            row = rows[r]
            f = row[col]
            if not f:
                continue
            for c in nz:
                row[c] = row[c] - f * pivot_row[c]
        pivots.append(col)
        prow += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows, pivots = _rref_rows([list(r) for r in m._data], m.cols)
    return Matrix._raw([tuple(r) for r in rows], m.cols), pivots


def rank(m: Matrix) -> int:
    return len(_rref_rows([list(r) for r in m._data], m.cols)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``ambient_dim``-space held by its canonical (RREF) basis."""

    ambient_dim: int
    basis: tuple  # tuple of Vector, rows of an RREF matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return solve_in_span(self, v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def as_matrix(self) -> Matrix:
        """Basis vectors as matrix rows."""
        return Matrix._raw(list(self.basis), self.ambient_dim)

    def pivots(self) -> list[int]:
        return [next(k for k, x in enumerate(v) if x) for v in self.basis]

    def __repr__(self) -> str:
        vecs = [[format_scalar(x) for x in v] for v in self.basis]
        return f"Subspace(ambient_dim={self.ambient_dim}, basis={vecs})"


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by ``vectors`` (dependencies allowed)."""
    rows = [[as_scalar(x) for x in v] for v in vectors]
    for r in rows:
        if len(r) != ambient_dim:
            raise LinalgError("vector length does not match ambient dimension")
    rows, pivots = _rref_rows(rows, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(r) for r in rows[: len(pivots)]))


def nullspace_basis(m: Matrix) -> Subspace:
    """Canonical basis of ``{v : m v = 0}``."""
    n = m.cols
    rows, pivots = _rref_rows([list(r) for r in m._data], n)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    vecs = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for r, pc in enumerate(pivots):
            x = rows[r][f]
            if x:
                v[pc] = -x
        vecs.append(v)
    return span(vecs, n)


def column_space_basis(m: Matrix) -> Subspace:
    return span(m.transpose()._data, m.rows)


def solve_in_span(sub: Subspace, v: Sequence) -> tuple | None:
    """Coefficients ``a`` with ``sum a_k basis_k == v``, or None if v is not in the span.

    Uses the RREF structure of the stored basis: the coefficient of basis
    vector k is the entry of v at that vector's pivot.
    """
    v = tuple(as_scalar(x) for x in v)
    if len(v) != sub.ambient_dim:
        raise LinalgError("vector length does not match ambient dimension")
    coeffs = tuple(v[p] for p in sub.pivots())
    acc = [ZERO] * sub.ambient_dim
    for a, b in zip(coeffs, sub.basis):
        if a:
            for k, x in enumerate(b):
                if x:
                    acc[k] = acc[k] + a * x
    return coeffs if tuple(acc) == v else None


def extend_to_complement(sub: Subspace, ambient: Subspace) -> list[Vector]:
    """Greedily pick vectors of ``ambient.basis`` completing ``sub`` to a basis of ``ambient``."""
    if sub.ambient_dim != ambient.ambient_dim:
        raise LinalgError("ambient dimensions differ")
    if not ambient.contains_subspace(sub):
        raise LinalgError("subspace is not contained in the ambient subspace")
    n = sub.ambient_dim
    current = sub
    picked = []
    for v in ambient.basis:
        if len(picked) == ambient.dim - sub.dim:
            break
        if not current.contains(v):
            picked.append(v)
            current = span(list(current.basis) + [v], n)
    return picked


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise LinalgError("only square matrices are invertible")
    n = m.rows
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m._data)]
    rows, pivots = _rref_rows(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise LinalgError("matrix is singular")
    return Matrix._raw([tuple(r[n:]) for r in rows], n)
