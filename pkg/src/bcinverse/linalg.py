"""Exact linear algebra over Q and GF(p).

Every routine works on :class:`Matrix` values whose entries are canonical
scalars of a field object (``Rationals`` or ``PrimeField`` from
:mod:`bcinverse.rings`).  The field is duck-typed: it must provide
``raw_zero``, ``raw_one``, ``add``, ``sub``, ``mul``, ``neg`` and ``inv``.
No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ShapeError


@dataclass(frozen=True)
class Matrix:
    field: object
    nrows: int
    ncols: int
    rows: tuple

    @classmethod
    def from_rows(cls, field, rows: Sequence[Sequence], ncols: Optional[int] = None) -> "Matrix":
        rows = tuple(tuple(field.normalize(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise ShapeError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged matrix rows")
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        z = field.raw_zero
        return cls(field, nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        z, o = field.raw_zero, field.raw_one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other, same_shape=False):
        if self.field != other.field:
            raise ShapeError(f"field mismatch: {self.field} vs {other.field}")
        if same_shape and self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check(other, same_shape=True)
        add = self.field.add
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(tuple(add(x, y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        self._check(other, same_shape=True)
        sub = self.field.sub
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(tuple(sub(x, y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __matmul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix(self.field, self.nrows, other.ncols,
                      raw_matmul(self.field, self.rows, other.rows, self.ncols, other.ncols))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows,
                      tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols)))

    T = property(transpose)

    def is_zero(self) -> bool:
        z = self.field.raw_zero
        return all(x == z for row in self.rows for x in row)

    def submatrix(self, rows=None, cols=None) -> "Matrix":
        rows = range(self.nrows) if rows is None else list(rows)
        cols = range(self.ncols) if cols is None else list(cols)
        return Matrix(self.field, len(rows), len(cols),
                      tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def hstack(self, other) -> "Matrix":
        self._check(other)
        if self.nrows != other.nrows:
            raise ShapeError("hstack needs equal row counts")
        return Matrix(self.field, self.nrows, self.ncols + other.ncols,
                      tuple(r + s for r, s in zip(self.rows, other.rows)))

    def vstack(self, other) -> "Matrix":
        self._check(other)
        if self.ncols != other.ncols:
            raise ShapeError("vstack needs equal column counts")
        return Matrix(self.field, self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {[list(map(str, r)) for r in self.rows]})"


def raw_matmul(F, A, B, inner, ncols):
    """Product of row-tuple matrices; ``inner`` and ``ncols`` fix shapes when rows are empty."""
    add, mul, z = F.add, F.mul, F.raw_zero
    out = []
    for row in A:
        new = []
        for j in range(ncols):
            acc = z
            for k in range(inner):
                x = row[k]
                if x != z:
                    acc = add(acc, mul(x, B[k][j]))
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


@dataclass(frozen=True)
class RREF:
    reduced: Matrix
    rank: int
    pivots: tuple
    transform: Matrix


def rref(A: Matrix) -> RREF:
    """Gauss-Jordan elimination tracking the row operations.

    ``transform @ A == reduced`` holds exactly; pivots are chosen as the first
    nonzero entry at or below the current row.
    """
    F = A.field
    z = F.raw_zero
    m, n = A.nrows, A.ncols
    M = [list(r) for r in A.rows]
    T = [list(r) for r in Matrix.identity(F, m).rows]
    pivots = []
    r = 0
    for col in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if M[i][col] != z), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        T[r], T[piv] = T[piv], T[r]
        inv = F.inv(M[r][col])
        M[r] = [F.mul(inv, x) for x in M[r]]
        T[r] = [F.mul(inv, x) for x in T[r]]
        for i in range(m):
            if i != r and M[i][col] != z:
                f = M[i][col]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
                T[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(T[i], T[r])]
        pivots.append(col)
        r += 1
    reduced = Matrix(F, m, n, tuple(tuple(row) for row in M))
    transform = Matrix(F, m, m, tuple(tuple(row) for row in T))
    return RREF(reduced, r, tuple(pivots), transform)


def rank(A: Matrix) -> int:
    return rref(A).rank


def solve_right(A: Matrix, B: Matrix) -> Optional[Matrix]:
    """Return X with ``A @ X == B``, or None when the system is inconsistent.

    Free variables are set to zero, so the particular solution is deterministic.
    """
    if A.field != B.field:
        raise ShapeError("field mismatch")
    if A.nrows != B.nrows:
        raise ShapeError(f"cannot solve {A.shape} X = {B.shape}")
    red = rref(A)
    TB = red.transform @ B
    z = A.field.raw_zero
    for i in range(red.rank, A.nrows):
        if any(x != z for x in TB.rows[i]):
            return None
    X = [[z] * B.ncols for _ in range(A.ncols)]
    for i, col in enumerate(red.pivots):
        X[col] = list(TB.rows[i])
    return Matrix(A.field, A.ncols, B.ncols, tuple(tuple(r) for r in X))


def solve_left(A: Matrix, B: Matrix) -> Optional[Matrix]:
    """Return X with ``X @ A == B`` (same zero-free-variable convention)."""
    X = solve_right(A.T, B.T)
    return None if X is None else X.T


def inverse(A: Matrix) -> Optional[Matrix]:
    if A.nrows != A.ncols:
        raise ShapeError("inverse of a non-square matrix")
    red = rref(A)
    if red.rank < A.nrows:
        return None
    return red.transform


@dataclass(frozen=True)
class RankFactorization:
    left: Matrix
    right: Matrix
    rank: int


def rank_factorization(A: Matrix) -> RankFactorization:
    """A = left @ right with left the pivot columns of A and right the nonzero RREF rows."""
    red = rref(A)
    left = A.submatrix(cols=red.pivots)
    right = red.reduced.submatrix(rows=range(red.rank))
    return RankFactorization(left, right, red.rank)


def inner_inverse_matrix(A: Matrix) -> Matrix:
    """A canonical inner inverse X (A X A = A) built from the RREF of A.

    With ``T A = R`` the rows ``T[:r]`` are a left inverse of the pivot columns
    and the pivot-selection matrix is a right inverse of ``R[:r]``.
    """
    red = rref(A)
    F = A.field
    z, o = F.raw_zero, F.raw_one
    sel = Matrix(F, A.ncols, red.rank,
                 tuple(tuple(o if red.pivots[j] == i else z for j in range(red.rank))
                       for i in range(A.ncols)))
    return sel @ red.transform.submatrix(rows=range(red.rank))


def group_inverse_matrix(A: Matrix) -> Optional[Matrix]:
    """Group inverse via a rank factorization, or None when rank(A) != rank(A^2)."""
    if A.nrows != A.ncols:
        raise ShapeError("group inverse of a non-square matrix")
    fac = rank_factorization(A)
    if fac.rank == 0:
        return Matrix.zeros(A.field, A.nrows, A.ncols)
    core = inverse(fac.right @ fac.left)
    if core is None:
        return None
    Y = fac.left @ core @ core @ fac.right
    if not (A @ Y @ A == A and Y @ A @ Y == Y and A @ Y == Y @ A):
        raise ArithmeticError("group inverse failed its own axioms")
    return Y


def column_space_contains(A: Matrix, X: Matrix) -> bool:
    """True iff every column of X lies in the column space of A."""
    return rank(A.hstack(X)) == rank(A)


def row_space_contains(A: Matrix, X: Matrix) -> bool:
    return rank(A.vstack(X)) == rank(A)
