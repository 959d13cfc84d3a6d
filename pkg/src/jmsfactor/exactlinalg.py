"""Exact dense matrices over Q or F_p.

Entries are stored as raw field values (``Fraction`` or ``int`` residues) in a
tuple of row tuples, which keeps matrices immutable and hashable.  All
elimination routines pick the first nonzero pivot in scan order, so results are
deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (DimensionMismatch, FieldMismatch, Inconsistent, NotSquare,
                     Singular)
from .field import QQ, Field, Scalar


class Matrix:
    __slots__ = ("field", "rows", "cols", "entries", "_hash")

    def __init__(self, field: Field, entries: Sequence[Sequence], _trusted=False):
        self.field = field
        if _trusted:
            rows = entries
        else:
            red = field.reduce
            rows = tuple(tuple(red(x) if not isinstance(x, str) else field.parse(x) for x in r)
                         for r in entries)
        self.entries = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise DimensionMismatch("ragged entry grid")
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def _raw(cls, field, rows):
        return cls(field, rows, _trusted=True)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        z = field.zero
        return cls._raw(field, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, field: Field, values: Iterable) -> "Matrix":
        vals = [field.reduce(v) for v in values]
        z = field.zero
        n = len(vals)
        return cls._raw(field, tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def unit(cls, field: Field, n: int, i: int, j: int, m: int | None = None) -> "Matrix":
        """Matrix unit E_ij (1-based indices) of size n x m."""
        m = n if m is None else m
        z, o = field.zero, field.one
        return cls._raw(field, tuple(tuple(o if (a == i - 1 and b == j - 1) else z for b in range(m))
                                     for a in range(n)))

    @classmethod
    def column(cls, field: Field, values: Iterable) -> "Matrix":
        return cls(field, [[v] for v in values])

    # basic protocol -----------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def scalar(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self.entries[i][j])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.entries))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(self.field.render(x) for x in r) for r in self.entries)
        return f"Matrix[{self.field}]({body})"

    def tolist(self):
        return [list(r) for r in self.entries]

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    # arithmetic ---------------------------------------------------------

    def _map2(self, other, op):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        p = self.field.modulus
        if p is None:
            rows = tuple(tuple(op(a, b) for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        else:
            rows = tuple(tuple(op(a, b) % p for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        return Matrix._raw(self.field, rows)

    def __add__(self, other):
        return self._map2(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._map2(other, lambda a, b: a - b)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = self.field.reduce(c)
        p = self.field.modulus
        if p is None:
            rows = tuple(tuple(c * x for x in r) for r in self.entries)
        else:
            rows = tuple(tuple(c * x % p for x in r) for r in self.entries)
        return Matrix._raw(self.field, rows)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, tuple(zip(*self.entries)) if self.rows else ())

    @property
    def T(self):
        return self.transpose()

    def trace(self):
        if not self.is_square:
            raise NotSquare("trace of a non-square matrix")
        s = sum((self.entries[i][i] for i in range(self.rows)), self.field.zero)
        return self.field.reduce(s)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.field, self.rows)

    def determinant(self) -> Scalar:
        return determinant(self)

    def inverse(self) -> "Matrix":
        return inverse(self)

    def rank(self) -> int:
        return rank(self)

    def col(self, j: int) -> "Matrix":
        return Matrix._raw(self.field, tuple((r[j],) for r in self.entries))

    def col_values(self, j: int) -> list:
        return [r[j] for r in self.entries]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    A._check(B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    cols = tuple(zip(*B.entries)) if B.rows else ((),) * B.cols
    p = A.field.modulus
    if p is None:
        z = Fraction(0)
        rows = tuple(tuple(sum((a * b for a, b in zip(r, c) if a and b), z) for c in cols)
                     for r in A.entries)
    else:
        rows = tuple(tuple(sum(a * b for a, b in zip(r, c)) % p for c in cols) for r in A.entries)
    return Matrix._raw(A.field, rows)


def hstack(blocks: Sequence[Matrix]) -> Matrix:
    f = blocks[0].field
    rows = tuple(tuple(x for b in blocks for x in b.entries[i]) for i in range(blocks[0].rows))
    return Matrix._raw(f, rows)


def block_diag(field: Field, blocks: Sequence[Matrix]) -> Matrix:
    n = sum(b.rows for b in blocks)
    z = field.zero
    rows = []
    off = 0
    for b in blocks:
        for r in b.entries:
            rows.append((z,) * off + tuple(r) + (z,) * (n - off - b.cols))
        off += b.cols
    return Matrix._raw(field, tuple(rows))


def permutation_matrix(field: Field, perm: Sequence[int]) -> Matrix:
    """Matrix Q with (Q v)_k = v_perm[k] (0-based)."""
    n = len(perm)
    z, o = field.zero, field.one
    return Matrix._raw(field, tuple(tuple(o if j == perm[i] else z for j in range(n)) for i in range(n)))


# elimination ---------------------------------------------------------------

def _rref(field: Field, rows: list[list]) -> list[tuple[int, int]]:
    """In-place reduced row echelon form; returns (row, col) pivot positions.

    The pivot in each column is the first nonzero entry at or below the
    current row, columns scanned left to right.
    """
    p = field.modulus
    inv = field.inv
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        k = next((i for i in range(r, m) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        piv = inv(rows[r][c])
        row = rows[r]
        if p is None:
            row[:] = [x * piv for x in row]
        else:
            row[:] = [x * piv % p for x in row]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                if p is None:
                    rows[i] = [a - f * b for a, b in zip(rows[i], row)]
                else:
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], row)]
        pivots.append((r, c))
        r += 1
    return pivots


def rank(A: Matrix) -> int:
    rows = [list(r) for r in A.entries]
    return len(_rref(A.field, rows))


def determinant(A: Matrix) -> Scalar:
    """Determinant by Gaussian elimination with first-nonzero pivots."""
    if not A.is_square:
        raise NotSquare(f"determinant of a {A.shape} matrix")
    f = A.field
    p = f.modulus
    n = A.rows
    rows = [list(r) for r in A.entries]
    det = f.one
    for c in range(n):
        k = next((i for i in range(c, n) if rows[i][c]), None)
        if k is None:
            return Scalar(f, f.zero)
        if k != c:
            rows[c], rows[k] = rows[k], rows[c]
            det = -det
        piv = rows[c][c]
        det = det * piv
        ip = f.inv(piv)
        for i in range(c + 1, n):
            if rows[i][c]:
                m = rows[i][c] * ip
                if p is None:
                    rows[i] = [a - m * b for a, b in zip(rows[i], rows[c])]
                else:
                    rows[i] = [(a - m * b) % p for a, b in zip(rows[i], rows[c])]
    return Scalar(f, f.reduce(det))


def inverse(A: Matrix) -> Matrix:
    if not A.is_square:
        raise NotSquare(f"inverse of a {A.shape} matrix")
    f = A.field
    n = A.rows
    z, o = f.zero, f.one
    rows = [list(r) + [o if i == j else z for j in range(n)] for i, r in enumerate(A.entries)]
    piv = _rref(f, rows)
    if len(piv) < n or piv[-1][1] >= n:
        raise Singular("matrix is not invertible")
    return Matrix._raw(f, tuple(tuple(r[n:]) for r in rows))


def solve_linear(A: Matrix, b: Matrix | Sequence) -> Matrix:
    """One exact solution x of A x = b (free variables set to 0)."""
    f = A.field
    bvals = b.col_values(0) if isinstance(b, Matrix) else [f.reduce(x) for x in b]
    if len(bvals) != A.rows:
        raise DimensionMismatch("right-hand side has the wrong length")
    rows = [list(r) + [bv] for r, bv in zip(A.entries, bvals)]
    piv = _rref(f, rows)
    n = A.cols
    x = [f.zero] * n
    for r, c in piv:
        if c == n:
            raise Inconsistent("right-hand side is not in the column span")
        x[c] = rows[r][n]
    return Matrix._raw(f, tuple((v,) for v in x))


def kernel_basis(A: Matrix) -> list[Matrix]:
    """Null-space basis, one vector per free column in increasing order."""
    f = A.field
    rows = [list(r) for r in A.entries]
    piv = _rref(f, rows)
    pivcols = {c: r for r, c in piv}
    n = A.cols
    basis = []
    for free in range(n):
        if free in pivcols:
            continue
        v = [f.zero] * n
        v[free] = f.one
        for c, r in pivcols.items():
            v[c] = f.reduce(-rows[r][free])
        basis.append(Matrix._raw(f, tuple((x,) for x in v)))
    return basis


@dataclass(frozen=True)
class RankNormalForm:
    U: Matrix
    r: int
    W: Matrix

    def middle(self) -> Matrix:
        f = self.U.field
        d = self.U.rows
        return Matrix.diag(f, [1] * self.r + [0] * (d - self.r))

    def reconstruct(self) -> Matrix:
        return self.U @ self.middle() @ self.W


def rank_normal_form(T: Matrix) -> RankNormalForm:
    """T = U diag(I_r, 0) W by full Gauss-Jordan with recorded operations.

    Row operations are accumulated into L and column operations into R so that
    L T R = diag(I_r, 0); then U = L^-1 and W = R^-1.  The pivot at step k is
    the first nonzero entry of the trailing block in row-major order.
    """
    if not T.is_square:
        raise NotSquare(f"rank normal form of a {T.shape} matrix")
    f = T.field
    p = f.modulus
    d = T.rows
    M = [list(r) for r in T.entries]
    Lm = [list(r) for r in Matrix.identity(f, d).entries]
    Rm = [list(r) for r in Matrix.identity(f, d).entries]

    def red(x):
        return x if p is None else x % p

    k = 0
    while k < d:
        pos = next(((i, j) for i in range(k, d) for j in range(k, d) if M[i][j]), None)
        if pos is None:
            break
        i, j = pos
        M[k], M[i] = M[i], M[k]
        Lm[k], Lm[i] = Lm[i], Lm[k]
        for row in M:
            row[k], row[j] = row[j], row[k]
        for row in Rm:
            row[k], row[j] = row[j], row[k]
        s = f.inv(M[k][k])
        M[k] = [red(x * s) for x in M[k]]
        Lm[k] = [red(x * s) for x in Lm[k]]
        for i2 in range(d):
            if i2 != k and M[i2][k]:
                c = M[i2][k]
                M[i2] = [red(a - c * b) for a, b in zip(M[i2], M[k])]
                Lm[i2] = [red(a - c * b) for a, b in zip(Lm[i2], Lm[k])]
        for j2 in range(k + 1, d):
            c = M[k][j2]
            if c:
                for row in M:
                    row[j2] = red(row[j2] - c * row[k])
                for row in Rm:
                    row[j2] = red(row[j2] - c * row[k])
        k += 1
    L = Matrix._raw(f, tuple(tuple(r) for r in Lm))
    R = Matrix._raw(f, tuple(tuple(r) for r in Rm))
    return RankNormalForm(inverse(L), k, inverse(R))


def as_matrix(field: Field, rows) -> Matrix:
    return Matrix(field, rows)


__all__ = ["Matrix", "RankNormalForm", "QQ", "mat_mul", "determinant", "inverse", "solve_linear",
           "kernel_basis", "rank_normal_form", "rank", "hstack", "block_diag", "permutation_matrix"]
