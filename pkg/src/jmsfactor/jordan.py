"""Operators on M_n(K) written as n^2 x n^2 matrices.

Coordinates are row-major: the unit E_ij (1-based) sits at position
(i-1)*n + j.  Operator matrices act on coordinate columns from the left, so
composing P after Q is the matrix product P @ Q.
"""
from __future__ import annotations

import enum
from math import isqrt

from .errors import DimensionMismatch, DimensionNotSquare, NotSquare
from .exactlinalg import Matrix, inverse, rank
from .field import Field, Scalar


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def unit_index(n: int, i: int, j: int) -> int:
    """1-based coordinate position of E_ij."""
    return (i - 1) * n + j


def index_unit(n: int, k: int) -> tuple[int, int]:
    """Inverse of ``unit_index``."""
    q, r = divmod(k - 1, n)
    return q + 1, r + 1


def operator_n(T: Matrix) -> int:
    """n for a d x d operator matrix with d = n^2."""
    if not T.is_square:
        raise NotSquare(f"operator matrix must be square, got {T.shape}")
    n = isqrt(T.rows)
    if n * n != T.rows:
        raise DimensionNotSquare(f"{T.rows} is not a perfect square")
    return n


def _square(A: Matrix) -> int:
    if not A.is_square:
        raise NotSquare(f"expected a square matrix, got {A.shape}")
    return A.rows


def vec(X: Matrix) -> Matrix:
    return Matrix._raw(X.field, tuple((x,) for r in X.entries for x in r))


def unvec(v: Matrix, n: int | None = None) -> Matrix:
    vals = v.col_values(0)
    n = isqrt(len(vals)) if n is None else n
    return Matrix._raw(v.field, tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(n)))


def apply_operator(T: Matrix, X: Matrix) -> Matrix:
    return unvec(T @ vec(X), X.rows)


def identity_operator(field: Field, n: int) -> Matrix:
    return Matrix.identity(field, n * n)


def jordan_product(A: Matrix, B: Matrix) -> Matrix:
    if _square(A) != _square(B):
        raise DimensionMismatch(f"{A.shape} vs {B.shape}")
    return (A @ B + B @ A).scale(A.field.half)


def commutator(A: Matrix, B: Matrix) -> Matrix:
    return A @ B - B @ A


def _kron_op(A: Matrix, left: bool, right: bool) -> Matrix:
    # entry [(i,j),(k,l)] of X -> cL*A X + cR*X A
    f = A.field
    n = _square(A)
    p = f.modulus
    a = A.entries
    z = f.zero
    half = f.half if (left and right) else f.one
    rows = []
    for i in range(n):
        for j in range(n):
            row = [z] * (n * n)
            if left:
                for k in range(n):
                    if a[i][k]:
                        row[k * n + j] += a[i][k]
            if right:
                for l in range(n):
                    if a[l][j]:
                        row[i * n + l] += a[l][j]
            if left and right:
                row = [x * half for x in row]
            if p is not None:
                row = [x % p for x in row]
            rows.append(tuple(row))
    return Matrix._raw(f, tuple(rows))


def op_L(A: Matrix) -> Matrix:
    """Matrix of X -> A o X = (AX + XA)/2."""
    return _kron_op(A, True, True)


def op_assoc_mult(A: Matrix, side: Side | str) -> Matrix:
    """Matrix of X -> AX (left) or X -> XA (right)."""
    side = Side(side) if not isinstance(side, Side) else side
    return _kron_op(A, side is Side.LEFT, side is Side.RIGHT)


def op_U(A: Matrix) -> Matrix:
    """Matrix of X -> AXA."""
    f = A.field
    n = _square(A)
    p = f.modulus
    a = A.entries
    z = f.zero
    rows = []
    for i in range(n):
        for j in range(n):
            # (AXA)_ij = sum_kl a_ik x_kl a_lj
            row = []
            for k in range(n):
                for l in range(n):
                    v = a[i][k] * a[l][j]
                    row.append(v % p if p is not None else v)
            rows.append(tuple(row))
    return Matrix._raw(f, tuple(rows))


def conj_operator(S: Matrix) -> Matrix:
    """Matrix of X -> S X S^-1 (raises Singular when S is not invertible)."""
    Si = inverse(S)
    return op_assoc_mult(S, Side.LEFT) @ op_assoc_mult(Si, Side.RIGHT)


def trace_pairing(X: Matrix, Y: Matrix) -> Scalar:
    if _square(X) != _square(Y):
        raise DimensionMismatch(f"{X.shape} vs {Y.shape}")
    f = X.field
    n = X.rows
    s = sum((X.entries[i][k] * Y.entries[k][i] for i in range(n) for k in range(n)), f.zero)
    return Scalar(f, f.reduce(s))


def is_rank_one_square_zero(N: Matrix) -> bool:
    _square(N)
    return rank(N) == 1 and (N @ N).is_zero()


def embed_corner(B: Matrix, n: int, i: int, j: int) -> Matrix:
    """Place a 2x2 matrix on rows/cols (i, j) of an n x n zero matrix (1-based)."""
    f = B.field
    pos = (i - 1, j - 1)
    rows = [[f.zero] * n for _ in range(n)]
    for a in range(2):
        for b in range(2):
            rows[pos[a]][pos[b]] = B.entries[a][b]
    return Matrix._raw(f, tuple(tuple(r) for r in rows))
