"""Fixed matrices and scalar recipes used by the word builders."""
from __future__ import annotations

from fractions import Fraction as F

from .errors import ExceptionalParameter
from .exactlinalg import Matrix, block_diag
from .field import Field

# Sixteen 2x2 matrices whose L-operators compose to id + U_{E12} on M_2(Q).
# Each listed pair (index, rows); repeated matrices are listed explicitly.
_B = {
    1: [[1, F(3, 2)], [F(1, 2), 1]],
    2: [[1, F(-3, 2)], [F(-1, 2), 1]],
    3: [[1, 3], [1, 1]],
    4: [[1, -3], [-1, 1]],
    5: [[1, 1], [3, 1]],
    6: [[1, -1], [-3, 1]],
    7: [[1, 0], [1, 1]],
    8: [[1, 0], [-1, 1]],
    11: [[1, F(1, 2)], [F(3, 2), 1]],
    12: [[1, F(-1, 2)], [F(-3, 2), 1]],
}
_B[9], _B[10] = _B[7], _B[8]
_B[13], _B[14] = _B[5], _B[6]
_B[15], _B[16] = _B[3], _B[4]

E12_WORD_ROWS = [_B[k] for k in range(1, 17)]

# Square of the scalar that the padding factors must supply for n >= 3.
SIGMA0 = F(1024, 13) ** 2


def e12_word_matrices(field: Field, rows=None) -> list[Matrix]:
    rows = E12_WORD_ROWS if rows is None else rows
    return [Matrix(field, r) for r in rows]


def four_factor_scalars(sigma, field: Field) -> tuple:
    """Scalars v1..v4 with v1 v2 v3 v4 = 1 and prod (1 + v_j) = sigma.

    Defined whenever sigma is not 0, 2, -2 or -4.
    """
    s = field.reduce(sigma)
    bad = {field.reduce(c) for c in (0, 2, -2, -4)}
    if s in bad:
        raise ExceptionalParameter(f"sigma = {field.render(s)} is excluded")
    inv = field.inv
    red = field.reduce
    v1 = red(-8 * inv(red(s * (s + 2))))
    v2 = red((s + 2) * inv(red(s - 2)))
    v3 = red((s - 2) * (s + 4) * inv(red(8)))
    v4 = red(-s * inv(red(s + 4)))
    return v1, v2, v3, v4


def padding_scalars() -> tuple:
    return four_factor_scalars(SIGMA0, Field())


def padded_e12_matrices(n: int, rows=None) -> list[Matrix]:
    """D1..D4 followed by the sixteen matrices placed in the top-left 2x2 block (n >= 3)."""
    Q = Field()
    I_rest = Matrix.identity(Q, n - 2)
    out = []
    for v in padding_scalars():
        out.append(Matrix.diag(Q, [v, v] + [1] * (n - 2)))
    for B in e12_word_matrices(Q, rows):
        out.append(block_diag(Q, [B, I_rest]))
    return out


def half_shift(B: Matrix) -> Matrix:
    """(B + I)/2, the scalar a factor L_B contributes on its commutant."""
    return (B + Matrix.identity(B.field, B.rows)).scale(B.field.half)


# 2x2 matrices for the corner constructions.
R_PLUS = [[1, 1], [-1, -1]]
R_MINUS = [[-1, 1], [-1, 1]]
R_CROSS = [[-2, -1], [4, 2]]
S_CROSS = [[-1, -1], [1, 1]]


def corner_basis_2x2(field: Field) -> list[Matrix]:
    """Basis (E21 + I/2, E12, I + E12, E11 - E22) of M_2 in which the corner
    transvections x_rs are written."""
    h = field.half
    return [Matrix(field, [[h, 0], [1, h]]), Matrix(field, [[0, 1], [0, 0]]),
            Matrix(field, [[1, 1], [0, 1]]), Matrix(field, [[1, 0], [0, -1]])]


def q3_det_two(field: Field, n: int) -> Matrix:
    """diag(B, I) with B = [[0,1],[1,1]]; over F_3 its L-operator has determinant 2."""
    B = Matrix(field, [[0, 1], [1, 1]])
    return block_diag(field, [B, Matrix.identity(field, n - 2)]) if n > 2 else B
