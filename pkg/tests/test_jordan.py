import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import FIELDS, operator_from_function, rand_invertible, rand_matrix, rand_rosz
from jmsfactor.errors import Singular
from jmsfactor.exactlinalg import Matrix, inverse
from jmsfactor.field import QQ
from jmsfactor.jordan import (Side, apply_operator, commutator, conj_operator, embed_corner,
                              identity_operator, index_unit, is_rank_one_square_zero,
                              jordan_product, op_assoc_mult, op_L, op_U, trace_pairing,
                              unit_index, unvec, vec)


def E(n, i, j, f=QQ):
    return Matrix.unit(f, n, i, j)


def test_basis_map_row_major():
    n = 3
    seen = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = unit_index(n, i, j)
            assert k == (i - 1) * n + j
            assert index_unit(n, k) == (i, j)
            seen.append(k)
    assert seen == list(range(1, n * n + 1))
    X = Matrix(QQ, [[1, 2], [3, 4]])
    assert vec(X).col_values(0) == [1, 2, 3, 4]
    assert unvec(vec(X)) == X


def test_jordan_product_examples():
    I = Matrix.identity(QQ, 2)
    assert jordan_product(I, I) == I
    h = Fraction(1, 2)
    assert jordan_product(E(2, 1, 2), E(2, 2, 1)) == Matrix.diag(QQ, [h, h])


def test_op_L_examples():
    for n in (1, 2, 3):
        assert op_L(Matrix.identity(QQ, n)) == identity_operator(QQ, n)
    out = apply_operator(op_L(E(2, 1, 2)), E(2, 2, 1))
    assert out == Matrix.diag(QQ, [Fraction(1, 2)] * 2)
    L = op_L(Matrix.diag(QQ, [0, 1]))
    assert [L[k, k] for k in range(4)] == [0, Fraction(1, 2), Fraction(1, 2), 1]
    assert L == Matrix.diag(QQ, [0, Fraction(1, 2), Fraction(1, 2), 1])


def test_op_U_examples():
    U = op_U(E(2, 1, 2))
    assert apply_operator(U, E(2, 2, 1)) == E(2, 1, 2)
    for ij in ((1, 1), (1, 2), (2, 2)):
        assert apply_operator(U, E(2, *ij)).is_zero()
    assert op_U(Matrix.identity(QQ, 3)).is_identity()


def test_assoc_mult_examples():
    I = Matrix.identity(QQ, 2)
    assert op_assoc_mult(I, Side.LEFT).is_identity()
    assert op_assoc_mult(I, "right").is_identity()
    T = op_assoc_mult(E(2, 1, 2), Side.LEFT) @ op_assoc_mult(E(2, 2, 1), Side.RIGHT)
    X = Matrix(QQ, [[1, 2], [3, 4]])
    assert apply_operator(T, X) == Matrix(QQ, [[4, 0], [0, 0]])


def test_conj_operator_examples():
    assert conj_operator(Matrix.identity(QQ, 2)).is_identity()
    assert conj_operator(Matrix.diag(QQ, [2, 2])).is_identity()
    with pytest.raises(Singular):
        conj_operator(E(2, 1, 2))


def test_trace_pairing_examples():
    assert trace_pairing(E(2, 1, 2), E(2, 2, 1)).value == 1
    assert trace_pairing(E(2, 1, 2), E(2, 1, 2)).value == 0
    assert trace_pairing(Matrix.identity(QQ, 3), Matrix.identity(QQ, 3)).value == 3


def test_rank_one_square_zero_examples():
    assert is_rank_one_square_zero(E(2, 1, 2))
    assert is_rank_one_square_zero(Matrix(QQ, [[-2, -1], [4, 2]]))
    assert not is_rank_one_square_zero(Matrix.identity(QQ, 2))
    assert not is_rank_one_square_zero(Matrix.zeros(QQ, 2))


def test_embed_corner():
    B = Matrix(QQ, [[1, 2], [3, 4]])
    C = embed_corner(B, 3, 1, 3)
    assert C == Matrix(QQ, [[1, 0, 2], [0, 0, 0], [3, 0, 4]])


# property tests: every operator against the column-by-column oracle

fields = st.sampled_from(FIELDS)
sizes = st.integers(1, 3)
seeds = st.integers(0, 10 ** 9)


@settings(max_examples=40, deadline=None)
@given(fields, sizes, seeds)
def test_operators_match_direct_products(f, n, seed):
    rng = random.Random(seed)
    A = rand_matrix(f, n, rng)
    half = f.half
    assert op_L(A) == operator_from_function(f, n, lambda X: (A @ X + X @ A).scale(half))
    assert op_U(A) == operator_from_function(f, n, lambda X: A @ X @ A)
    assert op_assoc_mult(A, Side.LEFT) == operator_from_function(f, n, lambda X: A @ X)
    assert op_assoc_mult(A, Side.RIGHT) == operator_from_function(f, n, lambda X: X @ A)
    S = rand_invertible(f, n, rng)
    Si = inverse(S)
    assert conj_operator(S) == operator_from_function(f, n, lambda X: S @ X @ Si)


@settings(max_examples=40, deadline=None)
@given(fields, sizes, seeds)
def test_operator_identities(f, n, seed):
    rng = random.Random(seed)
    A, B = rand_matrix(f, n, rng), rand_matrix(f, n, rng)
    assert jordan_product(A, B) == jordan_product(B, A)
    LA, LB = op_L(A), op_L(B)
    assert op_U(A) == (LA @ LA).scale(2) - op_L(A @ A)
    assert op_L(A).scale(2) == op_assoc_mult(A, Side.LEFT) + op_assoc_mult(A, Side.RIGHT)
    C = commutator(A, B)
    assert (LA @ LB - LB @ LA).scale(4) == op_assoc_mult(C, Side.LEFT) - op_assoc_mult(C, Side.RIGHT)
    lam, pi = op_assoc_mult(A, Side.LEFT), op_assoc_mult(B, Side.RIGHT)
    assert lam @ pi == pi @ lam


@settings(max_examples=40, deadline=None)
@given(fields, st.integers(2, 3), seeds)
def test_square_zero_identities(f, n, seed):
    rng = random.Random(seed)
    N = rand_rosz(f, n, rng)
    assert is_rank_one_square_zero(N)
    LN, UN = op_L(N), op_U(N)
    assert LN @ LN == UN.scale(f.half)
    assert (UN @ UN).is_zero()
    X = rand_matrix(f, n, rng)
    assert apply_operator(UN, X) == N.scale(trace_pairing(N, X).value)


@settings(max_examples=40, deadline=None)
@given(fields, sizes, seeds)
def test_conjugation_covariance(f, n, seed):
    rng = random.Random(seed)
    A = rand_matrix(f, n, rng)
    S = rand_invertible(f, n, rng)
    Si = inverse(S)
    Phi, Phi_i = conj_operator(S), conj_operator(Si)
    assert (Phi @ Phi_i).is_identity()
    assert Phi @ op_L(A) @ Phi_i == op_L(S @ A @ Si)
    assert Phi @ op_U(A) @ Phi_i == op_U(S @ A @ Si)
