import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import (PRIME_FIELDS, leibniz_det, power_inverse, rand_invertible, rand_matrix,
                     rand_rank, rand_sl, tau_matrix)
from jmsfactor.errors import (DimensionNotSquare, ExceptionalParameter, NotSingular, NotSL,
                              Singular, ZeroDeterminant)
from jmsfactor.exactlinalg import Matrix, determinant, inverse, rank
from jmsfactor.factor import (det_bfs_table, det_match_word, factorize, idempotent_word,
                              is_exceptional, m_det, sl_decompose, swap_matrix, word_for_gl,
                              word_for_singular, word_for_sl, word_m_u_inverse)
from jmsfactor.field import QQ, Field
from jmsfactor.jordan import identity_operator, op_L, op_U
from jmsfactor.transvect import TransvectionSpec
from jmsfactor.words import evaluate


def test_sl_decompose_examples():
    F5 = Field(5)
    dec = sl_decompose(Matrix.identity(F5, 4))
    assert dec.pre_specs == () and dec.post_specs == ()
    assert all(x == 1 for x in dec.diagonal)
    T = tau_matrix(F5, 2, (1, 2), (2, 2), 3)
    dec = sl_decompose(T)
    assert dec.replay(F5) == T
    assert len(dec.all_specs(F5)) <= 4
    rng = random.Random(4)
    for _ in range(20):
        G = rand_sl(F5, 4, rng)
        dec = sl_decompose(G)
        assert dec.replay(F5) == G
        prod = 1
        for a in dec.diagonal:
            prod = prod * a % 5
        assert prod == 1
    with pytest.raises(NotSL):
        sl_decompose(Matrix.diag(F5, [2, 1]))


def test_sl_decompose_zero_pivot_tiebreak():
    # g11 = 0: row 1 += 1 * (first row r with g_r1 != 0); specs record inverses
    G = Matrix(QQ, [[0, 1], [-1, 0]])
    dec = sl_decompose(G)
    assert dec.pre_specs[0] == TransvectionSpec(1, 2, -1)
    assert dec.replay(QQ) == G
    G = Matrix(QQ, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    dec = sl_decompose(G)
    assert dec.pre_specs[0] == TransvectionSpec(1, 3, -1)
    assert dec.replay(QQ) == G


@pytest.mark.parametrize("f", [QQ] + PRIME_FIELDS, ids=str)
def test_sl_decompose_replay_random(f):
    rng = random.Random(9)
    for d in (2, 3, 4, 5):
        for _ in range(10):
            G = rand_sl(f, d, rng)
            assert sl_decompose(G).replay(f) == G
            # the full spec list (diagonal via 2x2 gadgets) also multiplies out to G
            acc = Matrix.identity(f, d)
            from jmsfactor.factor import _elementary
            for s in sl_decompose(G).all_specs(f):
                acc = acc @ _elementary(f, d, s)
            assert acc == G


def test_word_for_sl_examples():
    F3 = Field(3)
    assert len(word_for_sl(identity_operator(F3, 2))) == 0
    T = tau_matrix(QQ, 2, (2, 1), (1, 1), Fraction(7, 2))
    assert evaluate(word_for_sl(T)) == T
    rng = random.Random(1)
    for _ in range(5):
        G = rand_sl(F3, 4, rng)
        assert evaluate(word_for_sl(G)) == G


def test_m_u_inverse_examples():
    for n in (2, 3):
        A = Matrix.diag(QQ, [3] + [1] * (n - 1))
        w = word_m_u_inverse(QQ(3), n)
        assert len(w) == 5
        assert (evaluate(w) @ op_L(A)).is_identity()
    with pytest.raises(ExceptionalParameter):
        word_m_u_inverse(QQ(0), 2)
    with pytest.raises(ExceptionalParameter):
        word_m_u_inverse(QQ(-1), 2)
    F7 = Field(7)
    # sigma(2) = 128/9 = 1 in F_7, which is admissible
    assert F7.reduce(Fraction(128, 9)) == 1
    assert not is_exceptional(F7, 2)
    w = word_m_u_inverse(F7(2), 2)
    assert (evaluate(w) @ op_L(Matrix.diag(F7, [2, 1]))).is_identity()


def test_m_u_inverse_matches_power_oracle():
    # over a finite field the inverse of L_A is also a power of L_A
    for f in (Field(5), Field(7)):
        for u in range(1, f.modulus):
            if is_exceptional(f, u):
                with pytest.raises(ExceptionalParameter):
                    word_m_u_inverse(f(u), 2)
                continue
            L = op_L(Matrix.diag(f, [u, 1]))
            assert evaluate(word_m_u_inverse(f(u), 2)) == power_inverse(L)


def test_exceptional_set_over_q():
    # u in B iff u in {0, -1} or 64u/(u+1)^2 in {2, -2, -4}
    for u in (Fraction(k, m) for k in range(-12, 13) for m in (1, 2, 3)):
        if u in (0, -1):
            assert is_exceptional(QQ, u)
            continue
        sigma = 64 * u / (u + 1) ** 2
        assert is_exceptional(QQ, u) == (sigma in (2, -2, -4))


def test_m_det_formula_against_leibniz():
    for f in (QQ, Field(5)):
        for n in (2, 3):
            for u in (2, 3, 4):
                L = op_L(Matrix.diag(f, [u] + [1] * (n - 1)))
                assert determinant(L).value == m_det(f, n, u)
    L = op_L(Matrix.diag(QQ, [5, 1]))
    assert leibniz_det(L) == m_det(QQ, 2, 5)


def test_det_match_examples():
    assert determinant(evaluate(det_match_word(QQ(1), 2))).value == 1
    F3 = Field(3)
    w = det_match_word(F3(2), 2)
    assert len(w) == 1 and w.factors[0] == Matrix(F3, [[0, 1], [1, 1]])
    assert determinant(evaluate(w)).value == 2
    w = det_match_word(QQ(5), 2)
    assert determinant(evaluate(w)).value == 5
    with pytest.raises(ZeroDeterminant):
        det_match_word(QQ(0), 2)
    assert determinant(evaluate(det_match_word(QQ(-3), 1))).value == -3


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("n", [2, 3])
def test_det_match_all_units(p, n):
    f = Field(p)
    assert set(det_bfs_table(p, n)) == set(range(1, p))
    for g in range(1, p):
        assert determinant(evaluate(det_match_word(f(g), n))).value == g


def test_det_match_random_rationals():
    rng = random.Random(3)
    for _ in range(20):
        g = QQ.random_nonzero(rng, 50, 9)
        for n in (2, 3):
            w = det_match_word(QQ(g), n)
            assert determinant(evaluate(w)).value == g


def test_word_for_gl_examples():
    assert evaluate(word_for_gl(identity_operator(QQ, 2))).is_identity()
    A = Matrix(QQ, [[2, 1], [0, 3]])
    L = op_L(A)
    assert evaluate(word_for_gl(L)) == L
    rng = random.Random(5)
    F5 = Field(5)
    for _ in range(10):
        G = rand_invertible(F5, 4, rng)
        assert evaluate(word_for_gl(G)) == G
    with pytest.raises(Singular):
        word_for_gl(Matrix.zeros(QQ, 4))


@pytest.mark.parametrize("strategy", ["diagonal", "idempotents"])
def test_word_for_singular_examples(strategy):
    F3 = Field(3)
    Z = Matrix.zeros(F3, 4)
    assert evaluate(word_for_singular(Z, strategy)) == Z
    L = op_L(Matrix.diag(F3, [0, 1]))
    assert evaluate(word_for_singular(L, strategy)) == L
    rng = random.Random(2)
    T = rand_rank(F3, 4, 2, rng)
    assert evaluate(word_for_singular(T, strategy)) == T
    with pytest.raises(NotSingular):
        word_for_singular(identity_operator(F3, 2), strategy)


@pytest.mark.parametrize("strategy", ["diagonal", "idempotents"])
@pytest.mark.parametrize("f", [QQ, Field(3), Field(5)], ids=str)
def test_word_for_singular_every_rank(strategy, f):
    rng = random.Random(6)
    for r in range(4):
        T = rand_rank(f, 4, r, rng)
        assert evaluate(word_for_singular(T, strategy)) == T


def test_commuting_idempotents():
    f = Field(5)
    n = 2
    d = n * n
    w, E = idempotent_word(f, n)
    assert evaluate(w) == E == Matrix.diag(f, [1] * (d - 1) + [0])
    Es = {}
    for k in range(1, d + 1):
        P = swap_matrix(f, d, k)
        Es[k] = P @ E @ inverse(P)
        assert Es[k] == Matrix.diag(f, [0 if c == k - 1 else 1 for c in range(d)])
    for a in Es.values():
        for b in Es.values():
            assert a @ b == b @ a
    for r in range(d + 1):
        prod = Matrix.identity(f, d)
        for k in range(r + 1, d + 1):
            prod = prod @ Es[k]
        assert prod == Matrix.diag(f, [1] * r + [0] * (d - r))


def test_factorize_examples():
    for n in (1, 2, 3):
        rep = factorize(identity_operator(QQ, n))
        assert rep.verified
    assert factorize(identity_operator(QQ, 2)).length == 0
    U = op_U(Matrix.unit(QQ, 2, 1, 2))
    rep = factorize(U)
    assert rep.verified and rank(U) == 1
    rng = random.Random(0)
    T = Matrix(QQ, [[rng.randint(-3, 3) for _ in range(9)] for _ in range(9)])
    rep = factorize(T)
    assert rep.verified and evaluate(rep.word) == T
    assert set(rep.stats) >= {"length", "build_seconds", "verify_seconds"}
    with pytest.raises(DimensionNotSquare):
        factorize(Matrix.identity(QQ, 3))


def test_factorize_n1():
    rep = factorize(Matrix(QQ, [[Fraction(-2, 7)]]))
    assert rep.verified and rep.length == 1
    assert rep.word.factors[0] == Matrix(QQ, [[Fraction(-2, 7)]])
    assert factorize(Matrix(Field(3), [[0]])).verified


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(PRIME_FIELDS), st.integers(0, 4), st.integers(0, 10 ** 9))
def test_factorize_round_trip_n2(f, r, seed):
    T = rand_rank(f, 4, r, random.Random(seed))
    rep = factorize(T)
    assert rep.verified and evaluate(rep.word) == T


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_factorize_round_trip_q_n2(seed):
    T = rand_matrix(QQ, 4, random.Random(seed), bound=3)
    rep = factorize(T)
    assert rep.verified and evaluate(rep.word) == T
