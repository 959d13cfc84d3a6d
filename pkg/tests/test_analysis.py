import cmath
import math
import random
from fractions import Fraction

import pytest

from helpers import leibniz_det
from jmsfactor.analysis import (CharacterTable, SigmaCase, check_e12_scalars, check_e12_word,
                                check_identities, delta_survey, det_L_formula, describe_identity,
                                identity_ids, jacobi_sigma, random_triangular)
from jmsfactor.errors import NotPrime, NotTriangular, TrivialCharacter, UnknownIdentity
from jmsfactor.exactlinalg import Matrix, determinant
from jmsfactor.field import QQ, Field
from jmsfactor.gadgets import E12_WORD_ROWS
from jmsfactor.jordan import op_L


def test_det_formula_examples():
    for n in (2, 3):
        assert det_L_formula(Matrix.diag(QQ, [0] + [1] * (n - 1))).value == 0
        for u in (Fraction(3), Fraction(-2, 5)):
            A = Matrix.diag(QQ, [u] + [1] * (n - 1))
            assert det_L_formula(A).value == u * ((u + 1) / 2) ** (2 * n - 2)
        assert det_L_formula(Matrix.identity(QQ, n)).value == 1
    with pytest.raises(NotTriangular):
        det_L_formula(Matrix(QQ, [[1, 2], [3, 4]]))


@pytest.mark.parametrize("f", [QQ, Field(5), Field(7)], ids=str)
@pytest.mark.parametrize("n", [2, 3])
def test_det_formula_random_triangular(f, n):
    rng = random.Random(n)
    for _ in range(50):
        A = random_triangular(f, n, rng)
        L = op_L(A)
        v = det_L_formula(A).value
        assert v == determinant(L).value
        lam = [A[i, i] for i in range(n)]
        singular = any(f.reduce(a + b) == 0 for a in lam for b in lam)
        assert (v == 0) == singular
    if n == 2:
        A = random_triangular(f, 2, rng)
        assert det_L_formula(A).value == leibniz_det(op_L(A))


def test_character_table():
    t = CharacterTable.build(7)
    assert t.generator == 3 and t.order == 6
    for j in range(6):
        assert t.chi(j, 0) == 0
        for x in range(1, 7):
            for y in range(1, 7):
                assert abs(t.chi(j, x * y) - t.chi(j, x) * t.chi(j, y)) < 1e-9
    assert all(abs(t.chi(0, x) - 1) < 1e-12 for x in range(1, 7))


def test_jacobi_examples():
    s = jacobi_sigma(5, 2, 2)
    assert s.classification is SigmaCase.TRIVIAL_POWER and abs(s.magnitude - 1) < 1e-6
    s = jacobi_sigma(5, 2, 1)
    assert s.classification is SigmaCase.JACOBI and abs(s.magnitude - math.sqrt(5)) < 1e-6
    s = jacobi_sigma(7, 2, 2)
    assert s.classification is SigmaCase.INVERSE and abs(s.magnitude - 1) < 1e-6
    with pytest.raises(TrivialCharacter):
        jacobi_sigma(5, 2, 0)
    with pytest.raises(NotPrime):
        jacobi_sigma(9, 2, 1)


def _gauss(p, table, j):
    return sum(table.chi(j, x) * cmath.exp(2j * math.pi * x / p) for x in range(1, p))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
@pytest.mark.parametrize("m", [2, 4])
def test_jacobi_against_gauss_sums(p, m):
    # Sigma = chi(-1) J(chi, chi^m), and J(a, b) = G(a) G(b) / G(ab) when a, b, ab are nontrivial
    table = CharacterTable.build(p)
    q = p - 1
    for j in range(1, q):
        s = jacobi_sigma(p, m, j, table)
        assert s.magnitude <= math.sqrt(p) + 1e-6
        assert s.magnitude < p - 2
        if (j * m) % q and (j * (m + 1)) % q:
            J = _gauss(p, table, j) * _gauss(p, table, j * m) / _gauss(p, table, j * (m + 1))
            assert abs(s.value - table.chi(j, -1) * J) < 1e-9
            assert s.classification is SigmaCase.JACOBI
        else:
            assert abs(s.magnitude - 1) < 1e-6


def _closure(p, gens):
    group = {1}
    frontier = {1}
    while frontier:
        new = {g * h % p for g in frontier for h in gens} - group
        group |= new
        frontier = new
    return group


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("n", [2, 3])
def test_delta_survey_matches_exhaustive_generation(p, n):
    gens = {t * pow((t + 1) * pow(2, -1, p), 2 * n - 2, p) % p for t in range(1, p - 1)}
    if p == 3:
        gens.add(2)
    s = delta_survey(p, n)
    assert s.full and s.order == p - 1
    assert set(s.table) == _closure(p, gens) == set(range(1, p))
    for g, labels in s.table.items():
        v = 1
        for lab in labels:
            v = v * (2 if lab == "B" else lab * pow((lab + 1) * pow(2, -1, p), 2 * n - 2, p)) % p
        assert v == g


def test_delta_survey_p3_needs_b():
    s = delta_survey(3, 2)
    assert s.order == 2
    assert s.table[2] == ("B",)


@pytest.mark.parametrize("f", [QQ, Field(3), Field(5), Field(7)], ids=str)
@pytest.mark.parametrize("n", [2, 3])
def test_check_identities_all_pass(f, n):
    results = check_identities("all", f, n, samples=10)
    assert {r.identity for r in results} == set(identity_ids())
    bad = [(r.identity, r.counterexample) for r in results if not r.passed]
    assert bad == []


def test_check_identities_single_and_unknown():
    res = check_identities("left-right-multiplication", Field(7), 2)
    assert len(res) == 1 and res[0].passed and res[0].field == "Fp:7"
    d = res[0].as_dict()
    assert d["pass"] is True and d["identity"] == "left-right-multiplication"
    with pytest.raises(UnknownIdentity):
        check_identities("no-such-id")
    for name in identity_ids():
        assert describe_identity(name)


def test_negative_control_corrupted_b3():
    rows = [list(map(list, r)) for r in E12_WORD_ROWS]
    rows[2][0][1] = 4  # B3 = [[1,3],[1,1]] becomes [[1,4],[1,1]]
    assert check_e12_word(QQ, 2) is None
    assert check_e12_word(QQ, 2, rows) is not None
    assert check_e12_word(QQ, 3, rows) is not None
    assert check_e12_scalars() is None
    msg = check_e12_scalars(rows)
    assert msg is not None and "C3" in msg
