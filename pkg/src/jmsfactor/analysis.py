"""Independent checks: the determinant product formula, character sums,
the determinant subgroup survey and a registry of exact operator identities.
"""
from __future__ import annotations

import cmath
import enum
import math
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable

from .errors import ExceptionalParameter, NotTriangular, TrivialCharacter, UnknownIdentity
from .exactlinalg import Matrix, determinant, inverse, rank
from .factor import _det_generators, det_bfs_table, m_det
from .field import QQ, Field, Scalar, is_prime, multiplicative_generator
from .gadgets import (R_CROSS, R_MINUS, R_PLUS, S_CROSS, corner_basis_2x2,
                      e12_word_matrices, four_factor_scalars, half_shift,
                      padded_e12_matrices)
from .jordan import (Side, apply_operator, commutator, conj_operator, op_assoc_mult,
                     op_L, op_U, trace_pairing, vec)
from .exactlinalg import hstack
from .transvect import word_conjugate, word_gR_inverse, word_u_of_N
from .words import Word, evaluate

# ---------------------------------------------------------------------------
# determinant of L_A


def _triangular(A: Matrix) -> bool:
    n = A.rows
    upper = all(not A[i, j] for i in range(n) for j in range(i))
    lower = all(not A[i, j] for i in range(n) for j in range(i + 1, n))
    return upper or lower


def det_L_formula(A: Matrix) -> Scalar:
    """2^(-n^2) prod_{i,j} (l_i + l_j) over the diagonal of a triangular A."""
    if not A.is_square or not _triangular(A):
        raise NotTriangular("the product formula is only evaluated on triangular matrices")
    f = A.field
    n = A.rows
    lam = [A[i, i] for i in range(n)]
    v = f.one
    for li in lam:
        for lj in lam:
            v = f.reduce(v * (li + lj) * f.half)
    return Scalar(f, v)


# ---------------------------------------------------------------------------
# multiplicative characters and the sum Sigma


class SigmaCase(enum.Enum):
    TRIVIAL_POWER = "TrivialPower"
    INVERSE = "InverseCase"
    JACOBI = "JacobiCase"


@dataclass(frozen=True)
class CharacterTable:
    p: int
    generator: int
    dlog: dict = dc_field(repr=False, compare=False)

    @classmethod
    def build(cls, p: int) -> "CharacterTable":
        g = multiplicative_generator(Field(p)).value
        dlog = {}
        x = 1
        for a in range(p - 1):
            dlog[x] = a
            x = x * g % p
        return cls(p, g, dlog)

    @property
    def order(self) -> int:
        return self.p - 1

    def chi(self, j: int, x: int) -> complex:
        """chi_j(g^a) = exp(2 pi i j a / (p-1)); every power vanishes at 0."""
        x %= self.p
        if x == 0:
            return 0j
        return cmath.exp(2j * math.pi * (j * self.dlog[x] % self.order) / self.order)


@dataclass(frozen=True)
class SigmaValue:
    p: int
    m: int
    j: int
    value: complex
    classification: SigmaCase

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    @property
    def expected_magnitude(self) -> float:
        return math.sqrt(self.p) if self.classification is SigmaCase.JACOBI else 1.0


def jacobi_sigma(p: int, m: int, j: int, table: CharacterTable | None = None) -> SigmaValue:
    """Sigma = sum_t chi(t) chi^m(t+1) for chi = chi_j on F_p."""
    Field(p)  # validates p
    q = p - 1
    if j % q == 0:
        raise TrivialCharacter("chi_0 is the trivial character")
    table = table or CharacterTable.build(p)
    s = sum(table.chi(j, t) * table.chi(j * m, t + 1) for t in range(p))
    if (j * m) % q == 0:
        case = SigmaCase.TRIVIAL_POWER
    elif (j * (m + 1)) % q == 0:
        case = SigmaCase.INVERSE
    else:
        case = SigmaCase.JACOBI
    return SigmaValue(p, m, j, s, case)


# ---------------------------------------------------------------------------
# determinant subgroup


@dataclass(frozen=True)
class DeltaSurvey:
    p: int
    n: int
    generators: tuple
    order: int
    table: dict

    @property
    def full(self) -> bool:
        return self.order == self.p - 1


def delta_survey(p: int, n: int) -> DeltaSurvey:
    """Subgroup of F_p^x generated by the determinants t((t+1)/2)^(2n-2),
    t != 0, -1 (and 2 when p = 3), with a shortest generator word for each
    element."""
    Field(p)
    table = det_bfs_table(p, n)
    return DeltaSurvey(p, n, tuple(_det_generators(p, n)), len(table), dict(table))


# ---------------------------------------------------------------------------
# identity registry


@dataclass
class IdentityResult:
    identity: str
    field: str
    n: int
    passed: bool
    counterexample: str | None = None

    def as_dict(self) -> dict:
        d = {"identity": self.identity, "field": self.field, "n": self.n, "pass": self.passed}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


def _show(*mats) -> str:
    parts = []
    for M in mats:
        if isinstance(M, Matrix):
            parts.append("[" + "; ".join(" ".join(M.field.render(x) for x in r) for r in M.entries) + "]")
        else:
            parts.append(str(M))
    return ", ".join(parts)


def random_matrix(f: Field, n: int, rng: random.Random, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return Matrix(f, [[f.random(rng) for _ in range(m)] for _ in range(n)])


def random_invertible(f: Field, n: int, rng: random.Random) -> Matrix:
    while True:
        S = random_matrix(f, n, rng)
        if determinant(S):
            return S


def random_rank_one_square_zero(f: Field, n: int, rng: random.Random) -> Matrix:
    """v w^T with w . v = 0 and v, w nonzero."""
    while True:
        v = [f.random(rng) for _ in range(n)]
        w = [f.random(rng) for _ in range(n)]
        k = next((i for i in range(n) if v[i]), None)
        if k is None:
            continue
        s = sum((w[i] * v[i] for i in range(n) if i != k), f.zero)
        w[k] = f.reduce(-s * f.inv(v[k]))
        if any(w):
            return Matrix(f, [[a * b for b in w] for a in v])


def random_triangular(f: Field, n: int, rng: random.Random) -> Matrix:
    upper = rng.random() < 0.5
    rows = [[f.random(rng) if (j >= i if upper else j <= i) else 0 for j in range(n)] for i in range(n)]
    return Matrix(f, rows)


Check = Callable[[Field, int, random.Random, int], "str | None"]
_REGISTRY: dict[str, tuple[str, Check]] = {}


def _register(name: str, doc: str):
    def deco(fn):
        _REGISTRY[name] = (doc, fn)
        return fn
    return deco


def identity_ids() -> list[str]:
    return list(_REGISTRY)


def describe_identity(name: str) -> str:
    return _REGISTRY[name][0]


def check_e12_word(field: Field, n: int, rows=None) -> str | None:
    """The fixed 16-factor (n = 2) or padded 20-factor (n >= 3) rational word
    evaluates to id + U_{E12}; ``rows`` replaces the sixteen 2x2 factors."""
    Q = QQ
    nn = max(n, 2)
    mats = e12_word_matrices(Q, rows) if nn == 2 else padded_e12_matrices(nn, rows)
    target = Matrix.identity(Q, nn * nn) + op_U(Matrix.unit(Q, nn, 1, 2))
    got = evaluate(Word(Q, nn, tuple(mats)))
    if got != target:
        diff = [(i + 1, j + 1) for i in range(nn * nn) for j in range(nn * nn) if got[i, j] != target[i, j]]
        return f"word differs from id + U_E12 at operator entries {diff[:6]}"
    return None


@_register("e12-word", "sixteen (or padded twenty) rational factors give id + U_E12")
def _chk_e12(field, n, rng, samples):
    return check_e12_word(QQ, n)


def check_e12_scalars(rows=None) -> str | None:
    Q = QQ
    C = [half_shift(B) for B in e12_word_matrices(Q, rows)]
    I = Matrix.identity(Q, 2)
    expected = [((1, 2), Fraction(13, 16)), ((11, 12), Fraction(13, 16)), ((3, 4), Fraction(1, 4)),
                ((5, 6), Fraction(1, 4)), ((13, 14), Fraction(1, 4)), ((15, 16), Fraction(1, 4)),
                ((7, 8), 1), ((9, 10), 1)]
    for (a, b), c in expected:
        if C[a - 1] @ C[b - 1] != I.scale(c):
            return f"C{a} C{b} != {c} I"
    prod = I
    for Ck in C:
        prod = prod @ Ck
    if prod != I.scale(Fraction(169, 65536)):
        return f"C1...C16 = {_show(prod)}"
    return None


@_register("e12-scalars", "pairwise products of (B_k + I)/2 and their total product")
def _chk_e12_scalars(field, n, rng, samples):
    return check_e12_scalars()


def _m2_cases(f: Field):
    """(label, operator builder in t, expected matrix in the corner basis)."""
    def M(rows):
        return Matrix(f, rows)

    e12, e21 = M([[0, 1], [0, 0]]), M([[0, 0], [1, 0]])
    red = f.reduce
    h = f.half

    def eps(*terms):
        def build(t):
            rows = [[f.one if r == c else f.zero for c in range(4)] for r in range(4)]
            for (r, c), coef in terms:
                rows[r - 1][c - 1] = red(rows[r - 1][c - 1] + coef * t)
            return Matrix(f, rows)
        return build

    return [
        ("u_E12(t)", lambda t: word_u_of_N(e12, t), eps(((2, 1), 1))),
        ("g_E12 u_E21(t) g^-1", lambda t: word_conjugate(e12, e21, t), eps(((1, 2), 1))),
        ("g_R+ u_E21(t) g^-1", lambda t: word_conjugate(M(R_PLUS), e21, t),
         eps(((1, 2), h), ((1, 3), -h), ((1, 4), 1))),
        ("g_R- u_E21(t) g^-1", lambda t: word_conjugate(M(R_MINUS), e21, t),
         eps(((1, 2), h), ((1, 3), -h), ((1, 4), -1))),
        ("g_2E21 u_E12(s) g^-1", lambda t: word_conjugate(e21.scale(2), e12, t), eps(((3, 2), 2))),
        ("g_R u_S(t) g^-1", lambda t: word_conjugate(M(R_CROSS), M(S_CROSS), t),
         eps(((1, 2), -1), ((3, 2), 1), ((4, 2), 1))),
    ]


def corner_basis_matrix(f: Field) -> Matrix:
    return hstack([vec(B) for B in corner_basis_2x2(f)])


@_register("m2-conjugates", "six conjugates g_P u_Q(t) g_P^-1 on M_2 in the corner basis")
def _chk_m2(field, n, rng, samples):
    P = corner_basis_matrix(field)
    Pi = inverse(P)
    for label, build, expected in _m2_cases(field):
        for _ in range(samples):
            t = field.random(rng)
            got = Pi @ evaluate(build(t)) @ P
            if got != expected(t):
                return f"{label} at t = {field.render(t)}: got {_show(got)}"
    return None


@_register("left-right-multiplication", "2 L_A = left(A) + right(A), 4 [L_A, L_B] = left([A,B]) - right([A,B]), left and right commute")
def _chk_lr(field, n, rng, samples):
    for _ in range(samples):
        A, B = random_matrix(field, n, rng), random_matrix(field, n, rng)
        LA, LB = op_L(A), op_L(B)
        lam = op_assoc_mult(A, Side.LEFT)
        if LA.scale(2) != lam + op_assoc_mult(A, Side.RIGHT):
            return f"2 L_A != left + right for A = {_show(A)}"
        C = commutator(A, B)
        if (LA @ LB - LB @ LA).scale(4) != op_assoc_mult(C, Side.LEFT) - op_assoc_mult(C, Side.RIGHT):
            return f"commutator identity fails for A, B = {_show(A, B)}"
        rho = op_assoc_mult(B, Side.RIGHT)
        if lam @ rho != rho @ lam:
            return f"left(A) and right(B) do not commute for {_show(A, B)}"
    return None


@_register("quadratic-operator", "U_A = 2 L_A^2 - L_{A^2} is X -> AXA")
def _chk_quad(field, n, rng, samples):
    for _ in range(samples):
        A = random_matrix(field, n, rng)
        LA = op_L(A)
        if op_U(A) != (LA @ LA).scale(2) - op_L(A @ A):
            return f"U_A mismatch for A = {_show(A)}"
    return None


@_register("square-zero", "L_N^2 = U_N / 2 for N^2 = 0; U_N X = <N,X> N, rank U_N = 1, U_N^2 = 0 for rank one")
def _chk_sqzero(field, n, rng, samples):
    for _ in range(samples):
        N = random_rank_one_square_zero(field, n, rng)
        LN, UN = op_L(N), op_U(N)
        if LN @ LN != UN.scale(field.half):
            return f"L_N^2 != U_N/2 for N = {_show(N)}"
        X = random_matrix(field, n, rng)
        if apply_operator(UN, X) != N.scale(trace_pairing(N, X).value):
            return f"U_N X != <N,X> N for N, X = {_show(N, X)}"
        if rank(UN) != 1 or not (UN @ UN).is_zero():
            return f"U_N is not rank one square-zero for N = {_show(N)}"
    return None


@_register("conjugation-covariance", "Phi_S L_A Phi_S^-1 = L_{SAS^-1} and the same for U")
def _chk_conj(field, n, rng, samples):
    for _ in range(samples):
        A, S = random_matrix(field, n, rng), random_invertible(field, n, rng)
        Phi = conj_operator(S)
        Phi_i = inverse(Phi)
        B = S @ A @ inverse(S)
        if Phi @ op_L(A) @ Phi_i != op_L(B) or Phi @ op_U(A) @ Phi_i != op_U(B):
            return f"covariance fails for A, S = {_show(A, S)}"
    return None


@_register("g-inverse", "the inverse of L_{I+R} is id - L_R + L_R^2 = (id + U_R/2) L_{I-R}, realized by a word")
def _chk_ginv(field, n, rng, samples):
    d = n * n
    Id = Matrix.identity(field, d)
    I = Matrix.identity(field, n)
    for _ in range(samples):
        R = random_rank_one_square_zero(field, n, rng)
        g = op_L(I + R)
        LR = op_L(R)
        w = evaluate(word_gR_inverse(R))
        if w @ g != Id or g @ w != Id or w != Id - LR + LR @ LR:
            return f"g_R inverse fails for R = {_show(R)}"
    return None


@_register("four-factor-scalars", "v1 v2 v3 v4 = 1 and prod (1 + v_j) = sigma")
def _chk_four(field, n, rng, samples):
    bad = {field.reduce(c) for c in (0, 2, -2, -4)}
    if field.modulus is not None and len(bad) == field.modulus:
        # over F_3 every sigma is excluded; the recipe must refuse all of them
        for s in range(field.modulus):
            try:
                four_factor_scalars(s, field)
            except ExceptionalParameter:
                continue
            return f"sigma = {s} should be excluded"
        return None
    done = 0
    while done < samples:
        s = field.random(rng, bound=50, max_den=7)
        if s in bad:
            continue
        vs = four_factor_scalars(s, field)
        prod = field.one
        prod1 = field.one
        for v in vs:
            prod = field.reduce(prod * v)
            prod1 = field.reduce(prod1 * (1 + v))
        if prod != field.one or prod1 != s:
            return f"four-factor scalars fail at sigma = {field.render(s)}"
        done += 1
    return None


@_register("det-formula", "det L_A = 2^(-n^2) prod (l_i + l_j) and singularity iff some l_i + l_j = 0")
def _chk_det(field, n, rng, samples):
    for _ in range(samples):
        A = random_triangular(field, n, rng)
        d = determinant(op_L(A))
        if d != det_L_formula(A):
            return f"determinant mismatch for A = {_show(A)}"
        lam = [A[i, i] for i in range(n)]
        crit = any(not field.reduce(a + b) for a in lam for b in lam)
        if crit != (not d):
            return f"singularity criterion fails for A = {_show(A)}"
    return None


@_register("u-inverse", "u_N(t) u_N(-t) = id, with u_N(t) = id + t U_N realized by words")
def _chk_uinv(field, n, rng, samples):
    Id = Matrix.identity(field, n * n)
    for _ in range(samples):
        N = random_rank_one_square_zero(field, n, rng)
        t = field.random(rng)
        a, b = evaluate(word_u_of_N(N, t)), evaluate(word_u_of_N(N, field.reduce(-t)))
        if a != Id + op_U(N).scale(t) or a @ b != Id:
            return f"u_N(t) fails for N = {_show(N)}, t = {field.render(t)}"
    return None


def _runs_over(name: str, field: Field) -> Field:
    # the fixed rational words are checked over Q whatever field is requested
    return QQ if name in ("e12-word", "e12-scalars") else field


def check_identities(which: str = "all", field: Field = QQ, n: int = 2, samples: int = 30,
                     seed: int = 0) -> list[IdentityResult]:
    """Run one registered identity (or all of them) and report pass/fail."""
    if which == "all":
        names = list(_REGISTRY)
    elif which in _REGISTRY:
        names = [which]
    else:
        raise UnknownIdentity(f"unknown identity {which!r}; known: {', '.join(_REGISTRY)}")
    out = []
    for name in names:
        f = _runs_over(name, field)
        nn = 2 if name == "m2-conjugates" else n
        rng = random.Random(f"{seed}:{name}:{f}:{nn}")
        bad = _REGISTRY[name][1](f, nn, rng, samples)
        out.append(IdentityResult(name, str(f), nn, bad is None, bad))
    return out
