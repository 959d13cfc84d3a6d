"""Factor an arbitrary operator on M_n(K) into Jordan multiplication operators.

Pipeline:

* determinant one: Gaussian elimination into transvections and a diagonal,
  the diagonal rewritten as transvections, each transvection replaced by its
  word;
* invertible: first a short word with the right determinant, then the
  determinant-one remainder;
* singular: T = G1 D G2 with G1, G2 invertible and D a product of
  L-operators of diagonal matrices with entries in {0, 1, -1}.
"""
from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from . import words as _words
from .errors import (DimensionNotSquare, ExceptionalParameter, NotSingular, NotSL,
                     Singular, UnsupportedField, ZeroDeterminant)
from .exactlinalg import (Matrix, determinant, inverse, permutation_matrix,
                          rank_normal_form)
from .field import Field, Scalar
from .gadgets import four_factor_scalars, q3_det_two
from .jordan import index_unit, op_L, operator_n
from .transvect import Basis, TransvectionSpec, _tau_direct, word_standard_tau
from .words import FactorizationReport, Word, concat, evaluate

# ---------------------------------------------------------------------------
# determinant one


@dataclass(frozen=True)
class SLDecomposition:
    """G = (prod pre_specs) diag(diagonal) (prod post_specs), positions 1-based."""

    pre_specs: tuple
    diagonal: tuple
    post_specs: tuple

    def diagonal_specs(self, field: Field) -> list[TransvectionSpec]:
        """The diagonal as H_1(a1) H_2(a1 a2) ... with each 2x2 block
        diag(c, 1/c) = [[1,c-1],[0,1]] [[1,0],[1,1]] [[1,1/c-1],[0,1]] [[1,0],[-c,1]]."""
        out = []
        c = field.one
        red = field.reduce
        for i, a in enumerate(self.diagonal[:-1], start=1):
            c = red(c * a)
            if c == field.one:
                continue
            for tgt, src, t in ((i, i + 1, c - 1), (i + 1, i, 1),
                                (i, i + 1, field.inv(c) - 1), (i + 1, i, -c)):
                t = red(t)
                if t:
                    out.append(TransvectionSpec(tgt, src, t))
        return out

    def all_specs(self, field: Field) -> list[TransvectionSpec]:
        return list(self.pre_specs) + self.diagonal_specs(field) + list(self.post_specs)

    def replay(self, field: Field) -> Matrix:
        d = len(self.diagonal)
        acc = Matrix.identity(field, d)
        for s in self.pre_specs:
            acc = acc @ _elementary(field, d, s)
        acc = acc @ Matrix.diag(field, self.diagonal)
        for s in self.post_specs:
            acc = acc @ _elementary(field, d, s)
        return acc


def _elementary(field: Field, d: int, s: TransvectionSpec) -> Matrix:
    rows = [list(r) for r in Matrix.identity(field, d).entries]
    rows[s.target_index - 1][s.source_index - 1] = field.reduce(s.t)
    return Matrix._raw(field, tuple(tuple(r) for r in rows))


def _pivot_shifts(field: Field):
    if field.modulus is None:
        k = 1
        while True:
            yield k
            yield -k
            k += 1
    else:
        yield from range(1, field.modulus)


def sl_decompose(G: Matrix) -> SLDecomposition:
    """Gaussian elimination of a determinant-one matrix into transvections."""
    f = G.field
    if not G.is_square or determinant(G).value != f.one:
        raise NotSL("expected a square matrix of determinant 1")
    red = f.reduce
    d = G.rows
    M = [list(r) for r in G.entries]
    left, right = [], []

    def row_add(a, b, c):  # row a += c row b
        M[a] = [red(x + c * y) for x, y in zip(M[a], M[b])]
        left.append((a, b, c))

    def col_add(a, b, c):  # col b += c col a
        for row in M:
            row[b] = red(row[b] + c * row[a])
        right.append((a, b, c))

    for k in range(d):
        if not M[k][k]:
            r = next(r for r in range(k + 1, d) if M[r][k])
            t = next(red(t) for t in _pivot_shifts(f) if red(M[k][k] + t * M[r][k]))
            row_add(k, r, t)
        inv = f.inv(M[k][k])
        for r in range(k + 1, d):
            if M[r][k]:
                row_add(r, k, red(-M[r][k] * inv))
        for s in range(k + 1, d):
            if M[k][s]:
                col_add(k, s, red(-M[k][s] * inv))
    pre = tuple(TransvectionSpec(a + 1, b + 1, red(-c)) for a, b, c in left)
    post = tuple(TransvectionSpec(a + 1, b + 1, red(-c)) for a, b, c in reversed(right))
    return SLDecomposition(pre, tuple(M[k][k] for k in range(d)), post)


def word_for_sl(G: Matrix) -> Word:
    """Word evaluating to a determinant-one operator."""
    n = operator_n(G)
    dec = sl_decompose(G)
    f = G.field
    parts = [_tau_direct(f, n, index_unit(n, s.target_index), index_unit(n, s.source_index), s.t)
             for s in dec.all_specs(f)]
    return concat(Word.empty(f, n), *parts)


# ---------------------------------------------------------------------------
# determinants


def diag_first(field: Field, n: int, u) -> Matrix:
    return Matrix.diag(field, [u] + [1] * (n - 1))


def m_det(field: Field, n: int, u):
    """det L_{diag(u,1,...,1)} = u ((u+1)/2)^(2n-2)."""
    red = field.reduce
    return red(u * red((u + 1) * field.half) ** (2 * n - 2))


def is_exceptional(field: Field, u) -> bool:
    red = field.reduce
    u = red(u)
    if u == field.zero or u == red(-1):
        return True
    sigma = red(64 * u * field.inv(red((u + 1) ** 2)))
    return sigma in {red(2), red(-2), red(-4)}


def word_m_u_inverse(u: Scalar, n: int) -> Word:
    """Five-factor word for the inverse of L_{diag(u,1,...,1)}.

    With sigma = 64u/(u+1)^2 and v1..v4 from ``four_factor_scalars``, the
    factors diag(1/u,1,..), diag(v_j,1,..) scale E_11 by 1/u and E_1k, E_k1 by
    ((1/u+1)/2) sigma/16 = 2/(u+1).
    """
    f = u.field
    if is_exceptional(f, u.value):
        raise ExceptionalParameter(f"u = {u} is excluded")
    red = f.reduce
    sigma = red(64 * u.value * f.inv(red((u.value + 1) ** 2)))
    vs = four_factor_scalars(sigma, f)
    mats = [diag_first(f, n, f.inv(u.value))] + [diag_first(f, n, v) for v in vs]
    return Word(f, n, tuple(mats))


def _det_match_rational(gamma, n: int) -> Word:
    f = Field()
    r = 2 * n - 2
    y = 2
    while True:
        yr = f.reduce(y) ** r
        if yr != gamma and yr * y != gamma:
            x = gamma / yr
            a = x * (y - 1) / (x - y)
            b = (y - 1) / (x - y)
            if not is_exceptional(f, a) and not is_exceptional(f, b):
                # det m(a) / det m(b) = gamma for this choice of (x, y)
                return concat(Word.single(diag_first(f, n, a)), word_m_u_inverse(Scalar(f, b), n))
        y += 1


@lru_cache(maxsize=None)
def _det_generators(p: int, n: int):
    """(value, label) pairs; label is t for diag(t,1,..) or "B" for diag(B, I)."""
    f = Field(p)
    gens = {}
    for t in range(1, p - 1):
        v = m_det(f, n, t)
        if v != 1 and v not in gens:
            gens[v] = t
    out = [(v, t) for v, t in gens.items()]
    if p == 3 and 2 not in gens:
        out.append((2, "B"))
    return out


@lru_cache(maxsize=None)
def det_bfs_table(p: int, n: int) -> dict:
    """Shortest generator sequence for every reachable element of F_p^x."""
    gens = _det_generators(p, n)
    table = {1: ()}
    queue = deque([1])
    while queue:
        g = queue.popleft()
        for v, label in gens:
            h = g * v % p
            if h not in table:
                table[h] = table[g] + (label,)
                queue.append(h)
    return table


def _gen_matrix(f: Field, n: int, label) -> Matrix:
    if label == "B":
        return q3_det_two(f, n)
    return diag_first(f, n, label)


def det_match_word(gamma: Scalar, n: int) -> Word:
    """An invertible word whose operator has determinant gamma."""
    f = gamma.field
    if not gamma:
        raise ZeroDeterminant("determinant 0 cannot be matched by an invertible word")
    if gamma.value == f.one:
        return Word.empty(f, n)
    if n == 1:
        return Word.single(Matrix(f, [[gamma.value]]))
    if f.modulus is None:
        return _det_match_rational(gamma.value, n)
    table = det_bfs_table(f.modulus, n)
    labels = table[gamma.value]
    return Word(f, n, tuple(_gen_matrix(f, n, lab) for lab in labels))


def word_for_gl(G: Matrix) -> Word:
    """Word evaluating to an invertible operator."""
    n = operator_n(G)
    gamma = determinant(G)
    if not gamma:
        raise Singular("operator is not invertible")
    h_word = det_match_word(gamma, n)
    H = evaluate(h_word)
    return concat(h_word, word_for_sl(inverse(H) @ G))


# ---------------------------------------------------------------------------
# singular operators


@lru_cache(maxsize=None)
def _kill_patterns(n: int):
    """Zero sets of L_{diag(beta)} for beta in {0, 1, -1}^n, as bitmasks.

    L_{diag(beta)} scales E_ij by (beta_i + beta_j)/2, which vanishes exactly
    when beta_i + beta_j = 0 (in any odd characteristic).
    """
    seen = {}
    for beta in itertools.product((0, 1, -1), repeat=n):
        mask = 0
        for i in range(n):
            for j in range(n):
                if beta[i] + beta[j] == 0:
                    mask |= 1 << (i * n + j)
        if mask and mask not in seen:
            seen[mask] = beta
    return [(m, b) for m, b in seen.items()]


@lru_cache(maxsize=None)
def _kill_plans(n: int) -> dict:
    """Fewest diagonal factors whose zero sets cover exactly z coordinates, per z."""
    d = n * n
    pats = _kill_patterns(n)
    plans = {0: ()}
    by_mask = {0: ()}
    queue = deque([0])
    while queue and len(plans) < d + 1:
        m = queue.popleft()
        for pm, beta in pats:
            m2 = m | pm
            if m2 not in by_mask:
                by_mask[m2] = by_mask[m] + (beta,)
                queue.append(m2)
                plans.setdefault(bin(m2).count("1"), by_mask[m2])
    return plans


def _singular_diagonal(T: Matrix) -> Word:
    f = T.field
    n = operator_n(T)
    d = n * n
    rnf = rank_normal_form(T)
    z = d - rnf.r
    betas = _kill_plans(n)[z]
    half = f.half
    dvals = []
    for i in range(n):
        for j in range(n):
            v = f.one
            for beta in betas:
                v = f.reduce(v * (beta[i] + beta[j]) * half)
            dvals.append(v)
    nonzero = [k for k in range(d) if dvals[k]]
    zero = [k for k in range(d) if not dvals[k]]
    perm = nonzero + zero
    Q = permutation_matrix(f, perm)
    # Q D Q^-1 = diag(c_1..c_r, 0..0); divide the c's out on the left
    D2_inv = Matrix.diag(f, [f.inv(dvals[k]) for k in nonzero] + [1] * z)
    G1 = rnf.U @ D2_inv @ Q
    G2 = inverse(Q) @ rnf.W
    middle = Word(f, n, tuple(Matrix.diag(f, beta) for beta in betas))
    return concat(word_for_gl(G1), middle, word_for_gl(G2))


def idempotent_word(field: Field, n: int) -> tuple[Word, Matrix]:
    """Word for E = diag(I_{d-1}, 0) built from L_{diag(0,1,...,1)}."""
    A = Matrix.diag(field, [0] + [1] * (n - 1))
    rnf = rank_normal_form(op_L(A))
    w = concat(word_for_gl(inverse(rnf.U)), Word.single(A), word_for_gl(inverse(rnf.W)))
    return w, rnf.middle()


def swap_matrix(field: Field, d: int, k: int) -> Matrix:
    """Permutation matrix exchanging coordinates k and d (1-based)."""
    perm = list(range(d))
    perm[k - 1], perm[d - 1] = perm[d - 1], perm[k - 1]
    return permutation_matrix(field, perm)


def _singular_idempotents(T: Matrix) -> Word:
    f = T.field
    n = operator_n(T)
    d = n * n
    rnf = rank_normal_form(T)
    e_word, _ = idempotent_word(f, n)
    parts = [word_for_gl(rnf.U)]
    for k in range(rnf.r + 1, d + 1):
        Pk = swap_matrix(f, d, k)
        parts += [word_for_gl(Pk), e_word, word_for_gl(inverse(Pk))]
    parts.append(word_for_gl(rnf.W))
    return concat(*parts)


def word_for_singular(T: Matrix, strategy: str = "diagonal") -> Word:
    """Word evaluating to a singular operator.

    ``strategy="diagonal"`` (default) needs two invertible words;
    ``strategy="idempotents"`` writes diag(I_r, 0) as a product of conjugates
    of one rank d-1 idempotent and is much longer.
    """
    n = operator_n(T)
    if determinant(T):
        raise NotSingular("operator is invertible; use word_for_gl")
    if strategy == "idempotents" or (strategy == "diagonal" and n > 4):
        return _singular_idempotents(T)
    if strategy != "diagonal":
        raise ValueError(f"unknown strategy {strategy!r}")
    return _singular_diagonal(T)


# ---------------------------------------------------------------------------


def factorize(T: Matrix, strategy: str = "diagonal") -> FactorizationReport:
    """Word for any operator T on M_n(K), verified by evaluation."""
    f = T.field
    if not isinstance(f, Field):
        raise UnsupportedField(f"unsupported field {f!r}")
    try:
        n = operator_n(T)
    except Exception as exc:
        raise DimensionNotSquare(str(exc)) from exc
    t0 = time.perf_counter()
    if n == 1:
        w = Word.single(Matrix(f, [[T[0, 0]]]))
    elif determinant(T):
        w = word_for_gl(T)
    else:
        w = word_for_singular(T, strategy)
    t1 = time.perf_counter()
    rep = _words.verify(w, T)
    t2 = time.perf_counter()
    rep.stats.update({"length": len(w), "build_seconds": t1 - t0, "verify_seconds": t2 - t1})
    return rep


__all__ = ["SLDecomposition", "sl_decompose", "word_for_sl", "word_m_u_inverse", "det_match_word",
           "word_for_gl", "word_for_singular", "factorize", "word_standard_tau", "Basis"]
