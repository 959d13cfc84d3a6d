"""Words for transvections of M_n(K).

Building blocks, from the bottom up:

* ``word_u_of_N``: u_N(t) = id + t U_N for a rank-one square-zero N;
* ``word_conjugate``: g_P u_Q(t) g_P^-1 with g_P = L_{I+P};
* group commutators of transvection words;
* ``word_m2_elementary``: the corner transvections x_rs(t) written in the
  basis E = (E_ji + (E_ii+E_jj)/2, E_ij, E_ii+E_jj+E_ij, E_ii-E_jj);
* ``word_standard_tau``: id + t e_a e_b^T in the standard unit basis.

Transvection bookkeeping used in the comments: an operator id + a (x) m
means X -> X + Tr(m X) a.  Two such operators with the same a (or the same m)
multiply by adding the m's (or the a's), and when m(b) = 0 = h(a) = h(b) the
group commutator [id + a(x)m, id + b(x)h] equals id + m(b) a(x)h.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import BadIndices, NotRankOneSquareZero, WrongField
from .exactlinalg import Matrix, inverse, kernel_basis, rank, solve_linear, hstack
from .field import Field, Scalar
from .gadgets import (R_CROSS, R_MINUS, R_PLUS, S_CROSS, corner_basis_2x2,
                      e12_word_matrices, padded_e12_matrices)
from .jordan import embed_corner, index_unit, is_rank_one_square_zero, unit_index, vec
from .words import Word, concat, repeat

# ---------------------------------------------------------------------------
# transvection descriptors


class Basis(enum.Enum):
    STANDARD = "standard"
    CORNER = "corner"


@dataclass(frozen=True)
class CornerIndex:
    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i < self.j):
            raise BadIndices(f"corner needs 1 <= i < j, got ({self.i}, {self.j})")

    def check(self, n: int):
        if self.j > n:
            raise BadIndices(f"corner ({self.i}, {self.j}) does not fit n = {n}")


@dataclass(frozen=True)
class TransvectionSpec:
    """id + t e_target e_source^T in a declared basis (1-based positions).

    For the standard basis the positions are coordinate positions
    (i-1)*n + j; for a corner basis they are 1..4 and ``corner`` is set.
    """

    target_index: int
    source_index: int
    t: object
    basis: Basis = Basis.STANDARD
    corner: CornerIndex | None = None

    def __post_init__(self):
        if self.target_index == self.source_index:
            raise BadIndices("a transvection needs target != source")
        if self.basis is Basis.CORNER and self.corner is None:
            raise BadIndices("corner-basis transvection without a corner")

    def inverse(self, field: Field) -> "TransvectionSpec":
        return TransvectionSpec(self.target_index, self.source_index, field.reduce(-self.t),
                                self.basis, self.corner)


def corner_change_of_basis(field: Field, n: int, corner: CornerIndex) -> Matrix:
    """Columns: coordinates of the four corner basis matrices, then the units
    outside the corner in coordinate order."""
    corner.check(n)
    i, j = corner.i, corner.j
    cols = [vec(embed_corner(B, n, i, j)).col_values(0) for B in corner_basis_2x2(field)]
    inside = {unit_index(n, a, b) for a in (i, j) for b in (i, j)}
    d = n * n
    for k in range(1, d + 1):
        if k not in inside:
            c = [field.zero] * d
            c[k - 1] = field.one
            cols.append(c)
    return Matrix._raw(field, tuple(tuple(c[r] for c in cols) for r in range(d)))


def transvection_operator(field: Field, n: int, spec: TransvectionSpec) -> Matrix:
    """The operator matrix a transvection spec stands for."""
    d = n * n
    t = field.reduce(spec.t)
    if spec.basis is Basis.STANDARD:
        if not (1 <= spec.target_index <= d and 1 <= spec.source_index <= d):
            raise BadIndices("standard positions must lie in 1..n^2")
        rows = [list(r) for r in Matrix.identity(field, d).entries]
        rows[spec.target_index - 1][spec.source_index - 1] = t
        return Matrix._raw(field, tuple(tuple(r) for r in rows))
    if not (1 <= spec.target_index <= 4 and 1 <= spec.source_index <= 4):
        raise BadIndices("corner-basis positions must lie in 1..4")
    P = corner_change_of_basis(field, n, spec.corner)
    local = TransvectionSpec(spec.target_index, spec.source_index, t)
    return P @ transvection_operator(field, n, local) @ inverse(P)


def _t(field: Field, t):
    return field.reduce(t)


# ---------------------------------------------------------------------------
# u_N(t)


def _require_rosz(N: Matrix):
    if not is_rank_one_square_zero(N):
        raise NotRankOneSquareZero("expected a rank-one square-zero matrix")


@lru_cache(maxsize=None)
def word_id_pm_U_E12_char0(n: int, sign: int) -> Word:
    """id + U_{E12} (sign +1) or id - U_{E12} (sign -1) on M_n(Q)."""
    Q = Field()
    if n < 2:
        raise BadIndices("needs n >= 2")
    if sign == 1:
        mats = e12_word_matrices(Q) if n == 2 else padded_e12_matrices(n)
        return Word(Q, n, tuple(mats))
    if sign == -1:
        I = Matrix.identity(Q, n)
        E = Matrix.unit(Q, n, 1, 2)
        return Word(Q, n, (I + E, I - E, I + E, I - E))
    raise ValueError("sign must be +1 or -1")


def word_id_pm_U_charp(M: Matrix, sign: int) -> Word:
    """id +- U_M over F_p as r copies of [(I+M), (I-M)] with r = -+2 mod p.

    One block evaluates to id - U_M/2, and r blocks to id - (r/2) U_M.
    """
    f = M.field
    if f.modulus is None:
        raise WrongField("the repetition construction needs a prime field")
    _require_rosz(M)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return _charp_power(M, (-2 * sign) % f.modulus)


def _charp_power(M: Matrix, r: int) -> Word:
    I = Matrix.identity(M.field, M.rows)
    block = Word._trusted(M.field, M.rows, (I + M, I - M))
    return repeat(block, r)


def similarity_to_E12(M: Matrix) -> Matrix:
    """An invertible S with S E12 S^-1 = M.

    Columns: b1 = first nonzero column of M, b2 with M b2 = b1, then kernel
    vectors of M (in echelon order) that extend b1 to a basis of ker M.
    """
    _require_rosz(M)
    f = M.field
    j = next(c for c in range(M.cols) if any(M.col_values(c)))
    b1 = M.col(j)
    b2 = solve_linear(M, b1)
    cols = [b1, b2]
    chosen = [b1]
    for v in kernel_basis(M):
        if rank(hstack(chosen + [v])) > len(chosen):
            chosen.append(v)
            cols.append(v)
    S = hstack(cols)
    assert S.rows == S.cols == len(cols)
    return S


@lru_cache(maxsize=1 << 14)
def _u_word(N: Matrix, t) -> Word:
    f = N.field
    n = N.rows
    if not t:
        return Word.empty(f, n)
    if f.modulus is not None:
        # (id - U_N/2)^r = id - (r/2) U_N, so r = -2t gives u_N(t) directly
        return _charp_power(N, (-2 * t) % f.modulus)
    x, y = (t + 1) / 2, (t - 1) / 2
    parts = []
    # t = x^2 - y^2, and id + t U_N = (id + U_{xN}) (id - U_{yN})
    for z, sign in ((x, 1), (y, -1)):
        if z:
            S = similarity_to_E12(N.scale(z))
            parts.append(word_id_pm_U_E12_char0(n, sign).conjugated(S, inverse(S)))
    return concat(Word.empty(f, n), *parts)


def word_u_of_N(N: Matrix, t) -> Word:
    """Word for u_N(t) = id + t U_N."""
    _require_rosz(N)
    return _u_word(N, _t(N.field, t))


def word_gR_inverse(R: Matrix) -> Word:
    """Word for the inverse of g_R = L_{I+R}: (id + U_R/2) L_{I-R}."""
    _require_rosz(R)
    return _gR_inverse(R)


@lru_cache(maxsize=1 << 12)
def _gR_inverse(R: Matrix) -> Word:
    I = Matrix.identity(R.field, R.rows)
    return concat(_u_word(R, R.field.half), Word.single(I - R))


@lru_cache(maxsize=1 << 14)
def _conj(P: Matrix, Q: Matrix, t) -> Word:
    if not t:
        return Word.empty(P.field, P.rows)
    I = Matrix.identity(P.field, P.rows)
    return concat(Word.single(I + P), _u_word(Q, t), _gR_inverse(P))


def word_conjugate(P: Matrix, Q: Matrix, t) -> Word:
    """Word for g_P u_Q(t) g_P^-1 with P, Q rank-one square-zero.

    This is the transvection id + t g_P(Q) (x) g_P^-1(Q).
    """
    _require_rosz(P)
    _require_rosz(Q)
    return _conj(P, Q, _t(P.field, t))


def group_commutator(a: Word, b: Word, a_inv: Word, b_inv: Word) -> Word:
    """Word for a b a^-1 b^-1."""
    return concat(a, b, a_inv, b_inv)


# ---------------------------------------------------------------------------
# corner transvections in the E basis


def _corner_mats(field: Field, n: int, corner: CornerIndex):
    corner.check(n)

    def emb(rows):
        return embed_corner(Matrix(field, rows), n, corner.i, corner.j)

    return emb


def word_m2_elementary(n: int, corner: CornerIndex | tuple, r: int, s: int, t) -> Word:
    """Word for x_rs(t) on the corner (i, j), written in the basis
    (E_ji + (E_ii+E_jj)/2, E_ij, E_ii+E_jj+E_ij, E_ii-E_jj); identity off the corner.

    ``t`` must be a Scalar (it fixes the field).
    """
    if not isinstance(t, Scalar):
        raise TypeError("t must be a Scalar so that the field is known")
    corner = corner if isinstance(corner, CornerIndex) else CornerIndex(*corner)
    if not (1 <= r <= 4 and 1 <= s <= 4) or r == s:
        raise BadIndices(f"need distinct r, s in 1..4, got ({r}, {s})")
    return _m2_elementary(t.field, n, corner, r, s, t.value)


@lru_cache(maxsize=1 << 12)
def _m2_elementary(field: Field, n: int, corner: CornerIndex, r: int, s: int, t) -> Word:
    emb = _corner_mats(field, n, corner)
    e12, e21 = emb([[0, 1], [0, 0]]), emb([[0, 0], [1, 0]])
    red = field.reduce
    half = field.half

    def x(r, s, t):
        return _m2_elementary(field, n, corner, r, s, red(t))

    def comm(r1, s1, t1, r2, s2, t2):
        return group_commutator(x(r1, s1, t1), x(r2, s2, t2), x(r1, s1, -t1), x(r2, s2, -t2))

    def r_pm(sign, t):
        return _conj(emb(R_PLUS if sign > 0 else R_MINUS), e21, red(t))

    if not t:
        return Word.empty(field, n)
    key = (r, s)
    if key == (2, 1):
        return _u_word(e12, t)
    if key == (1, 2):
        return _conj(e12, e21, t)
    if key == (1, 4):
        return concat(r_pm(1, t * half), r_pm(-1, -t * half))
    if key == (1, 3):
        return concat(r_pm(1, -t), r_pm(-1, -t), x(1, 2, t))
    if key == (2, 3):
        return comm(2, 1, 1, 1, 3, t)
    if key == (2, 4):
        return comm(2, 1, 1, 1, 4, t)
    if key == (3, 2):
        return _conj(e21.scale(2), e12, red(t * half))
    if key == (3, 1):
        return comm(3, 2, t, 2, 1, 1)
    if key == (4, 2):
        v = _conj(emb(R_CROSS), emb(S_CROSS), t)
        return concat(x(1, 2, t), x(3, 2, -t), v)
    if key == (4, 1):
        return comm(4, 2, t, 2, 1, 1)
    if key == (4, 3):
        return comm(4, 2, t, 2, 3, 1)
    if key == (3, 4):
        return comm(3, 2, 1, 2, 4, t)
    raise BadIndices(f"no corner transvection ({r}, {s})")


# ---------------------------------------------------------------------------
# standard-unit transvections
#
# Inside a corner, with e = E_ij, f = E_ji, S = [[-1,-1],[1,1]] and
# R = [[-1,1],[-1,1]] placed on rows/cols (i, j), the conjugates
# g_P u_Q(s) g_P^-1 with P in {+-2e, +-2f} and Q in {S, R} are transvections
# whose directions are S +- I or R +- I.  Pairing two of them with a common
# direction or a common functional gives the six composites below
# (D_k = E_kk, X_kl = coefficient of E_kl):
#
#   alpha(s) = id - 4s D_i (x) (X_ij + X_ji + 2 X_jj)
#   beta(s)  = id - 4s D_i (x) (-X_ij - X_ji + 2 X_jj)
#   gamma(s) = id + 4s D_j (x) (-2 X_ii + X_ij + X_ji)
#   delta(s) = id + 4s D_j (x) (-2 X_ii - X_ij - X_ji)
#   ylift(s) = id - 4s (S + I) (x) X_ii
#   zlift(s) = id + 4s (S - I) (x) X_jj
#
# and one commutator with u_e or u_f reaches every remaining corner pair.


def _corner_recipe(field: Field, n: int, i: int, j: int, tgt: str, src: str, t) -> Word:
    emb = _corner_mats(field, n, CornerIndex(i, j))
    e = emb([[0, 1], [0, 0]])
    f = e.transpose()
    S = emb(S_CROSS)
    R = emb(R_MINUS)
    red = field.reduce
    two_e, two_f = e.scale(2), f.scale(2)
    m2e, m2f = e.scale(-2), f.scale(-2)

    def c(P, Q, s):
        return _conj(P, Q, red(s))

    composites: dict[str, Callable] = {
        "alpha": lambda s: concat(c(m2e, S, s), c(m2f, R, s)),
        "beta": lambda s: concat(c(two_f, S, s), c(two_e, R, s)),
        "gamma": lambda s: concat(c(two_e, S, s), c(two_f, R, s)),
        "delta": lambda s: concat(c(m2f, S, s), c(m2e, R, s)),
        "ylift": lambda s: concat(c(two_e, S, s), c(m2f, S, s)),
        "zlift": lambda s: concat(c(m2e, S, s), c(two_f, S, s)),
        "ue": lambda s: _u_word(e, red(s)),
        "uf": lambda s: _u_word(f, red(s)),
    }

    def comm(a, sa, b, sb):
        A, B = composites[a], composites[b]
        return group_commutator(A(sa), B(sb), A(-sa), B(-sb))

    q = red(red(t) * field.inv(red(4)))
    h = red(red(t) * field.inv(red(16)))
    key = (tgt, src)
    if key == ("ij", "ji"):
        return composites["ue"](t)
    if key == ("ji", "ij"):
        return composites["uf"](t)
    if key == ("ii", "jj"):
        return concat(composites["alpha"](-h), composites["beta"](-h))
    if key == ("jj", "ii"):
        return concat(composites["gamma"](-h), composites["delta"](-h))
    if key == ("ii", "ij"):
        return comm("alpha", 1, "uf", -q)
    if key == ("ii", "ji"):
        return comm("alpha", 1, "ue", -q)
    if key == ("jj", "ij"):
        return comm("gamma", 1, "uf", q)
    if key == ("jj", "ji"):
        return comm("gamma", 1, "ue", q)
    if key == ("ij", "ii"):
        return comm("ue", 1, "ylift", -q)
    if key == ("ji", "ii"):
        return comm("uf", 1, "ylift", q)
    if key == ("ij", "jj"):
        return comm("ue", 1, "zlift", q)
    if key == ("ji", "jj"):
        return comm("uf", 1, "zlift", -q)
    raise BadIndices(f"no corner recipe for {key}")


def _corner_role(unit, i, j):
    a, b = unit
    return {(i, i): "ii", (i, j): "ij", (j, i): "ji", (j, j): "jj"}[(a, b)]


def _cross_conjugate(field: Field, n: int, a: int, b: int, d: int, t) -> Word:
    """tau sending E_bd to E_bd + t E_ab, for distinct a, b, d.

    With P = (e_a - e_d)(e_a + e_d)^T and Q = (e_a + e_d) e_b^T / 2 one has
    g_P(Q) = E_ab and g_P^-1(Q) = E_db, so g_P u_Q(t) g_P^-1 is exactly it.
    """
    z = field.zero
    u = [z] * n
    w = [z] * n
    u[a - 1], u[d - 1] = field.one, field.reduce(-1)
    w[a - 1], w[d - 1] = field.one, field.one
    P = Matrix._raw(field, tuple(tuple(field.reduce(x * y) for y in w) for x in u))
    h = field.half
    Q = Matrix._raw(field, tuple(tuple(field.reduce(w[r] * h) if c == b - 1 else z for c in range(n))
                                 for r in range(n)))
    return _conj(P, Q, field.reduce(t))


def _direct_cost(n: int, x, y):
    """Rough cost (in u-blocks) of the direct recipe for tau_{x,y}, or None."""
    (a, b), (c, d) = x, y
    corner = {a, b} | {c, d}
    if len(corner) == 2:
        if a != b and c != d:
            return 1
        if a == b and c == d:
            return 8
        return 10
    if a != b and c == b and d != a and d != b:
        return 2
    return None


@lru_cache(maxsize=None)
def _routing_table(n: int):
    """Cheapest way to reach each ordered pair of units: a direct recipe or a
    commutator through an intermediate unit."""
    units = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    INF = float("inf")
    cost = {}
    via = {}
    for x in units:
        for y in units:
            if x != y:
                c = _direct_cost(n, x, y)
                cost[x, y] = INF if c is None else c
    changed = True
    while changed:
        changed = False
        for x in units:
            for z in units:
                if x == z:
                    continue
                best = cost[x, z]
                for y in units:
                    if y == x or y == z:
                        continue
                    cand = 2 * (cost[x, y] + cost[y, z])
                    if cand < best:
                        best = cand
                        via[x, z] = y
                if best < cost[x, z]:
                    cost[x, z] = best
                    changed = True
    return cost, via


def _check_units(n, a, b):
    for (i, j) in (a, b):
        if not (1 <= i <= n and 1 <= j <= n):
            raise BadIndices(f"unit ({i}, {j}) out of range for n = {n}")
    if tuple(a) == tuple(b):
        raise BadIndices("target and source units must differ")
    if n < 2:
        raise BadIndices("standard transvections need n >= 2")


def word_standard_tau(n: int, a: tuple, b: tuple, t, method: str = "direct") -> Word:
    """Word for the transvection E_b -> E_b + t E_a (all other units fixed).

    ``a`` and ``b`` are 1-based unit pairs (i, j) and (k, l); ``t`` is a
    Scalar.  ``method="direct"`` uses the short corner recipes above and
    routes other pairs through cheapest commutators; ``method="corner-basis"``
    goes through the corner transvections x_rs, elimination inside the
    corner, and commutator paths in the corner graph.
    """
    if not isinstance(t, Scalar):
        raise TypeError("t must be a Scalar so that the field is known")
    a, b = tuple(a), tuple(b)
    _check_units(n, a, b)
    if method == "direct":
        return _tau_direct(t.field, n, a, b, t.value)
    if method == "corner-basis":
        return _tau_corner_basis(t.field, n, a, b, t.value)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=1 << 14)
def _tau_direct(field: Field, n: int, a, b, t) -> Word:
    if not t:
        return Word.empty(field, n)
    pts = {a[0], a[1], b[0], b[1]}
    if len(pts) == 2:
        i, j = sorted(pts)
        return _corner_recipe(field, n, i, j, _corner_role(a, i, j), _corner_role(b, i, j), t)
    if len(pts) == 1:
        raise BadIndices("target and source units must differ")
    if a[0] != a[1] and b[0] == a[1] and b[1] != a[0] and b[1] != a[1]:
        return _cross_conjugate(field, n, a[0], a[1], b[1], t)
    _, via = _routing_table(n)
    y = via[a, b]
    one = field.one
    return group_commutator(_tau_direct(field, n, a, y, one), _tau_direct(field, n, y, b, t),
                            _tau_direct(field, n, a, y, field.reduce(-one)),
                            _tau_direct(field, n, y, b, field.reduce(-t)))


# corner-basis route -----------------------------------------------------------

def _corner_of(u, v):
    pts = {u[0], u[1], v[0], v[1]}
    if len(pts) == 2:
        return tuple(sorted(pts))
    return None


def _gamma_path(n: int, a, b):
    """Shortest path from a to b in the graph joining units that share a corner."""
    prev = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                v = (i, j)
                if v not in prev and _corner_of(u, v) is not None:
                    prev[v] = u
                    queue.append(v)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


@lru_cache(maxsize=1 << 12)
def _tau_corner_basis(field: Field, n: int, a, b, t) -> Word:
    if not t:
        return Word.empty(field, n)
    corner = _corner_of(a, b)
    if corner is None:
        path = _gamma_path(n, a, b)
        y = path[-2]
        one = field.one
        return group_commutator(_tau_corner_basis(field, n, a, y, one),
                                _tau_corner_basis(field, n, y, b, t),
                                _tau_corner_basis(field, n, a, y, field.reduce(-one)),
                                _tau_corner_basis(field, n, y, b, field.reduce(-t)))
    from .factor import sl_decompose  # local import: factor builds on this module

    i, j = corner
    ci = CornerIndex(i, j)
    # the 4x4 target in local standard coordinates (E_ii, E_ij, E_ji, E_jj)
    order = [(i, i), (i, j), (j, i), (j, j)]
    G = [[field.one if r == c else field.zero for c in range(4)] for r in range(4)]
    G[order.index(a)][order.index(b)] = t
    G = Matrix._raw(field, tuple(tuple(r) for r in G))
    P = hstack([vec(B) for B in corner_basis_2x2(field)])
    G_E = inverse(P) @ G @ P
    dec = sl_decompose(G_E)
    parts = [_m2_elementary(field, n, ci, s.target_index, s.source_index, s.t)
             for s in dec.all_specs(field)]
    return concat(Word.empty(field, n), *parts)
