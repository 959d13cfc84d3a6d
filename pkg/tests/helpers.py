"""Test-side oracles and random generators.

The oracles here avoid the package's own operator builders: operators are
assembled column by column from plain matrix products, determinants come from
the Leibniz expansion, and so on.
"""
from __future__ import annotations

import itertools
import random

from jmsfactor.exactlinalg import Matrix, rank
from jmsfactor.field import QQ, Field

FIELDS = [QQ, Field(3), Field(5), Field(7)]
PRIME_FIELDS = [Field(3), Field(5), Field(7)]


def units(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def operator_from_function(field: Field, n: int, fn) -> Matrix:
    """Matrix whose column (k,l) is the coordinate vector of fn(E_kl)."""
    cols = []
    for (k, l) in units(n):
        Y = fn(Matrix.unit(field, n, k, l))
        cols.append([Y[i, j] for i in range(n) for j in range(n)])
    d = n * n
    return Matrix(field, [[cols[c][r] for c in range(d)] for r in range(d)])


def leibniz_det(M: Matrix):
    f = M.field
    n = M.rows
    total = f.zero
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = f.one
        for i in range(n):
            term = term * M[i, perm[i]]
        total = total + (-term if inv % 2 else term)
    return f.reduce(total)


def rand_matrix(f: Field, n: int, rng: random.Random, m=None, bound=9) -> Matrix:
    m = n if m is None else m
    return Matrix(f, [[f.random(rng, bound) for _ in range(m)] for _ in range(n)])


def rand_rank(f: Field, d: int, r: int, rng: random.Random, bound=3) -> Matrix:
    """Random d x d matrix of rank exactly r (product of d x r and r x d)."""
    if r == 0:
        return Matrix.zeros(f, d)
    while True:
        A = Matrix(f, [[f.random(rng, bound, 1) for _ in range(r)] for _ in range(d)])
        B = Matrix(f, [[f.random(rng, bound, 1) for _ in range(d)] for _ in range(r)])
        T = A @ B
        if rank(T) == r:
            return T


def rand_invertible(f: Field, d: int, rng: random.Random, bound=3) -> Matrix:
    return rand_rank(f, d, d, rng, bound)


def rand_sl(f: Field, d: int, rng: random.Random) -> Matrix:
    """Random determinant-one matrix: rescale the first row of an invertible one."""
    from jmsfactor.exactlinalg import determinant
    G = rand_invertible(f, d, rng)
    c = f.inv(determinant(G).value)
    rows = [list(r) for r in G.entries]
    rows[0] = [f.reduce(x * c) for x in rows[0]]
    return Matrix(f, rows)


def rand_rosz(f: Field, n: int, rng: random.Random) -> Matrix:
    """Random rank-one square-zero matrix v w^T with w . v = 0."""
    while True:
        v = [f.random(rng, 5) for _ in range(n)]
        w = [f.random(rng, 5) for _ in range(n)]
        dot = sum((a * b for a, b in zip(v, w)), f.zero)
        k = next((i for i in range(n) if v[i]), None)
        if k is None:
            continue
        w[k] = f.reduce(w[k] - dot * f.inv(v[k]))
        N = Matrix(f, [[a * b for b in w] for a in v])
        if rank(N) == 1:
            return N


def tau_matrix(f: Field, n: int, a, b, t) -> Matrix:
    """id + t e_a e_b^T, written out directly."""
    d = n * n
    ia = (a[0] - 1) * n + a[1] - 1
    ib = (b[0] - 1) * n + b[1] - 1
    rows = [[f.one if r == c else f.zero for c in range(d)] for r in range(d)]
    rows[ia][ib] = f.reduce(t)
    return Matrix(f, rows)


def power_inverse(T: Matrix) -> Matrix:
    """Inverse of an invertible matrix over F_p from its powers alone:
    T^k = I for the first k > 0 with that property, and T^-1 = T^(k-1)."""
    d = T.rows
    I = Matrix.identity(T.field, d)
    P = T
    k = 1
    while P != I:
        P = P @ T
        k += 1
    out = I
    for _ in range(k - 1):
        out = out @ T
    return out
