"""Fast exact matrix products through python-flint.

Only word evaluation goes through here; everything else stays in pure Python
so the two routes can be checked against each other.
"""
from __future__ import annotations

from fractions import Fraction

import flint

from .exactlinalg import Matrix
from .field import Field


def to_flint(M: Matrix):
    p = M.field.modulus
    flat = [x for r in M.entries for x in r]
    if p is None:
        return flint.fmpq_mat(M.rows, M.cols, [flint.fmpq(x.numerator, x.denominator) for x in flat])
    return flint.nmod_mat(M.rows, M.cols, flat, p)


def from_flint(field: Field, F) -> Matrix:
    r, c = F.nrows(), F.ncols()
    ents = F.entries()
    if field.modulus is None:
        vals = [Fraction(int(e.p), int(e.q)) for e in ents]
    else:
        vals = [int(e) for e in ents]
    return Matrix._raw(field, tuple(tuple(vals[i * c:(i + 1) * c]) for i in range(r)))


def op_L_flint(A: Matrix):
    """flint matrix of X -> (AX + XA)/2, built entry by entry."""
    f = A.field
    n = A.rows
    d = n * n
    p = f.modulus
    a = A.entries
    if p is None:
        out = flint.fmpq_mat(d, d)
        h = [[flint.fmpq(x.numerator, x.denominator) / 2 for x in r] for r in a]
    else:
        out = flint.nmod_mat(d, d, p)
        half = (p + 1) // 2
        h = [[x * half % p for x in r] for r in a]
    for i in range(n):
        for j in range(n):
            row = i * n + j
            for k in range(n):
                if a[i][k]:
                    out[row, k * n + j] += h[i][k]
            for l in range(n):
                if a[l][j]:
                    out[row, i * n + l] += h[l][j]
    return out


def identity_flint(field: Field, d: int):
    if field.modulus is None:
        m = flint.fmpq_mat(d, d)
        one = flint.fmpq(1)
    else:
        m = flint.nmod_mat(d, d, field.modulus)
        one = 1
    for i in range(d):
        m[i, i] = one
    return m


def product_of_L(field: Field, n: int, factors) -> Matrix:
    """op_L(f0) @ op_L(f1) @ ... computed in flint, with repeated factors cached."""
    d = n * n
    cache = {}
    acc = None
    for A in factors:
        L = cache.get(A)
        if L is None:
            L = op_L_flint(A)
            cache[A] = L
        acc = L if acc is None else acc * L
    if acc is None:
        return Matrix.identity(field, d)
    return from_flint(field, acc)


def mat_product(field: Field, mats) -> Matrix:
    acc = None
    for M in mats:
        F = to_flint(M)
        acc = F if acc is None else acc * F
    return from_flint(field, acc)
