"""
Factoring arbitrary operators on M_n(K)
=======================================

Any linear map on n x n matrices, invertible or not, is a product of maps
X -> A o X.  factorize builds such a product and verifies it exactly.
"""
import random

from jmsfactor.exactlinalg import Matrix, rank
from jmsfactor.factor import factorize
from jmsfactor.field import QQ, Field
from jmsfactor.jordan import op_U, op_L

rng = random.Random(1)


def random_operator(f, n, r):
    d = n * n
    while True:
        A = Matrix(f, [[f.random(rng, 2) for _ in range(r)] for _ in range(d)])
        B = Matrix(f, [[f.random(rng, 2) for _ in range(d)] for _ in range(r)])
        if r == 0 or rank(A @ B) == r:
            return A @ B if r else Matrix.zeros(f, d)


# one operator of every rank on M_2(F_5)
F5 = Field(5)
for r in range(5):
    rep = factorize(random_operator(F5, 2, r))
    print(f"F_5 rank {r}: verified={rep.verified} length={rep.length} "
          f"build={rep.stats['build_seconds']:.3f}s")

# transposition X -> X^T is not of the form L_A, but it is a product of them
def transpose_operator(f, n):
    d = n * n
    rows = [[f.zero] * d for _ in range(d)]
    for i in range(n):
        for j in range(n):
            rows[i * n + j][j * n + i] = f.one
    return Matrix(f, rows)


rep = factorize(transpose_operator(QQ, 2))
print("transpose on M_2(Q): length", rep.length, "verified", rep.verified)

# a singular quadratic operator and a singular L_A
print("U_E12:", factorize(op_U(Matrix.unit(QQ, 2, 1, 2))).verified)
print("L_diag(0,1):", factorize(op_L(Matrix.diag(QQ, [0, 1]))).verified)

# the longer idempotent-based route for singular maps
T = random_operator(Field(3), 2, 2)
a = factorize(T)
b = factorize(T, strategy="idempotents")
print("rank 2 on M_2(F_3): diagonal strategy", a.length, "vs idempotents", b.length)
