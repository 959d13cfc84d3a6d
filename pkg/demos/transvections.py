"""
Elementary transvections as words
=================================

Every map E_b -> E_b + t E_a (all other matrix units fixed) is a composition
of Jordan multiplication operators.  The building block is
u_N(t) = id + t U_N for a rank-one square-zero N.
"""
from jmsfactor.exactlinalg import Matrix
from jmsfactor.field import QQ, Field
from jmsfactor.jordan import identity_operator, op_U
from jmsfactor.transvect import word_standard_tau, word_u_of_N
from jmsfactor.words import evaluate

# u_N(t) over Q and over F_7
N = Matrix(QQ, [[-2, -1], [4, 2]])
w = word_u_of_N(N, 3)
print("u_N(3) over Q:", len(w), "factors,",
      evaluate(w) == identity_operator(QQ, 2) + op_U(N).scale(3))

F7 = Field(7)
N7 = Matrix(F7, [[0, 0], [2, 0]])
w7 = word_u_of_N(N7, 3)
print("u_N(3) over F_7:", len(w7), "factors (repeated blocks (I+N),(I-N))")

# all transvections on M_3(Q); lengths depend on how the two units sit
n = 3
units = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
lengths = {}
for a in units:
    for b in units:
        if a != b:
            lengths[a, b] = len(word_standard_tau(n, a, b, QQ(1)))
print("shortest", min(lengths.values()), "longest", max(lengths.values()),
      "mean", sum(lengths.values()) // len(lengths))

# a transvection between two corners, checked entry by entry
T = evaluate(word_standard_tau(n, (1, 3), (3, 1), QQ(5)))
print("E31 -> E31 + 5 E13:", T[2, 6] == 5, (T - Matrix.identity(QQ, 9)).rank() == 1)

# the longer route through corner-basis transvections gives the same operator
T2 = evaluate(word_standard_tau(n, (1, 3), (3, 1), QQ(5), method="corner-basis"))
print("corner-basis method agrees:", T == T2)
