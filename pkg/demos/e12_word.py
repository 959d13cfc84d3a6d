"""
Sixteen Jordan multiplications that add U_E12
=============================================

Over Q, sixteen 2x2 matrices B_1..B_16 have L_B1 L_B2 ... L_B16 = id + U_E12,
where U_E12(X) = E12 X E12.  On M_3 four diagonal padding factors are needed
as well.
"""
from fractions import Fraction

from jmsfactor.exactlinalg import Matrix
from jmsfactor.field import QQ
from jmsfactor.gadgets import e12_word_matrices, half_shift, padding_scalars
from jmsfactor.jordan import apply_operator, identity_operator, op_U
from jmsfactor.transvect import word_id_pm_U_E12_char0
from jmsfactor.words import evaluate



def show(M):
    return [[str(x) for x in row] for row in M.entries]


for k, B in enumerate(e12_word_matrices(QQ), start=1):
    print(f"B{k:<2}", show(B))

w = word_id_pm_U_E12_char0(2, 1)
E12 = Matrix.unit(QQ, 2, 1, 2)
T = evaluate(w)
print("length", len(w), " equals id + U_E12:", T == identity_operator(QQ, 2) + op_U(E12))

# the word moves E21 to E21 + E12 and fixes the other units
print(show(apply_operator(T, Matrix.unit(QQ, 2, 2, 1))))

# on the commutant each L_B acts by (B + I)/2; all sixteen multiply to 169/65536
prod = Matrix.identity(QQ, 2)
for B in e12_word_matrices(QQ):
    prod = prod @ half_shift(B)
print("C1...C16 =", prod[0, 0], prod[0, 0] == Fraction(169, 65536))

# n = 3: D1..D4 = diag(v, v, 1) repair the scalar on the third row and column
print("padding scalars", [str(v) for v in padding_scalars()])
w3 = word_id_pm_U_E12_char0(3, 1)
print("n=3 length", len(w3), evaluate(w3) == identity_operator(QQ, 3) + op_U(Matrix.unit(QQ, 3, 1, 2)))
