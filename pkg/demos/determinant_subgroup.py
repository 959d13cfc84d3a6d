"""
Which determinants occur
========================

L_diag(t,1,...,1) has determinant t((t+1)/2)^(2n-2).  Over F_p these values
generate all of F_p^x (for p = 3 one extra matrix with determinant 2 is
needed), so every nonzero determinant is reached by an invertible word.
The character sum Sigma behind that fact has modulus 1 or sqrt(p).
"""
import math

from jmsfactor.analysis import CharacterTable, delta_survey, jacobi_sigma
from jmsfactor.exactlinalg import determinant
from jmsfactor.factor import det_match_word
from jmsfactor.field import QQ, Field
from jmsfactor.words import evaluate

for p in (3, 5, 7, 11, 13):
    s = delta_survey(p, 2)
    print(f"p={p:<3} generator values {[v for v, _ in s.generators]}  full group: {s.full}")

# a word for each determinant over F_7
F7 = Field(7)
for g in range(1, 7):
    w = det_match_word(F7(g), 2)
    print(f"det {g}: {len(w)} factor(s), check {determinant(evaluate(w)).value}")

# over Q a two-piece word works for any gamma
w = det_match_word(QQ("-22/7"), 3)
print("Q, gamma = -22/7:", len(w), "factors, det", determinant(evaluate(w)))

# |Sigma| for m = 2 over F_13
table = CharacterTable.build(13)
for j in range(1, 12):
    s = jacobi_sigma(13, 2, j, table)
    print(f"j={j:<2} |Sigma|={s.magnitude:.4f} {s.classification.value}")
print("sqrt(13) =", round(math.sqrt(13), 4), " p - 2 =", 11)
