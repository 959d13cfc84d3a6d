"""
The exact identity suite
========================

Every algebraic identity the construction depends on, checked exactly on
random inputs.  Corrupting one of the sixteen matrices makes the check fail.
"""
from jmsfactor.analysis import check_e12_word, check_identities, describe_identity
from jmsfactor.field import QQ, Field
from jmsfactor.gadgets import E12_WORD_ROWS

for f in (QQ, Field(5), Field(7)):
    for r in check_identities("all", f, 2, samples=10):
        print(f"{r.identity:<26} {r.field:<6} {'pass' if r.passed else 'FAIL'}")

print(describe_identity("square-zero"))

# negative control: change B3 = [[1,3],[1,1]] to [[1,4],[1,1]]
rows = [list(map(list, B)) for B in E12_WORD_ROWS]
rows[2][0][1] = 4
print("corrupted word:", check_e12_word(QQ, 2, rows))
