"""
Files for the command line tool
===============================

Operators and words are stored as JSON with exact scalar literals.  This
writes a target operator, factors it, and checks the result the same way
`jmsfactor verify` does.
"""
import json
import os
import tempfile

from jmsfactor.exactlinalg import Matrix
from jmsfactor.factor import factorize
from jmsfactor.field import QQ
from jmsfactor.formats import operator_from_json, operator_to_json, word_from_json, word_to_json
from jmsfactor.jordan import op_assoc_mult
from jmsfactor.words import verify

# X -> A X, left multiplication by a fixed matrix
A = Matrix(QQ, [[1, "1/2"], [0, 3]])
T = op_assoc_mult(A, "left")

tmp = tempfile.mkdtemp()
path = os.path.join(tmp, "target.json")
with open(path, "w") as fh:
    json.dump(operator_to_json(T), fh)
print(open(path).read()[:120], "...")

rep = factorize(operator_from_json(json.load(open(path))))
doc = word_to_json(rep.word)
print("convention:", doc["convention"], " factors:", len(doc["factors"]))

# round trip through text and verify again
w = word_from_json(json.loads(json.dumps(doc)))
print("verified after reload:", verify(w, T).verified)
print(f"try: jmsfactor factorize --input {path} --stats")
