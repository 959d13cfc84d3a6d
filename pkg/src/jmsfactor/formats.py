"""JSON encodings for matrices, operators, words and reports.

Scalars are written as strings in the field's literal format ("-3/4" over Q,
bare residues over F_p), so files round-trip exactly.
"""
from __future__ import annotations

import hashlib
import json
from math import isqrt

from .errors import DimensionMismatch, JMSError, MalformedInput
from .exactlinalg import Matrix
from .field import Field, field_from_string
from .words import CONVENTION, FactorizationReport, Word


def matrix_to_json(M: Matrix) -> dict:
    r = M.field.render
    return {"field": str(M.field), "rows": M.rows, "cols": M.cols,
            "entries": [[r(x) for x in row] for row in M.entries]}


def matrix_from_json(d: dict, field: Field | None = None) -> Matrix:
    try:
        f = field_from_string(d["field"])
        rows, cols, ents = int(d["rows"]), int(d["cols"]), d["entries"]
    except JMSError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad matrix document: {exc}") from exc
    if field is not None and f != field:
        raise MalformedInput(f"matrix is over {f}, expected {field}")
    if not isinstance(ents, list) or len(ents) != rows or any(
            not isinstance(r, list) or len(r) != cols for r in ents):
        raise MalformedInput("entry grid does not match rows/cols")
    if any(not isinstance(x, str) for r in ents for x in r):
        raise MalformedInput("entries must be string literals")
    return Matrix._raw(f, tuple(tuple(f.parse(x) for x in r) for r in ents))


def operator_to_json(T: Matrix) -> dict:
    d = matrix_to_json(T)
    d["n"] = isqrt(T.rows)
    return d


def operator_from_json(d: dict, field: Field | None = None, n: int | None = None) -> Matrix:
    T = matrix_from_json(d, field)
    nn = d.get("n", isqrt(T.rows))
    if not T.is_square or nn * nn != T.rows:
        raise DimensionMismatch(f"operator of shape {T.shape} does not match n = {nn}")
    if n is not None and nn != n:
        raise DimensionMismatch(f"operator has n = {nn}, expected {n}")
    return T


def word_to_json(w: Word) -> dict:
    return {"field": str(w.field), "n": w.n, "convention": CONVENTION,
            "factors": [matrix_to_json(A) for A in w.factors]}


def word_from_json(d: dict) -> Word:
    try:
        f = field_from_string(d["field"])
        n = int(d["n"])
        facs = d["factors"]
    except JMSError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad word document: {exc}") from exc
    conv = d.get("convention", CONVENTION)
    if conv != CONVENTION:
        raise MalformedInput(f"unsupported convention {conv!r}")
    return Word(f, n, tuple(matrix_from_json(A, f) for A in facs))


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def target_hash(T: Matrix) -> str:
    return hashlib.sha256(canonical_dumps(operator_to_json(T)).encode()).hexdigest()


def report_to_json(rep: FactorizationReport) -> dict:
    return {"verified": rep.verified, "length": rep.length, "word": word_to_json(rep.word),
            "target_hash": target_hash(rep.target)}


def load_json(path: str):
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"{path}: invalid JSON ({exc})") from exc


def dump_json(obj, path: str | None):
    text = json.dumps(obj, indent=None, separators=(",", ":"))
    if path is None or path == "-":
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)
            fh.write("\n")
