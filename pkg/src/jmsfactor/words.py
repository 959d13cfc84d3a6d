"""Words in the Jordan multiplication operators.

A word [A1, ..., Ak] stands for the composition L_A1 L_A2 ... L_Ak, so the
last factor is applied to an argument first.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable

from . import _backend
from .errors import DimensionMismatch, FieldMismatch
from .exactlinalg import Matrix
from .field import Field
from .jordan import op_L, operator_n

CONVENTION = "apply-last-first"


@dataclass(frozen=True)
class Word:
    field: Field
    n: int
    factors: tuple = ()

    def __post_init__(self):
        if not isinstance(self.factors, tuple):
            object.__setattr__(self, "factors", tuple(self.factors))
        for A in self.factors:
            if A.field != self.field:
                raise FieldMismatch(f"factor over {A.field} in a word over {self.field}")
            if A.rows != self.n or A.cols != self.n:
                raise DimensionMismatch(f"factor of shape {A.shape} in a word with n = {self.n}")

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __add__(self, other: "Word") -> "Word":
        return concat(self, other)

    @classmethod
    def empty(cls, field: Field, n: int) -> "Word":
        return cls(field, n, ())

    @classmethod
    def single(cls, A: Matrix) -> "Word":
        return cls(A.field, A.rows, (A,))

    def conjugated(self, S: Matrix, S_inv: Matrix | None = None) -> "Word":
        """Replace each factor A by S A S^-1.

        Conjugating every factor conjugates the whole composition by the
        operator X -> S X S^-1.
        """
        S_inv = S.inverse() if S_inv is None else S_inv
        return Word._trusted(self.field, self.n, tuple(S @ A @ S_inv for A in self.factors))

    @classmethod
    def _trusted(cls, field, n, factors):
        w = object.__new__(cls)
        object.__setattr__(w, "field", field)
        object.__setattr__(w, "n", n)
        object.__setattr__(w, "factors", factors)
        return w


def concat(*words: Word) -> Word:
    if not words:
        raise ValueError("concat needs at least one word")
    f, n = words[0].field, words[0].n
    for w in words[1:]:
        if w.field != f:
            raise FieldMismatch(f"{w.field} vs {f}")
        if w.n != n:
            raise DimensionMismatch(f"n = {w.n} vs n = {n}")
    out = []
    for w in words:
        out.extend(w.factors)
    return Word._trusted(f, n, tuple(out))


def concat_list(field: Field, n: int, words: Iterable[Word]) -> Word:
    words = list(words)
    return concat(Word.empty(field, n), *words)


def repeat(w: Word, r: int) -> Word:
    if r < 0:
        raise ValueError("repeat count must be non-negative")
    return Word._trusted(w.field, w.n, w.factors * r)


def evaluate(w: Word) -> Matrix:
    """The n^2 x n^2 operator matrix of the word (flint-backed)."""
    return _backend.product_of_L(w.field, w.n, w.factors)


def evaluate_reference(w: Word) -> Matrix:
    """Same as ``evaluate`` with pure-Python products; slow, used as a cross-check."""
    acc = Matrix.identity(w.field, w.n * w.n)
    for A in w.factors:
        acc = acc @ op_L(A)
    return acc


@dataclass(frozen=True)
class FactorizationReport:
    word: Word
    target: Matrix
    verified: bool
    length: int
    stats: dict = dc_field(default_factory=dict, compare=False)


def verify(w: Word, target: Matrix) -> FactorizationReport:
    n = operator_n(target)
    if n != w.n:
        raise DimensionMismatch(f"word has n = {w.n}, target has n = {n}")
    if target.field != w.field:
        raise FieldMismatch(f"word over {w.field}, target over {target.field}")
    return FactorizationReport(w, target, evaluate(w) == target, len(w))
