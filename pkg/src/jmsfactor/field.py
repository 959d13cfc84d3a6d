"""Ground fields: the rationals and prime fields of odd characteristic.

A ``Field`` is a small immutable value.  Matrix code works on *raw* values
(``Fraction`` over Q, ``int`` residues over F_p) for speed and uses the field
only to reduce, invert and render them.  ``Scalar`` wraps a raw value together
with its field for the public API.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

import flint

from .errors import (CharTwo, DivisionByZero, FieldMismatch, MalformedLiteral,
                     NotFinite, NotPrime, ZeroDenominator)

RATIONALS = "Q"
PRIME_FIELD = "Fp"

_LITERAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


def is_prime(m: int) -> bool:
    return m >= 2 and bool(flint.fmpz(m).is_prime())


@dataclass(frozen=True)
class Field:
    """Q when ``modulus`` is None, otherwise the prime field F_modulus."""

    modulus: int | None = None

    def __post_init__(self):
        p = self.modulus
        if p is None:
            return
        if not isinstance(p, int) or isinstance(p, bool):
            raise NotPrime(f"modulus must be an integer, got {p!r}")
        if p == 2:
            raise CharTwo("characteristic 2 is not supported: the Jordan product needs 1/2")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime (only prime fields F_p are supported)")

    @property
    def kind(self) -> str:
        return RATIONALS if self.modulus is None else PRIME_FIELD

    @property
    def is_finite(self) -> bool:
        return self.modulus is not None

    @property
    def characteristic(self) -> int:
        return 0 if self.modulus is None else self.modulus

    def __str__(self):
        return "Q" if self.modulus is None else f"Fp:{self.modulus}"

    def __repr__(self):
        return f"Field({self})"

    # raw value helpers --------------------------------------------------

    def reduce(self, x) -> Union[Fraction, int]:
        """Canonical raw value of an int, Fraction or Scalar."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"scalar over {x.field} used in {self}")
            return x.value
        p = self.modulus
        if p is None:
            return x if type(x) is Fraction else Fraction(x)
        if type(x) is int:
            return x % p
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDenominator(f"denominator of {x} vanishes mod {p}")
            return x.numerator * pow(den, -1, p) % p
        if isinstance(x, int):
            return int(x) % p
        raise TypeError(f"cannot interpret {x!r} as an element of {self}")

    @property
    def zero(self):
        return Fraction(0) if self.modulus is None else 0

    @property
    def one(self):
        return Fraction(1) if self.modulus is None else 1

    @property
    def half(self):
        return Fraction(1, 2) if self.modulus is None else (self.modulus + 1) // 2

    def inv(self, x):
        if not x:
            raise DivisionByZero("0 has no inverse")
        if self.modulus is None:
            return 1 / x
        return pow(x, -1, self.modulus)

    def parse(self, text: str):
        if not isinstance(text, str):
            raise MalformedLiteral(f"expected a string literal, got {text!r}")
        m = _LITERAL.match(text)
        if not m:
            raise MalformedLiteral(f"not a scalar literal: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ZeroDenominator(f"zero denominator in {text!r}")
        if self.modulus is None:
            return Fraction(num, den)
        if den % self.modulus == 0:
            raise ZeroDenominator(f"denominator of {text!r} vanishes mod {self.modulus}")
        return num * pow(den, -1, self.modulus) % self.modulus

    def render(self, x) -> str:
        if self.modulus is None:
            return str(x)
        return str(x % self.modulus)

    def elements(self) -> Iterator[int]:
        if self.modulus is None:
            raise NotFinite("Q is infinite")
        return iter(range(self.modulus))

    def random(self, rng: random.Random, bound: int = 9, max_den: int = 4):
        """Random raw element; over Q a small fraction num/den."""
        if self.modulus is None:
            return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
        return rng.randrange(self.modulus)

    def random_nonzero(self, rng: random.Random, bound: int = 9, max_den: int = 4):
        while True:
            x = self.random(rng, bound, max_den)
            if x:
                return x

    def __call__(self, x) -> "Scalar":
        if isinstance(x, str):
            return Scalar(self, self.parse(x))
        return Scalar(self, self.reduce(x))


QQ = Field()


def make_field(kind: str = RATIONALS, modulus: int | None = None) -> Field:
    """Build a field from a kind tag ("Q" or "Fp") and an optional modulus."""
    k = str(kind).strip().lower()
    if k in ("q", "rationals", "qq"):
        if modulus is not None:
            raise MalformedLiteral("the rationals take no modulus")
        return QQ
    if k in ("fp", "primefield", "prime", "gf"):
        if modulus is None:
            raise MalformedLiteral("a prime field needs a modulus")
        return Field(int(modulus))
    raise MalformedLiteral(f"unknown field kind {kind!r}")


def field_from_string(text: str) -> Field:
    """Parse the "Q" / "Fp:<p>" grammar used by files and the CLI."""
    t = text.strip()
    if t == "Q":
        return QQ
    m = re.fullmatch(r"(?:Fp|F|GF):?(\d+)", t)
    if not m:
        raise MalformedLiteral(f"field must be 'Q' or 'Fp:<p>', got {text!r}")
    return Field(int(m.group(1)))


@dataclass(frozen=True)
class Scalar:
    field: Field
    value: Union[Fraction, int]

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.reduce(other)

    def _wrap(self, v):
        return Scalar(self.field, self.field.reduce(v))

    def __add__(self, other):
        return self._wrap(self.value + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.value - self._other(other))

    def __rsub__(self, other):
        return self._wrap(self._other(other) - self.value)

    def __mul__(self, other):
        return self._wrap(self.value * self._other(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.value * self.field.inv(self._other(other)))

    def __rtruediv__(self, other):
        return self._wrap(self._other(other) * self.field.inv(self.value))

    def __neg__(self):
        return self._wrap(-self.value)

    def __pow__(self, k: int):
        if k < 0:
            return invert(self) ** (-k)
        p = self.field.modulus
        if p is None:
            return Scalar(self.field, self.value ** k)
        return Scalar(self.field, pow(self.value, k, p))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.reduce(other)
            except ZeroDenominator:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.render(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self})"


def parse_scalar(field: Field, text: str) -> Scalar:
    return Scalar(field, field.parse(text))


def render(x: Scalar) -> str:
    return str(x)


def invert(x: Scalar) -> Scalar:
    return Scalar(x.field, x.field.inv(x.value))


def multiplicative_order(field: Field, g: int) -> int:
    p = field.modulus
    if p is None:
        raise NotFinite("multiplicative orders are only computed over F_p")
    g %= p
    if g == 0:
        raise DivisionByZero("0 is not a unit")
    k, x = 1, g
    while x != 1:
        x = x * g % p
        k += 1
    return k


def multiplicative_generator(field: Field) -> Scalar:
    """Smallest generator of the cyclic group F_p^x."""
    p = field.modulus
    if p is None:
        raise NotFinite("Q^x is not cyclic")
    q = p - 1
    primes = [int(f) for f, _ in flint.fmpz(q).factor()]
    for g in range(1, p):
        if all(pow(g, q // f, p) != 1 for f in primes):
            return Scalar(field, g)
    raise AssertionError("unreachable: F_p^x is cyclic")
