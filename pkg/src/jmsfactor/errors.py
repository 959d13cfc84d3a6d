"""Exception types raised across the package.

Every error derives from ``JMSError`` so callers (and the CLI) can catch the
whole family at once.  Most also derive from a builtin so plain ``except
ValueError`` style handling keeps working.
"""


class JMSError(Exception):
    pass


# fields and scalars
class CharTwo(JMSError, ValueError):
    pass


class NotPrime(JMSError, ValueError):
    pass


class NotFinite(JMSError, ValueError):
    pass


class ZeroDenominator(JMSError, ValueError):
    pass


class MalformedLiteral(JMSError, ValueError):
    pass


class DivisionByZero(JMSError, ZeroDivisionError):
    pass


class FieldMismatch(JMSError, ValueError):
    pass


class WrongField(JMSError, ValueError):
    pass


class UnsupportedField(JMSError, ValueError):
    pass


# linear algebra
class DimensionMismatch(JMSError, ValueError):
    pass


class DimensionNotSquare(JMSError, ValueError):
    pass


class NotSquare(JMSError, ValueError):
    pass


class Singular(JMSError, ArithmeticError):
    pass


class Inconsistent(JMSError, ArithmeticError):
    pass


# word builders and pipeline
class NotRankOneSquareZero(JMSError, ValueError):
    pass


class BadIndices(JMSError, ValueError):
    pass


class NotSL(JMSError, ValueError):
    pass


class NotSingular(JMSError, ValueError):
    pass


class ExceptionalParameter(JMSError, ValueError):
    pass


class ZeroDeterminant(JMSError, ValueError):
    pass


# analysis
class NotTriangular(JMSError, ValueError):
    pass


class TrivialCharacter(JMSError, ValueError):
    pass


class UnknownIdentity(JMSError, KeyError):
    pass


class MalformedInput(JMSError, ValueError):
    """A JSON document does not follow one of the documented formats."""
