"""Exception types shared across the package.

Every error raised on a documented failure path is a subclass of
:class:`RatGenError`, so callers (notably the CLI) can map any input
problem to a single diagnostic path.
"""


class RatGenError(Exception):
    """Base class for all errors raised by ratgen."""


class InvalidVariable(RatGenError):
    """Variable name is malformed or uses the reserved series variable."""


class MissingVariable(RatGenError):
    """An evaluation assignment does not cover every variable present."""


class OrderMismatch(RatGenError):
    """Two series prefixes with different truncation orders were combined."""


class BadConstantTerm(RatGenError):
    """A denominator whose constant term is not exactly 1 was supplied."""


class NegativeOrder(RatGenError):
    """A negative truncation order was requested."""


class PowerNotOne(RatGenError):
    """An operation that requires denominator power 1 got a higher power."""


class UnknownFamily(RatGenError):
    """A family name that is not in the catalog."""


class BadParameter(RatGenError):
    """A family parameter is missing, of the wrong type, or out of range."""


class ParseError(RatGenError):
    """Syntax error in an input expression.

    Attributes:
        position: 0-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NegativeExponent(ParseError):
    """An exponent literal preceded by a minus sign."""


class ExponentTooLarge(ParseError):
    """An exponent literal beyond the configured bound."""
