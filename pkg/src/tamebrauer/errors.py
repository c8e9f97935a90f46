"""Typed errors raised by the library.

Domain errors (bad inputs, unsupported towers) derive from TameError and map
to CLI exit code 1.  InternalInvariantViolation signals an arithmetic
identity that must hold for every well-formed input (a tripwire); it maps to
exit code 2 and always indicates a bug, never bad data.
"""


class TameError(Exception):
    """Base class for all typed domain errors."""


class TowerMismatch(TameError):
    """Operands belong to different field towers."""


class DivisionByZero(TameError):
    pass


class ZeroPolynomial(TameError):
    pass


class ZeroElement(TameError):
    pass


class ZeroEntry(TameError):
    pass


class CharacteristicDivides(TameError):
    """The order n is not invertible in the relevant residue field."""


class CharacteristicTwo(TameError):
    """Quadratic form arithmetic requires characteristic != 2."""


class RootsOfUnityMissing(TameError):
    """n does not divide q - 1, so mu_n is not contained in the field."""


class NegativeValuation(TameError):
    pass


class UnsupportedTower(TameError):
    """The tower shape is outside the decidable fragment for this operation."""


class OddDimension(TameError):
    pass


class EmptyInput(TameError):
    pass


class NotBiquaternion(TameError):
    pass


class WildRamification(TameError):
    pass


class WildPrime(TameError):
    pass


class SearchExhausted(TameError):
    """A bounded search ended without a certificate; carries partial data."""

    def __init__(self, message, transcript=None):
        super().__init__(message)
        self.transcript = transcript


class NotALineArrangement(TameError):
    pass


class IrrationalIntersection(TameError):
    pass


class NotNormalCrossing(TameError):
    pass


class JobSyntaxError(TameError):
    """Job text failed to parse; carries line/column."""

    def __init__(self, message, line=None, col=None):
        loc = f" (line {line}, col {col})" if line is not None else ""
        super().__init__(message + loc)
        self.line = line
        self.col = col


class JobSemanticError(TameError):
    """Job parsed but is not well-typed (undeclared variable, bad n, ...)."""


class InternalInvariantViolation(AssertionError):
    """An identity that must hold for all well-formed inputs failed."""
