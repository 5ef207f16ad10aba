"""Exception types shared across the package."""


class QhcError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(QhcError):
    """Operands have incompatible or invalid dimensions."""


class InvalidParameter(QhcError):
    """A numeric argument is outside its permitted domain (NaN, infinity, ...)."""


class InvalidOrbit(QhcError):
    """An orbit contains duplicate, missing, or out-of-range basis indices."""


class SynthesisError(QhcError):
    """A truth table does not admit the cycle construction."""


class NotSymmetric(SynthesisError):
    """Outputs are not a function of the input Hamming weight alone."""


class InitialStateMismatch(SynthesisError):
    """The all-zeros input must map to the all-zeros output."""


class NonEmbeddable(SynthesisError):
    """No cycle length reproduces the output sequence with distinct states."""


class NonUnitaryError(QhcError):
    """A matrix expected to be unitary is not, within tolerance."""


class ParseError(QhcError):
    """A document is structurally malformed."""


class ValidationError(QhcError):
    """A parsed document violates a truth-table invariant."""
