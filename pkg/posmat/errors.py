"""Exceptions raised by posmat.

Search outcomes such as ``inconclusive`` or a failed verification are values,
not exceptions. The classes below are only raised for bad input or for
internal bugs.
"""


class PosmatError(Exception):
    """Root of all posmat exceptions."""


class ParseError(PosmatError, ValueError):
    """A polynomial, point, matrix or JSON document could not be read."""


class SchemaError(ParseError):
    """A JSON document has an unknown version or misses mandatory keys."""


class VariableContextError(PosmatError, ValueError):
    """Objects defined over different variable lists were combined."""


class DimensionError(PosmatError, ValueError):
    """Matrix shapes do not agree, or a symmetric matrix was expected."""


class CertificateError(PosmatError, ValueError):
    """A certificate given to a transform does not verify."""


class InvariantBreach(PosmatError, AssertionError):
    """An object computed by posmat failed its own exact re-check.

    This always indicates a bug: every certificate and decomposition is
    verified by exact arithmetic before it leaves the library.
    """
