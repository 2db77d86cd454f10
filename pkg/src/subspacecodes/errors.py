"""Exception types raised by the library.

Everything derives from ValueError so callers that do not care about the
specific failure can catch one base class.
"""


class SubspaceCodesError(ValueError):
    """Base class for all domain errors raised by this package."""


class NotPrime(SubspaceCodesError):
    """Field characteristic is not a prime number."""


class FieldTooLarge(SubspaceCodesError):
    """Requested field order exceeds the supported limit (2**20)."""


class NoExtensionView(SubspaceCodesError):
    """Operation needs an extension/base field view that was never built."""


class ShapeMismatch(SubspaceCodesError):
    """Matrix or vector dimensions are incompatible."""


class LengthMismatch(SubspaceCodesError):
    """Vector length differs from the ambient dimension."""


class AmbientMismatch(SubspaceCodesError):
    """Subspaces live in different ambient spaces or over different fields."""


class BadParams(SubspaceCodesError):
    """Arguments are outside an operation's documented domain."""


class TooLarge(SubspaceCodesError):
    """Requested enumeration exceeds the configured size cap."""


class ShapeViolation(SubspaceCodesError):
    """A matrix has a nonzero entry outside the free region of its shape."""


class TooFewCodewords(SubspaceCodesError):
    """Operation needs at least two codewords."""


class MissingTopWord(SubspaceCodesError):
    """Constant-weight code lacks the required 1...10...0 word."""


class DeltaUnsupported(SubspaceCodesError):
    """No rank-metric code construction available for the requested distance."""


class SpecialVectorInQ(SubspaceCodesError):
    """Puncturing vector lies inside the hyperplane it must avoid."""


class InfeasibleParams(SubspaceCodesError):
    """Channel parameters cannot be realised for the given code."""


class BadLength(SubspaceCodesError):
    """Input bit vector has the wrong length for the encoding."""


class ParseError(SubspaceCodesError):
    """A textual code file or subspace literal could not be parsed."""


class InvariantViolation(SubspaceCodesError):
    """A loaded code file violates a structural invariant."""
