"""Exception hierarchy shared across the package.

Two families matter to callers: ``ValidationError`` for rejected inputs
(bad matrices, bad exponents, malformed documents) and ``NumericError``
for computations that cannot produce a meaningful value.  The CLI maps
them to distinct exit codes.
"""


class BoxdimError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(BoxdimError):
    """An input failed a precondition or schema check."""


class NumericError(BoxdimError):
    """A numeric routine could not produce a trustworthy result."""


class NotGeneralizedPermutation(ValidationError):
    """Matrix data does not describe exactly one nonzero entry per row and column."""


class DimensionMismatch(ValidationError):
    """Operands or system members do not share the same ambient dimension."""


class NegativeExponent(ValidationError):
    """The singular-value-function exponent must be nonnegative."""


class InvalidK(ValidationError):
    """Lift order k must satisfy 0 <= k < d."""


class BasisMismatch(ValidationError):
    """Lift basis was built for a different dimension or exponent range."""


class UnsupportedDimension(ValidationError):
    """Operation is only defined in a specific ambient dimension."""


class InvalidExponents(ValidationError):
    """Weighted-lift exponents must satisfy 0 < t <= 1 and t <= s <= 2t."""


class EmptySystem(ValidationError):
    """An iterated function system needs at least one map."""


class NotContractive(ValidationError):
    """Every linear part must have operator norm strictly below one."""


class InvalidT(ValidationError):
    """Projection exponent t must lie in (0, 1]."""


class ParseError(ValidationError):
    """A system document is malformed."""


class DepthTooLarge(ValidationError):
    """Exhaustive enumeration would exceed the word-count guard."""


class InvalidRenderConfig(ValidationError):
    """Render parameters violate their invariants."""


class NoRootInRange(NumericError):
    """The modified pressure has no zero inside [t, 2t]."""


class ConvergenceFailure(NumericError):
    """An iteration hit its step limit before reaching tolerance."""


class ZeroSpectralRadius(NumericError):
    """Defensive guard: the lifted sum should always have positive spectral radius."""
