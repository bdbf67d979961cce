"""Exception types for matrix-domain failures.

Bad scalar arguments (out-of-range ranks, exponents, mixing parameters, ...)
raise plain ``ValueError`` with a descriptive message; the classes below mark
conditions a caller may reasonably want to catch separately.
"""


class NotHermitianError(ValueError):
    """Matrix fails the Hermitian symmetry check."""


class NegativeEigenvalueError(ValueError):
    """Operator has an eigenvalue below the tolerated rounding floor."""


class DimensionMismatchError(ValueError):
    """Operands live in different Hilbert-space dimensions."""


class NotUnitaryError(ValueError):
    """Matrix fails the unitarity check."""


class NotPrimeError(ValueError):
    """Operation is only defined for prime dimension."""


class NotNormalizedError(ValueError):
    """State vector is not normalized to unit length."""


class NoKnownFiducialError(ValueError):
    """No built-in SIC fiducial vector for the requested dimension."""


class StateFileError(ValueError):
    """A state file violates its schema or a state invariant."""
