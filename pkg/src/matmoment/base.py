# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""Exceptions for matmoment.

Every exception carries an ``exit_code`` that the command line uses directly:
1 for bad input, 2 for a failed mathematical precondition, 3 when a
quadrature does not converge and 4 when a verification run fails.
"""

__all__ = (
    "MomentError",
    "InputError",
    "ShapeMismatchError",
    "NotHermitianError",
    "MomentFileError",
    "KindMismatchError",
    "InconsistentInputsError",
    "NotPositiveDefiniteError",
    "NotToeplitzError",
    "NotHankelError",
    "OutOfRegionError",
    "AlphaOutOfRegionError",
    "EvalAtZeroError",
    "SingularAtPointError",
    "SingularDenominatorError",
    "BoundaryDegenerateError",
    "NotContractiveError",
    "RestrictedClassError",
    "SingularMeasureError",
    "IntegrandSingularError",
    "DegenerateProblemError",
    "NonconvergenceError",
    "VerificationError",
)


class MomentError(Exception):
    """Raised when a matmoment error happens or expectation is not met."""

    exit_code: int = 2


class InputError(MomentError):
    """Raised when user supplied data is malformed."""

    exit_code = 1


class ShapeMismatchError(InputError):
    """Raised when block sizes or counts do not agree."""


class NotHermitianError(InputError):
    """Raised when a block that must be Hermitian is not."""


class MomentFileError(InputError):
    """Raised when a moment file cannot be read or violates the schema."""


class KindMismatchError(InputError):
    """Raised when an operation is asked for the wrong problem kind."""


class InconsistentInputsError(InputError):
    """Raised when objects built from different problems are combined."""


class NotPositiveDefiniteError(MomentError):
    """Raised when a Gram matrix fails the positive definiteness test."""

    def __init__(self, message: str, min_pivot: float | None = None):
        self.min_pivot = min_pivot
        msg = "Gram matrix is not positive definite: "
        if msg in message:
            msg = ""
        if min_pivot is not None:
            message += f" (smallest pivot {min_pivot:.3e})"
        self.message = msg + message
        super().__init__(self.message)


class NotToeplitzError(MomentError):
    """Raised when a construction needs a block Toeplitz Gram matrix."""


class NotHankelError(MomentError):
    """Raised when a construction needs a block Hankel Gram matrix."""


class OutOfRegionError(MomentError):
    """Raised when a point lies outside the region an operation needs."""


class AlphaOutOfRegionError(OutOfRegionError):
    """Raised when the construction point alpha is not admissible."""


class EvalAtZeroError(MomentError):
    """Raised when a disc reflection is evaluated at the origin."""


class SingularAtPointError(MomentError):
    """Raised when E+ is numerically singular at a requested point."""


class SingularDenominatorError(MomentError):
    """Raised when the denominator of a linear fractional map is singular."""


class BoundaryDegenerateError(MomentError):
    """Raised when a boundary density cannot be formed at a point."""


class NotContractiveError(MomentError):
    """Raised when a Schur parameter exceeds unit norm."""


class RestrictedClassError(MomentError):
    """Raised when a Schur parameter is outside the restricted Hamburger class."""


class SingularMeasureError(MomentError):
    """Raised when S reaches unit norm on the boundary and the solution measure has a singular part."""


class IntegrandSingularError(MomentError):
    """Raised when a log-determinant integrand is not finite."""


class DegenerateProblemError(MomentError):
    """Raised when a construction needs more moments than were given."""


class NonconvergenceError(MomentError):
    """Raised when a quadrature exhausts its refinement budget."""

    exit_code = 3

    def __init__(self, message: str, difference: float | None = None):
        self.difference = difference
        if difference is not None:
            message += f" (last difference {difference:.3e})"
        self.message = message
        super().__init__(self.message)


class VerificationError(MomentError):
    """Raised when an identity report does not pass."""

    exit_code = 4

    def __init__(self, message: str, failed: list[str] | None = None):
        self.failed = list(failed or [])
        if self.failed:
            message += ": " + ", ".join(self.failed)
        self.message = message
        super().__init__(self.message)
