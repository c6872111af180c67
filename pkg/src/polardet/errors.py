"""Exception types shared across the package."""


class PolardetError(Exception):
    """Base class for all package errors."""


class InvalidArgument(PolardetError, ValueError):
    pass


class InvalidFamily(InvalidArgument):
    """A polynomial or coefficient set violates its family's membership rule."""


class InvalidPairing(InvalidArgument):
    """Two matrices fail the mod-2 congruence precondition."""


class BudgetExceeded(PolardetError):
    """An enumeration or evaluation cap was hit.

    ``resume_rank`` is the first instance rank not yet processed, when known.
    """

    def __init__(self, message, resume_rank=None):
        super().__init__(message)
        self.resume_rank = resume_rank


class KernelError(PolardetError, AssertionError):
    """An exact-arithmetic invariant failed; always a bug, never a finding."""


class NumericInconclusive(PolardetError):
    """A numeric routine could not certify its answer.

    Carries the last computed value and its error estimate so callers can
    report them without treating them as certified.
    """

    def __init__(self, message, value=None, error_bound=None):
        super().__init__(message)
        self.value = value
        self.error_bound = error_bound
