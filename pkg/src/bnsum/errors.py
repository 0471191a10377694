"""Exception types shared across the package."""


class BnsumError(Exception):
    """Base class for all errors raised by bnsum."""


class DomainError(BnsumError, ValueError):
    """Argument outside the domain of the requested operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class SingularityError(DomainError):
    """Evaluation requested at a non-removable singularity."""


class ToleranceError(BnsumError):
    """A certified error bound could not be pushed below the requested tolerance."""


class ConvergenceError(BnsumError):
    """A quadrature or acceleration scheme failed to meet its tolerance."""
