"""Exception types raised by the toolkit."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NumericRangeError(ArithmeticError):
    """A result could not be represented in double precision."""


class DegeneracyError(ArithmeticError):
    """The Liouvillian kernel is not one-dimensional."""


class PositivityError(ValueError):
    """A density matrix has a significantly negative eigenvalue."""


class IntegrationError(RuntimeError):
    """The time integrator became unstable."""


class ResourceError(ValueError):
    """A requested dense construction exceeds the configured size guard."""
