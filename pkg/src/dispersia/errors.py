"""Exception hierarchy shared by all dispersia modules."""


class DispersiaError(Exception):
    """Base class for every error raised by the library."""


class DomainError(DispersiaError, ValueError):
    """An argument lies outside the domain where a routine is defined."""


class NoRealWavenumberError(DomainError):
    """The source frequency has no real wavenumber (e.g. below a cutoff)."""


class AmbiguousWavenumberError(DomainError):
    """A custom dispersion relation is not monotone, so K is not unique."""


class ParityViolationError(DomainError):
    """A dispersion relation required to be even is not."""


class ConfigurationError(DispersiaError, ValueError):
    """Inconsistent parameters, evaluator choices or solver settings."""


class SingularMediumError(DispersiaError):
    """omega(k) vanishes at a quadrature node, so 1/omega is undefined."""


class ConvergenceError(DispersiaError):
    """A quadrature or tail extrapolation failed to settle.

    ``diagnostics`` holds whatever the failing routine knew at the time
    (partial sums, cell integrals, interval bounds).
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class DivergenceError(DispersiaError):
    """A time-stepping solver produced non-finite values."""
