"""Exception hierarchy for spikelr.

Every error raised on purpose by the library derives from SpikelrError, so
callers can catch one type at the boundary. The CLI maps subclasses onto
distinct exit codes.
"""


class SpikelrError(Exception):
    """Base class for all spikelr errors."""


class DomainError(SpikelrError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class RegimeError(DomainError):
    """A spike strength h outside the guard band where the saddle-point
    machinery is valid (0 < h <= (1 - eps) * sqrt(c))."""


class SaddleCollisionError(SpikelrError):
    """The saddle point z0(h) does not clear the largest sample eigenvalue.

    The asymptotic log-likelihood-ratio formula evaluates ln(z0 - lambda_j)
    and becomes undefined in this event; it signals a sample/regime mismatch
    rather than a bug.
    """


class ContourGeometryError(SpikelrError):
    """No admissible contour exists for the requested integral, for example
    when the real-axis crossing cannot both clear the eigenvalues and stay
    left of the mu-kind singularity."""


class QuadratureError(SpikelrError):
    """A contour or density quadrature failed to converge to tolerance, or
    produced a value inconsistent with a provably real positive integral."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class EigensolverError(SpikelrError):
    """The symmetric eigensolver failed on a sample covariance matrix."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class FactorizationError(SpikelrError):
    """A covariance matrix could not be Cholesky-factorized even after the
    diagonal jitter ladder was exhausted."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class InapplicableTestError(SpikelrError):
    """A classical test was requested on data that violates its
    preconditions, such as the Gaussian-likelihood test with p >= n."""


class ConfigError(SpikelrError):
    """Inconsistent or unparseable run configuration."""


class DataFormatError(SpikelrError):
    """An eigenvalue input file is malformed."""
