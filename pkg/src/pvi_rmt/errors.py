"""Exception hierarchy shared by all modules."""


class PVIError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(PVIError, ValueError):
    """A Gamma function (or similar) was evaluated at a pole."""


class DegenerateParameterError(PVIError, ValueError):
    """Parameters hit an excluded integer (logarithmic or degenerate) case."""


class ConvergenceDomainError(PVIError, ValueError):
    """A series was requested outside its safe convergence domain."""


class RangeError(PVIError, ValueError):
    """An integer argument is out of its admissible range."""


class SingularMatrixError(PVIError, ArithmeticError):
    """A pivot underflowed during LU factorisation."""


class TrustRegionError(PVIError, ValueError):
    """A truncated series was evaluated outside its trust region."""


class PathSingularityError(PVIError, ValueError):
    """An integration path passes too close to a fixed singularity."""


class BranchLossError(PVIError, ArithmeticError):
    """The square-root branch of sigma'' could not be resolved."""


class CaseMismatchError(PVIError, ValueError):
    """Theta exponents and sigma-form parameters are inconsistent."""


class NonInvertibleC(PVIError, ArithmeticError):
    """The connection matrix C is numerically singular."""


class OrderTooLow(PVIError, ArithmeticError):
    """Two determinant routes disagree: the quadrature order is too low."""
