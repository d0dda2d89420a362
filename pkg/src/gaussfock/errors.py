"""Exception types raised by validated constructors and numerical routines."""


class GaussFockError(ValueError):
    """Base class for all validation and consistency errors in this package."""


class DimensionMismatchError(GaussFockError):
    """Operands have incompatible shapes or mode counts."""


class NotSymmetricError(GaussFockError):
    """A matrix required to equal its plain transpose does not."""


class NotRealSymmetricError(GaussFockError):
    """A matrix required to be real symmetric is complex or asymmetric."""


class NotUnitaryError(GaussFockError):
    """A matrix required to be unitary fails K+K = I within tolerance."""


class SingularMatrixError(GaussFockError):
    """A matrix is too close to singular for the requested operation."""


class ConstraintViolationError(GaussFockError):
    """A Bogoliubov pair (U, V) violates the defining group constraints."""

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(message)
        self.residual = residual


class NotInDiscError(GaussFockError):
    """A matrix parameter lies outside the open unit-operator-norm disc."""

    def __init__(self, message: str, norm: float = float("nan")):
        super().__init__(message)
        self.norm = norm


class FactorizationFailureError(GaussFockError):
    """A factorization did not reproduce its input within tolerance."""


class InternalInconsistencyError(GaussFockError):
    """Two formulas that must agree disagreed beyond tolerance."""


class InvalidAlphaError(GaussFockError):
    """A weight parameter alpha must be strictly positive."""


class CircuitSyntaxError(GaussFockError):
    """Circuit source text failed to parse; carries line and column."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col

    def __reduce__(self):
        # keep picklability despite the custom signature
        return (CircuitSyntaxError, (self.line, self.col,
                                     str(self).split(": ", 1)[1]))


class ModeOutOfRangeError(GaussFockError):
    """A gate addresses a mode index outside the declared dimension."""
