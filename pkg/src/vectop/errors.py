"""Exception hierarchy.  Every class carries a short machine-readable ``code``."""


class VectopError(Exception):
    code = "error"


class ModelError(VectopError, ValueError):
    """A field model specification failed validation."""

    code = "invalid-model"


class ZeroDivisorError(VectopError, ArithmeticError):
    """Inversion hit a zero divisor of K[x]/(m); ``witness`` is the nontrivial gcd."""

    code = "zero-divisor"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DimensionError(VectopError, ValueError):
    code = "dimension-mismatch"


class ModelMismatchError(VectopError, ValueError):
    code = "field-mismatch"


class CapExceededError(VectopError, ValueError):
    """A brute-force instance is larger than the documented enumeration cap."""

    code = "cap-exceeded"
