"""Exception types shared across the package."""


class Su2StrataError(Exception):
    """Base class for all domain errors raised by this package."""


class SingularMatrix(Su2StrataError):
    """Inverse requested for a matrix with zero determinant."""


class NotUnimodular(Su2StrataError):
    """Operation requires determinant exactly one."""


class FloatOnlyOperation(Su2StrataError):
    """Transcendental operation invoked on the exact scalar backend."""


class InvalidDims(Su2StrataError):
    """Lattice extents outside the allowed range."""


class LatticeMismatch(Su2StrataError):
    """Two lattice-indexed objects built over different lattices."""


class SolveFailed(Su2StrataError):
    """Constraint-surface sampler exhausted its retry budget."""


class InvalidParams(Su2StrataError):
    """Parameters violate a constructor's preconditions."""


class NotInClosure(Su2StrataError):
    """Tuple is not in the closure of the torus stratum."""


class ExactWitnessUnavailable(Su2StrataError):
    """Eigenvalue needs a square root with no Gaussian-rational value."""


class DegreeInfeasible(Su2StrataError):
    """Degree vector contains a negative entry."""


class RadicalViolation(Su2StrataError):
    """A sampled polynomial contradicted radicality.  Carries the witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PolySyntaxError(Su2StrataError):
    """Polynomial text does not match the grammar."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class PolyIndexError(Su2StrataError):
    """Variable indices are out of range or not strictly increasing."""

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (at offset {offset})")
        self.offset = offset
