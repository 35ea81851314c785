"""Exception types raised by the solver and oracle modules."""


class CauchyWellError(Exception):
    """Base class for all package errors."""


class TruncationTooSmall(CauchyWellError):
    """Requested more eigenvalues than the truncated system can supply."""


class DegenerateBoundaryRow(CauchyWellError):
    """The boundary constraint cannot eliminate the highest coefficient."""


class NormalizationImpossible(CauchyWellError):
    """A state cannot be scaled to unit norm (vanishing leading coefficient
    or an underflowing norm integral)."""


class InvalidLabel(CauchyWellError):
    """Quantum-number label out of range (|m| > l, unsupported l, mismatched orbital)."""


class OutOfDomain(CauchyWellError):
    """Evaluation point outside the validity domain of a formula or quadrature."""


class QuadratureNotConverged(CauchyWellError):
    """Successive extrapolation levels of the principal-value quadrature
    disagree beyond the requested tolerance."""


class NoRootsFound(CauchyWellError):
    """Determinant scan found no sign change in the requested interval."""
