"""Spectral solver for the square-root Laplacian in the unit ball.

Computes eigenvalues and eigenfunctions of ``(-Delta)^(1/2)`` restricted to
functions vanishing outside the open unit ball (exterior Dirichlet data) by
polynomial truncation of the radial series, and validates the closed-form
operator action with an independent principal-value quadrature.
"""

__version__ = "0.1.0"

from .basis import (
    GeneratingMatrix,
    TaylorCoefficients,
    generating_matrix,
    generating_matrix_exact,
    taylor_coefficients,
    taylor_coefficients_exact,
)
from .diagnostics import (
    apply_operator_polynomial,
    asymptotic_gap,
    coefficient_correspondence,
    d1_comparison,
    detuning,
)
from .eigenfunctions import (
    AnalyticApproximant,
    DensityGrid,
    RadialProfile,
    WaveFunctionLabel,
    analytic_ground_state,
    density,
    density_grid,
    evaluate_radial,
    normalize,
    profile_from_series,
    spherical_harmonic,
    wavefunction,
)
from .errors import (
    CauchyWellError,
    DegenerateBoundaryRow,
    InvalidLabel,
    NoRootsFound,
    NormalizationImpossible,
    OutOfDomain,
    QuadratureNotConverged,
    TruncationTooSmall,
)
from .oracle import (
    QuadratureSpec,
    TrialFunction,
    closed_form_action,
    d1_pv_apply,
    exterior_kernel_integral,
    exterior_kernel_quadrature,
    pv_apply,
    verify_action_formula,
)
from .solver import (
    SeriesEntry,
    SpectralSeries,
    TruncatedPencil,
    assemble_pencil,
    boundary_residual,
    det_scan,
    solve_series,
)

__all__ = [
    "__version__",
    "GeneratingMatrix",
    "TaylorCoefficients",
    "generating_matrix",
    "generating_matrix_exact",
    "taylor_coefficients",
    "taylor_coefficients_exact",
    "apply_operator_polynomial",
    "asymptotic_gap",
    "coefficient_correspondence",
    "d1_comparison",
    "detuning",
    "AnalyticApproximant",
    "DensityGrid",
    "RadialProfile",
    "WaveFunctionLabel",
    "analytic_ground_state",
    "density",
    "density_grid",
    "evaluate_radial",
    "normalize",
    "profile_from_series",
    "spherical_harmonic",
    "wavefunction",
    "CauchyWellError",
    "DegenerateBoundaryRow",
    "InvalidLabel",
    "NoRootsFound",
    "NormalizationImpossible",
    "OutOfDomain",
    "QuadratureNotConverged",
    "TruncationTooSmall",
    "QuadratureSpec",
    "TrialFunction",
    "closed_form_action",
    "d1_pv_apply",
    "exterior_kernel_integral",
    "exterior_kernel_quadrature",
    "pv_apply",
    "verify_action_formula",
    "SeriesEntry",
    "SpectralSeries",
    "TruncatedPencil",
    "assemble_pencil",
    "boundary_residual",
    "det_scan",
    "solve_series",
]
