"""Verification apparatus: operator action on solved profiles, pointwise
detuning, the dimensional correspondence of the radial series, and the
asymptotic eigenvalue law."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .basis import generating_matrix
from .eigenfunctions import RadialProfile, evaluate_radial
from .errors import InvalidLabel
from .oracle import d1_pv_apply
from .solver import SpectralSeries

__all__ = [
    "D1_EVEN_REFERENCE_VARIATIONAL",
    "D1_EVEN_REFERENCE_ASYMPTOTIC",
    "apply_operator_polynomial",
    "DetuningCurve",
    "detuning",
    "D1ComparisonRow",
    "d1_comparison",
    "asymptotic_gap",
    "CorrespondenceReport",
    "coefficient_correspondence",
]

# Published approximations of the even-numbered eigenvalues E_2, E_4, ...,
# E_12 of the one-dimensional Cauchy well on (-1, 1), which the purely
# radial three-dimensional series must reproduce.  First row: high-accuracy
# variational values; second row: asymptotic-expansion solver (its sixth
# value was never published).
D1_EVEN_REFERENCE_VARIATIONAL: tuple[float, ...] = (
    2.754795,
    5.892233,
    9.032984,
    12.174295,
    15.315777,
    18.457329,
)
D1_EVEN_REFERENCE_ASYMPTOTIC: tuple[float | None, ...] = (
    2.748894,
    5.890486,
    9.032079,
    12.173672,
    15.315554,
    None,
)

DETUNING_DEFAULT_SAMPLES = 10_000
# dense sampling is needed near r = 1 where the residual concentrates, but
# the curve is exactly 0 at r = 1 itself
DETUNING_UPPER_EDGE = 1.0 - 1e-9


def apply_operator_polynomial(profile: RadialProfile, l: int) -> NDArray[np.float64]:
    """Even-polynomial image of the square-root Laplacian on ``profile``.

    Returns coefficients ``q_{2i} = sum_{k>=i} delta_{2k} a^(l)_{k-i,k}`` of
    the degree-2n polynomial q with
    ``(-Delta)^(1/2)[S_l f] = S_l q`` on the truncated radial basis.
    Linear in the profile coefficients.
    """
    if profile.orbital != l:
        raise InvalidLabel(f"profile orbital {profile.orbital} does not match l={l}")
    delta = profile.coefficients
    n = len(delta) - 1
    entries = generating_matrix(l, n).entries
    q = np.empty(n + 1)
    for i in range(n + 1):
        cols = np.arange(i, n + 1)
        q[i] = np.dot(delta[cols], entries[cols - i, cols])
    return q


def _polyval_even(coefficients: NDArray[np.float64], r: np.ndarray) -> np.ndarray:
    out = np.zeros_like(r)
    r2 = r * r
    for coefficient in coefficients[::-1]:
        out = out * r2 + coefficient
    return out


@dataclass(frozen=True)
class DetuningCurve:
    """Pointwise residual ``|(-Delta)^(1/2) psi - E psi|`` along the radius
    for a finite-degree solution (angular factor cancels; radial parts times
    the normalization constant)."""

    degree: int
    energy: float
    radii: NDArray[np.float64] = field(repr=False)
    values: NDArray[np.float64] = field(repr=False)
    max_detuning: float = 0.0
    argmax_radius: float = 0.0

    def __post_init__(self) -> None:
        for name in ("radii", "values"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


def detuning(
    profile: RadialProfile, energy: float, n_samples: int = DETUNING_DEFAULT_SAMPLES
) -> DetuningCurve:
    """Sample the residual on a uniform radial grid in [0, 1).

    The polynomial operator image q is exact on the truncated basis, so the
    residual measures only how far the truncated state is from an exact
    eigenfunction; it vanishes identically in the untruncated limit.
    """
    if n_samples < 100:
        raise ValueError("need at least 100 samples")
    if profile.normalization is None:
        raise InvalidLabel("profile must carry its normalization constant")
    q = apply_operator_polynomial(profile, profile.orbital)
    radii = np.linspace(0.0, DETUNING_UPPER_EDGE, n_samples)
    image = _polyval_even(q, radii)
    values = (
        profile.normalization
        * radii**profile.orbital
        * np.abs(image - energy * evaluate_radial(profile, radii))
    )
    peak = int(np.argmax(values))
    return DetuningCurve(
        degree=profile.degree,
        energy=energy,
        radii=radii,
        values=values,
        max_detuning=float(values[peak]),
        argmax_radius=float(radii[peak]),
    )


@dataclass(frozen=True)
class D1ComparisonRow:
    """One rank of the purely radial series against the stored
    one-dimensional references (None where unpublished)."""

    k: int
    computed: float
    reference_variational: float | None
    reference_asymptotic: float | None
    diff_variational: float | None
    diff_asymptotic: float | None


def d1_comparison(series: SpectralSeries) -> list[D1ComparisonRow]:
    """Compare an l = 0 series against the stored d = 1 reference rows."""
    if series.orbital != 0:
        raise InvalidLabel("dimensional comparison applies to the l = 0 series")
    rows = []
    for entry in series.entries[: len(D1_EVEN_REFERENCE_VARIATIONAL)]:
        variational = D1_EVEN_REFERENCE_VARIATIONAL[entry.k - 1]
        asymptotic = D1_EVEN_REFERENCE_ASYMPTOTIC[entry.k - 1]
        rows.append(
            D1ComparisonRow(
                k=entry.k,
                computed=entry.energy,
                reference_variational=variational,
                reference_asymptotic=asymptotic,
                diff_variational=abs(entry.energy - variational),
                diff_asymptotic=(
                    None if asymptotic is None else abs(entry.energy - asymptotic)
                ),
            )
        )
    return rows


def asymptotic_gap(series: SpectralSeries) -> list[tuple[int, float]]:
    """Distances ``|E_(k,0) - (k pi - pi/8)|`` to the large-k law of the
    even one-dimensional spectrum."""
    if series.orbital != 0:
        raise InvalidLabel("the asymptotic law applies to the l = 0 series")
    return [
        (entry.k, abs(entry.energy - (entry.k * np.pi - np.pi / 8.0)))
        for entry in series.entries
    ]


@dataclass(frozen=True)
class CorrespondenceReport:
    """Pointwise check that the radial l = 0 problem reduces to the odd
    sector of the one-dimensional well."""

    points: tuple[float, ...]
    closed_form: tuple[float, ...]
    oracle: tuple[float, ...]
    max_abs_difference: float
    tolerance: float

    @property
    def within_tolerance(self) -> bool:
        return self.max_abs_difference <= self.tolerance


def coefficient_correspondence(
    series: SpectralSeries,
    points: tuple[float, ...] = (0.0, 0.3, 0.7),
    tolerance: float = 1e-3,
) -> CorrespondenceReport:
    """Verify that ``r * q(r)`` (closed-form operator image of the radial
    ground state, times r) equals the one-dimensional operator applied to
    the odd extension ``t * f(t)``, evaluated by independent quadrature.

    Identical defining systems force the even three-dimensional coefficient
    vector and the odd one-dimensional one to coincide; this replays that
    identity numerically at sample radii.
    """
    if series.orbital != 0:
        raise InvalidLabel("correspondence check applies to the l = 0 series")
    entry = series.entries[0]
    q = apply_operator_polynomial(
        RadialProfile(orbital=0, coefficients=entry.coefficients), 0
    )
    closed = []
    oracle = []
    for point in points:
        closed.append(float(point * _polyval_even(q, np.asarray(point))))
        oracle.append(d1_pv_apply(entry.coefficients, point))
    worst = max(abs(a - b) for a, b in zip(closed, oracle))
    return CorrespondenceReport(
        points=tuple(float(p) for p in points),
        closed_form=tuple(closed),
        oracle=tuple(oracle),
        max_abs_difference=worst,
        tolerance=tolerance,
    )
