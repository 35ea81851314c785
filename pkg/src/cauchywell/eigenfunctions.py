"""Normalized eigenfunctions and probability densities on the unit ball.

Every bound state factorizes as ``psi = C * r^l * Y_l^m(theta, phi) * f(r)``
with a purely radial ``f(r) = sqrt(1 - r^2) * sum_j delta_{2j} r^{2j}`` shared
by the ``2l + 1`` members of a degenerate level, and ``psi = 0`` outside the
ball.  Normalization conventions:

* ``l = 0``: psi carries no spherical-harmonic factor and
  ``C = [4 pi * int_0^1 r^2 f^2 dr]^(-1/2)`` (full solid angle in the norm);
* ``l >= 1``: orthonormal ``Y_l^m`` with
  ``C = [int_0^1 r^(2l+2) f^2 dr]^(-1/2)``.

The radial norm integral uses Gauss-Legendre after the substitution
``r = sin t``, which removes the square-root derivative blowup of ``f`` at
the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np
from numpy.typing import NDArray

from .errors import InvalidLabel, NormalizationImpossible
from .solver import SpectralSeries

__all__ = [
    "RadialProfile",
    "WaveFunctionLabel",
    "AnalyticApproximant",
    "evaluate_radial",
    "normalize",
    "profile_from_series",
    "spherical_harmonic",
    "wavefunction",
    "density",
    "DensityGrid",
    "density_grid",
    "analytic_ground_state",
    "SPHERICAL_HARMONIC_MAX_L",
]

SPHERICAL_HARMONIC_MAX_L = 16
RADIAL_QUADRATURE_NODES = 256


@dataclass(frozen=True)
class RadialProfile:
    """Radial factor of one solved level: coefficients ``delta_{2j}``
    (``delta_0 = 1``) and, once computed, the normalization constant."""

    orbital: int
    coefficients: NDArray[np.float64] = field(repr=False)
    normalization: float | None = None

    def __post_init__(self) -> None:
        arr = np.asarray(self.coefficients, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "coefficients", arr)

    @property
    def degree(self) -> int:
        return 2 * (len(self.coefficients) - 1)


@dataclass(frozen=True)
class WaveFunctionLabel:
    """State label (k, l, m); all m with fixed (k, l) share one energy and
    one radial profile."""

    k: int
    l: int
    m: int = 0

    def __post_init__(self) -> None:
        if self.k < 1 or self.l < 0 or abs(self.m) > self.l:
            raise InvalidLabel(f"bad label (k={self.k}, l={self.l}, m={self.m})")


def evaluate_radial(profile: RadialProfile, r) -> np.ndarray | float:
    """Evaluate ``f(r) = sqrt(1 - r^2) * sum_j delta_{2j} r^{2j}``; 0 for r >= 1.

    Horner evaluation in ``r^2``.  Accepts scalars or arrays.
    """
    r_arr = np.asarray(r, dtype=float)
    r2 = r_arr * r_arr
    poly = np.zeros_like(r_arr)
    for coefficient in profile.coefficients[::-1]:
        poly = poly * r2 + coefficient
    out = np.where(r_arr < 1.0, np.sqrt(np.clip(1.0 - r2, 0.0, None)) * poly, 0.0)
    if np.isscalar(r) or out.ndim == 0:
        return float(out)
    return out


def _norm_integral(profile: RadialProfile, nodes: int) -> float:
    # int_0^1 r^(2l+2) f(r)^2 dr with r = sin t; integrand becomes
    # sin^(2l+2) t * cos^3 t * w(sin t)^2, smooth up to the endpoint.
    t, w = np.polynomial.legendre.leggauss(nodes)
    t = 0.25 * np.pi * (t + 1.0)
    w = 0.25 * np.pi * w
    r = np.sin(t)
    f = evaluate_radial(profile, r)
    return float(np.sum(w * np.cos(t) * r ** (2 * profile.orbital + 2) * f * f))


def normalize(profile: RadialProfile, nodes: int = RADIAL_QUADRATURE_NODES) -> float:
    """Normalization constant in the published convention for ``profile``.

    ``l = 0`` includes the 4 pi solid-angle factor (the wavefunction carries
    no angular factor); ``l >= 1`` assumes orthonormal spherical harmonics.
    """
    if not np.all(np.isfinite(profile.coefficients)):
        raise NormalizationImpossible("profile coefficients are not finite")
    integral = _norm_integral(profile, nodes)
    if profile.orbital == 0:
        integral *= 4.0 * np.pi
    if not np.isfinite(integral) or integral <= 0.0:
        raise NormalizationImpossible(f"norm integral {integral!r} unusable")
    return float(integral**-0.5)


def profile_from_series(series: SpectralSeries, k: int = 1) -> RadialProfile:
    """Normalized radial profile of the rank-``k`` entry of a solved series."""
    for entry in series.entries:
        if entry.k == k:
            profile = RadialProfile(orbital=series.orbital, coefficients=entry.coefficients)
            return replace(profile, normalization=normalize(profile))
    raise InvalidLabel(f"series holds no entry with k={k}")


def _legendre_normalized(l: int, m: int, x: np.ndarray) -> np.ndarray:
    """Fully normalized associated Legendre values, Condon-Shortley phase.

    Upward recurrence in degree from the sectoral seed; stable because every
    normalized value is bounded by O(sqrt(l)).
    """
    sin_theta = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    p_mm = np.full_like(x, 1.0 / np.sqrt(4.0 * np.pi))
    for i in range(1, m + 1):
        p_mm = -np.sqrt((2 * i + 1) / (2.0 * i)) * sin_theta * p_mm
    if l == m:
        return p_mm
    p_prev = p_mm
    p_curr = np.sqrt(2 * m + 3.0) * x * p_mm
    for ll in range(m + 2, l + 1):
        a = np.sqrt((4.0 * ll * ll - 1.0) / (ll * ll - m * m))
        b = np.sqrt(((ll - 1.0) ** 2 - m * m) / (4.0 * (ll - 1.0) ** 2 - 1.0))
        p_curr, p_prev = a * (x * p_curr - b * p_prev), p_curr
    return p_curr


def spherical_harmonic(l: int, m: int, theta, phi):
    """Orthonormal ``Y_l^m(theta, phi)`` with Condon-Shortley phase.

    Supported for ``l <= SPHERICAL_HARMONIC_MAX_L``; raises
    :class:`InvalidLabel` for ``|m| > l`` or unsupported ``l``.
    """
    if abs(m) > l:
        raise InvalidLabel(f"|m| = {abs(m)} exceeds l = {l}")
    if l < 0 or l > SPHERICAL_HARMONIC_MAX_L:
        raise InvalidLabel(f"l = {l} outside supported range 0..{SPHERICAL_HARMONIC_MAX_L}")
    theta_arr = np.asarray(theta, dtype=float)
    phi_arr = np.asarray(phi, dtype=float)
    plm = _legendre_normalized(l, abs(m), np.cos(theta_arr))
    harmonic = plm * np.exp(1j * abs(m) * phi_arr)
    if m < 0:
        harmonic = (-1.0) ** abs(m) * np.conj(harmonic)
    if np.isscalar(theta) and np.isscalar(phi):
        return complex(harmonic)
    return harmonic


def _require_normalized(label: WaveFunctionLabel, profile: RadialProfile) -> float:
    if label.l != profile.orbital:
        raise InvalidLabel(
            f"label l={label.l} does not match profile orbital {profile.orbital}"
        )
    if profile.normalization is None:
        raise NormalizationImpossible("profile has no normalization constant")
    return profile.normalization


def wavefunction(label: WaveFunctionLabel, profile: RadialProfile, r, theta, phi):
    """Evaluate ``psi_(k,l,m)`` at (r, theta, phi); identically 0 for r >= 1.

    Arguments broadcast against each other like numpy ufunc operands.
    """
    constant = _require_normalized(label, profile)
    r_arr, theta_arr, phi_arr = np.broadcast_arrays(
        np.asarray(r, dtype=float),
        np.asarray(theta, dtype=float),
        np.asarray(phi, dtype=float),
    )
    radial = constant * evaluate_radial(profile, r_arr)
    if label.l == 0:
        result = np.asarray(radial, dtype=complex)
    else:
        angular = spherical_harmonic(label.l, label.m, theta_arr, phi_arr)
        result = radial * r_arr**label.l * angular
    if np.isscalar(r) and np.isscalar(theta) and np.isscalar(phi):
        return complex(result)
    return result


def density(label: WaveFunctionLabel, profile: RadialProfile, r, theta, phi):
    """Probability density ``|psi|^2``; independent of phi for every label."""
    psi = wavefunction(label, profile, r, theta, phi)
    out = np.abs(np.asarray(psi)) ** 2
    if np.isscalar(r) and np.isscalar(theta) and np.isscalar(phi):
        return float(out)
    return out


@dataclass(frozen=True)
class DensityGrid:
    """Probability density sampled on a uniform polar grid.

    ``values[i, j] = |psi(radii[i], angles[j])|^2``; the boundary column
    r = 1 is zero-filled so the arrays stay rectangular and plot-ready.
    """

    label: WaveFunctionLabel
    radii: NDArray[np.float64] = field(repr=False)
    angles: NDArray[np.float64] = field(repr=False)
    values: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        for name in ("radii", "angles", "values"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


def density_grid(
    label: WaveFunctionLabel, profile: RadialProfile, n_r: int, n_theta: int
) -> DensityGrid:
    """Sample ``|psi|^2`` on ``n_r x n_theta`` uniform (r, theta) nodes
    covering [0, 1] x [0, pi] (phi plays no role in the density)."""
    if n_r < 2 or n_theta < 2:
        raise ValueError("grid needs at least 2 nodes per axis")
    radii = np.linspace(0.0, 1.0, n_r)
    angles = np.linspace(0.0, np.pi, n_theta)
    r_mesh, theta_mesh = np.meshgrid(radii, angles, indexing="ij")
    values = density(label, profile, r_mesh, theta_mesh, np.zeros_like(r_mesh))
    return DensityGrid(label=label, radii=radii, angles=angles, values=values)


@dataclass(frozen=True)
class AnalyticApproximant:
    """Closed-form stand-in for the ground state:
    ``C sin(beta r) sqrt((1 - r^2) cos(beta r)) / r``.

    ``beta`` keeps ``cos(beta r)`` positive on [0, 1]; the limit at r = 0 is
    ``C * beta``.
    """

    beta: float = 1760.0 * np.pi / 4096.0
    normalization: float = 0.796658

    def __call__(self, r):
        r_arr = np.asarray(r, dtype=float)
        if np.any(r_arr < 0.0) or np.any(r_arr >= 1.0 + 1e-12):
            raise ValueError("approximant defined on 0 <= r <= 1")
        # sin(beta r)/r via sinc handles r = 0 exactly
        ratio = self.beta * np.sinc(self.beta * r_arr / np.pi)
        inside = np.clip((1.0 - r_arr * r_arr) * np.cos(self.beta * r_arr), 0.0, None)
        out = self.normalization * ratio * np.sqrt(inside)
        if np.isscalar(r) or out.ndim == 0:
            return float(out)
        return out


def analytic_ground_state(r):
    """Evaluate the default :class:`AnalyticApproximant` at ``r``."""
    return AnalyticApproximant()(r)
