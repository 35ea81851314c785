"""Truncated eigenvalue pencil for the unit-ball square-root Laplacian.

Expanding a trial state ``S_l(u) sqrt(1 - r^2) sum_j delta_{2j} r^{2j}``
(truncated at polynomial degree ``2n``) in the eigenvalue equation gives

* ``n`` interior rows   ``sum_{k>=i} delta_{2k} a^(l)_{k-i,k}
                          = E sum_{k<=i} delta_{2k} c_{2(i-k)}``,
* one boundary row      ``sum_m delta_{2m} sum_{k<=m} a^(l)_{k,m} = 0``

(the operator image must also vanish at r = 1).  The boundary row
eliminates the top coefficient exactly, because the right-hand side has no
``delta_{2n}`` column; what remains is a standard dense eigenproblem for a
unit-lower-triangular mass matrix.  The sieve keeps the real, strictly
positive part of the spectrum in ascending order.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from numpy.typing import NDArray
from scipy.optimize import brentq

from .basis import generating_matrix, taylor_coefficients
from .errors import (
    DegenerateBoundaryRow,
    NoRootsFound,
    NormalizationImpossible,
    TruncationTooSmall,
)

__all__ = [
    "TruncatedPencil",
    "SeriesEntry",
    "SpectralSeries",
    "assemble_pencil",
    "solve_series",
    "boundary_residual",
    "det_scan",
]

# Sieve thresholds.  QR iterations put O(eps)-size imaginary dust on real
# spectra; eigenvalues closer than the duplicate gap indicate numerical
# breakdown rather than physics (the pencil is simple for fixed l).
REALITY_TOLERANCE = 1e-8
DUPLICATE_GAP = 1e-9
BOUNDARY_PIVOT_FLOOR = 1e-12
DET_SCAN_MAX_ORDER = 12


@dataclass(frozen=True)
class TruncatedPencil:
    """Dense (A, B) rows plus the boundary row for one (l, n) truncation.

    ``eigen_rows[i, k] = a^(l)_{k-i,k}`` for ``k >= i`` (upper triangular),
    ``mass_rows[i, k] = c_{2(i-k)}`` for ``k <= i`` (unit lower triangular,
    empty last column), ``boundary_row[m] = sum_{k<=m} a^(l)_{k,m}``.
    """

    orbital: int
    order: int
    eigen_rows: NDArray[np.float64] = field(repr=False)
    mass_rows: NDArray[np.float64] = field(repr=False)
    boundary_row: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        for name in ("eigen_rows", "mass_rows", "boundary_row"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def degree(self) -> int:
        return 2 * self.order


@dataclass(frozen=True)
class SeriesEntry:
    """One sieved eigenpair: 1-based rank k, energy (units hbar*c/R, R = 1),
    coefficients ``delta_{2j}`` scaled to ``delta_0 = 1``, and the replayed
    boundary-row residual."""

    k: int
    energy: float
    coefficients: NDArray[np.float64] = field(repr=False)
    boundary_residual: float = 0.0

    def __post_init__(self) -> None:
        arr = np.asarray(self.coefficients, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "coefficients", arr)


@dataclass(frozen=True)
class SpectralSeries:
    """Ascending real positive eigenvalues of one orbital series."""

    orbital: int
    degree: int
    entries: tuple[SeriesEntry, ...]

    def energies(self) -> list[float]:
        return [entry.energy for entry in self.entries]


def assemble_pencil(l: int, n: int) -> TruncatedPencil:
    """Build the truncated pencil for orbital ``l`` at polynomial degree ``2n``.

    Requires ``n >= 1``: at n = 0 there are no interior rows and nothing to
    solve.  Asserts the boundary row can act as a pivot (its last entry must
    not vanish) rather than assuming it silently.
    """
    if l < 0:
        raise ValueError("orbital number must be non-negative")
    if n < 1:
        raise TruncationTooSmall(f"degree 2n = {2 * n} leaves no interior rows")
    a = generating_matrix(l, n).entries
    c = taylor_coefficients(n).values
    eigen = np.zeros((n, n + 1))
    mass = np.zeros((n, n + 1))
    for i in range(n):
        cols = np.arange(i, n + 1)
        eigen[i, cols] = a[cols - i, cols]
        mass[i, : i + 1] = c[i::-1]
    boundary = np.add.reduce(a, axis=0)  # column sums; zeros below diagonal
    if not np.all(np.isfinite(boundary)):
        raise DegenerateBoundaryRow("boundary row contains non-finite entries")
    if abs(boundary[n]) <= BOUNDARY_PIVOT_FLOOR * np.abs(boundary).max():
        raise DegenerateBoundaryRow(
            f"boundary pivot {boundary[n]:.3e} too small relative to the row"
        )
    return TruncatedPencil(
        orbital=l, order=n, eigen_rows=eigen, mass_rows=mass, boundary_row=boundary
    )


def boundary_residual(pencil: TruncatedPencil, coefficients) -> float:
    """Absolute value of the boundary row applied to a coefficient vector."""
    coefficients = np.asarray(coefficients, dtype=float)
    if coefficients.shape != (pencil.order + 1,):
        raise ValueError(f"expected {pencil.order + 1} coefficients")
    return float(abs(pencil.boundary_row @ coefficients))


def _reduced_pencil(pencil: TruncatedPencil) -> tuple[NDArray, NDArray]:
    # Eliminate the last coefficient column with the boundary row.  Exact:
    # the mass rows have no entries in that column.
    n = pencil.order
    A = pencil.eigen_rows
    r = pencil.boundary_row
    At = A[:, :n] - np.outer(A[:, n], r[:n]) / r[n]
    Bt = pencil.mass_rows[:, :n]
    return At, Bt


def _sieve(pencil: TruncatedPencil):
    """Solve the reduced problem and keep real positive eigenpairs, ascending."""
    At, Bt = _reduced_pencil(pencil)
    M = scipy.linalg.solve_triangular(Bt, At, lower=True, unit_diagonal=True)
    eigvals, eigvecs = scipy.linalg.eig(M)
    real = np.abs(eigvals.imag) <= REALITY_TOLERANCE * (1.0 + np.abs(eigvals.real))
    positive = eigvals.real > 0.0
    keep = np.flatnonzero(real & positive)
    keep = keep[np.argsort(eigvals.real[keep])]
    energies: list[float] = []
    vectors = []
    for idx in keep:
        energy = float(eigvals.real[idx])
        if energies and energy - energies[-1] < DUPLICATE_GAP * (1.0 + energy):
            warnings.warn(
                f"near-duplicate eigenvalue {energy!r} at l={pencil.orbital}, "
                f"2n={pencil.degree}; keeping the first",
                RuntimeWarning,
                stacklevel=3,
            )
            continue
        energies.append(energy)
        vectors.append(eigvecs[:, idx])
    return energies, vectors


def solve_series(l: int, n: int, count: int | None = None) -> SpectralSeries:
    """Return the ``count`` lowest sieved eigenpairs for orbital ``l`` at degree 2n.

    ``count=None`` returns every accepted eigenvalue.  The top coefficient is
    recovered from the boundary row and the vector rescaled to
    ``delta_0 = 1``; each returned pair satisfies the interior rows and the
    boundary row to rounding.
    """
    if count is not None:
        if count < 1:
            raise ValueError("count must be at least 1")
        if count > n:
            raise TruncationTooSmall(
                f"count={count} exceeds the {n} eigenvalues of a degree-{2 * n} truncation"
            )
    pencil = assemble_pencil(l, n)
    energies, vectors = _sieve(pencil)
    if count is None:
        count = len(energies)
    if count > len(energies):
        raise TruncationTooSmall(
            f"only {len(energies)} real positive eigenvalues available at "
            f"l={l}, 2n={2 * n}; requested {count}"
        )
    r = pencil.boundary_row
    entries = []
    for rank in range(count):
        vec = vectors[rank]
        top = -(r[:n] @ vec) / r[n]
        full = np.concatenate([vec, [top]])
        scale = full[0]
        if abs(scale) <= 1e-12 * np.abs(full).max():
            raise NormalizationImpossible(
                f"eigenvector {rank + 1} has vanishing leading coefficient"
            )
        full = (full / scale).real
        full /= full[0]  # exact: x / x == 1.0, so delta_0 is exactly one
        entries.append(
            SeriesEntry(
                k=rank + 1,
                energy=energies[rank],
                coefficients=full,
                boundary_residual=boundary_residual(pencil, full),
            )
        )
    return SpectralSeries(orbital=l, degree=2 * n, entries=tuple(entries))


def det_scan(
    l: int, n: int, e_lo: float, e_hi: float, steps: int = 1000
) -> list[float]:
    """Roots of ``det(A_reduced - E * B_reduced)`` in ``[e_lo, e_hi]``.

    Independent cross-check of :func:`solve_series`: brackets sign changes on
    a uniform grid and bisects each with Brent's method.  Determinants are
    only trustworthy for small systems, hence the ``n <= 12`` limit.
    """
    if n > DET_SCAN_MAX_ORDER:
        raise ValueError(f"det_scan limited to n <= {DET_SCAN_MAX_ORDER}")
    if not e_lo < e_hi:
        raise ValueError("scan interval must satisfy e_lo < e_hi")
    if steps < 1:
        raise ValueError("steps must be positive")
    At, Bt = _reduced_pencil(assemble_pencil(l, n))

    def determinant(energy: float) -> float:
        return float(np.linalg.det(At - energy * Bt))

    grid = np.linspace(e_lo, e_hi, steps + 1)
    values = np.array([determinant(e) for e in grid])
    roots: list[float] = []
    for i in range(steps):
        lo, hi = values[i], values[i + 1]
        if lo == 0.0:
            roots.append(float(grid[i]))
        elif lo * hi < 0.0:
            roots.append(float(brentq(determinant, grid[i], grid[i + 1], xtol=1e-14, rtol=1e-15)))
    if values[-1] == 0.0:
        roots.append(float(grid[-1]))
    if not roots:
        raise NoRootsFound(f"no determinant sign change in [{e_lo}, {e_hi}]")
    return roots
