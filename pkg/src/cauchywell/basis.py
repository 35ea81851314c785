"""Radial basis data for the square-root Laplacian in the unit ball.

Two ingredients are exact and purely combinatorial:

* the even Taylor coefficients ``c_{2j}`` of ``sqrt(1 - r^2)``, and
* the triangular "generating" arrays ``a^(l)_{k,m}`` that express the action
  of ``(-Delta)^(1/2)`` on basis functions ``S_l(u) |u|^(2m) sqrt(1 - |u|^2)``
  (``S_l`` an axis-aligned solid harmonic) as an even polynomial of the same
  degree:

      a^(l)_{k,m} = 2^(l+1) * [prod_{s=1..l+1} (d + s)]
                            / [prod_{s=1..l}   (2d + 2s + 1)] * c_{2k},

  with ``d = m - k >= 0``.  The rational prefactor depends on ``m - k`` only,
  so each array is Toeplitz along its diagonals.

Float entries are assembled from the stable ratio recurrence for ``c_{2j}``;
exact ``fractions.Fraction`` variants back the cross-validation tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from numpy.typing import NDArray

__all__ = [
    "TaylorCoefficients",
    "GeneratingMatrix",
    "taylor_coefficients",
    "taylor_coefficients_exact",
    "generating_matrix",
    "generating_matrix_exact",
]

# Exact computation keeps full Fraction precision; cap the size so the
# rational arithmetic stays cheap.
EXACT_ORDER_LIMIT = 32


@dataclass(frozen=True)
class TaylorCoefficients:
    """Coefficients ``c_{2j}``, ``j = 0..order``, of ``sqrt(1 - r^2)``.

    ``values[0] = 1`` and every later coefficient is negative; partial sums
    decrease monotonically towards 0 (the function vanishes at r = 1).
    """

    order: int
    values: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return self.order + 1


@dataclass(frozen=True)
class GeneratingMatrix:
    """Operator-action array ``a^(l)_{k,m}`` for one orbital number.

    ``entries[k, m]`` is defined for ``m >= k`` only; the storage below the
    diagonal is zero-filled.  Every entry is ``c_{2k}`` times a positive
    rational factor, so it is positive exactly when ``k = 0``.
    """

    orbital: int
    order: int
    entries: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.entries, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    def entry(self, k: int, m: int) -> float:
        """Return ``a^(l)_{k,m}``; only ``0 <= k <= m <= order`` is defined."""
        if not 0 <= k <= m <= self.order:
            raise ValueError(f"entry ({k}, {m}) undefined for order {self.order}")
        return float(self.entries[k, m])


def taylor_coefficients(n: int) -> TaylorCoefficients:
    """Return ``c_{2j}`` for ``j = 0..n`` via the ratio recurrence.

    ``c_0 = 1`` and ``c_{2(j+1)} = c_{2j} (2j - 1) / (2j + 2)``.  The
    recurrence is used instead of the factorial closed form
    ``(2j)! / ((1 - 2j) (j!)^2 4^j)`` because the factorials overflow
    binary64 near j = 85 while the ratio never leaves [0, 1].  It is run in
    rational arithmetic and rounded once per coefficient, so every float
    value is correctly rounded (the pure-float recurrence drifts past 1e-15
    relative by j ~ 300).
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    values = np.fromiter(
        (float(value) for value in taylor_coefficients_exact(n)),
        dtype=float,
        count=n + 1,
    )
    return TaylorCoefficients(order=n, values=values)


def taylor_coefficients_exact(n: int) -> list[Fraction]:
    """Exact rational ``c_{2j}``, ``j = 0..n`` (same recurrence, Fraction arithmetic)."""
    if n < 0:
        raise ValueError("order must be non-negative")
    values = [Fraction(1)]
    for j in range(n):
        values.append(values[j] * Fraction(2 * j - 1, 2 * j + 2))
    return values


def _diagonal_prefactors(l: int, n: int) -> NDArray[np.float64]:
    # prefactor 2^(l+1) prod(d+s) / prod(2d+2s+1) as a function of d = m - k
    d = np.arange(n + 1, dtype=float)
    pref = np.full(n + 1, 2.0 ** (l + 1))
    for s in range(1, l + 2):
        pref *= d + s
    for s in range(1, l + 1):
        pref /= 2.0 * d + 2 * s + 1
    return pref


def generating_matrix(l: int, n: int) -> GeneratingMatrix:
    """Return the operator-action array for orbital number ``l`` up to power ``n``.

    All factors in the rational prefactor are O(m) and positive, so a plain
    product loop is exact to rounding; the signed ``c_{2k}`` factor is
    applied last.
    """
    if l < 0:
        raise ValueError("orbital number must be non-negative")
    if n < 0:
        raise ValueError("order must be non-negative")
    c = taylor_coefficients(n).values
    pref = _diagonal_prefactors(l, n)
    entries = np.zeros((n + 1, n + 1))
    kk, mm = np.triu_indices(n + 1)
    entries[kk, mm] = pref[mm - kk] * c[kk]
    return GeneratingMatrix(orbital=l, order=n, entries=entries)


def generating_matrix_exact(l: int, n: int) -> list[list[Fraction]]:
    """Exact rational entries ``a^(l)_{k,m}`` as a list of rows over k.

    Row ``k`` holds ``[a_{k,k}, a_{k,k+1}, ..., a_{k,n}]``.  Bit-exact oracle
    for the float path; limited to ``n <= EXACT_ORDER_LIMIT``.
    """
    if l < 0 or n < 0:
        raise ValueError("orbital number and order must be non-negative")
    if n > EXACT_ORDER_LIMIT:
        raise ValueError(f"exact entries supported only for n <= {EXACT_ORDER_LIMIT}")
    c = taylor_coefficients_exact(n)
    rows = []
    for k in range(n + 1):
        row = []
        for m in range(k, n + 1):
            d = m - k
            num = Fraction(2) ** (l + 1)
            for s in range(1, l + 2):
                num *= d + s
            den = Fraction(1)
            for s in range(1, l + 1):
                den *= 2 * d + 2 * s + 1
            row.append(num / den * c[k])
        rows.append(row)
    return rows
