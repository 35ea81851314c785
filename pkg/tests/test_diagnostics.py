"""Operator-image polynomials, detuning, and the dimensional cross-checks."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cauchywell import (
    InvalidLabel,
    RadialProfile,
    apply_operator_polynomial,
    asymptotic_gap,
    coefficient_correspondence,
    d1_comparison,
    detuning,
    profile_from_series,
    solve_series,
)
from cauchywell.diagnostics import (
    D1_EVEN_REFERENCE_ASYMPTOTIC,
    D1_EVEN_REFERENCE_VARIATIONAL,
)

# printed reference eigenvalues of the degree-500 radial series
RADIAL_SERIES_500 = (2.754769, 5.892214, 9.033009, 12.174403, 15.316005, 18.457716)


def profile(l, coefficients):
    return RadialProfile(orbital=l, coefficients=np.asarray(coefficients, dtype=float))


class TestOperatorPolynomial:
    def test_bare_square_root(self):
        np.testing.assert_allclose(
            apply_operator_polynomial(profile(0, [1.0]), 0), [2.0], rtol=1e-15
        )

    def test_pure_quadratic_term(self):
        np.testing.assert_allclose(
            apply_operator_polynomial(profile(0, [0.0, 1.0]), 0), [-1.0, 4.0], rtol=1e-15
        )

    def test_orbital_one_seed(self):
        np.testing.assert_allclose(
            apply_operator_polynomial(profile(1, [1.0]), 1), [8.0 / 3.0], rtol=1e-15
        )

    def test_orbital_mismatch(self):
        with pytest.raises(InvalidLabel):
            apply_operator_polynomial(profile(1, [1.0]), 0)

    @given(
        coefficients=st.lists(
            st.floats(-2.0, 2.0, allow_nan=False), min_size=2, max_size=10
        ),
        scale_a=st.floats(-3.0, 3.0, allow_nan=False),
        scale_b=st.floats(-3.0, 3.0, allow_nan=False),
    )
    @settings(max_examples=40, deadline=None)
    def test_linearity(self, coefficients, scale_a, scale_b):
        rng = np.random.default_rng(len(coefficients))
        first = np.asarray(coefficients)
        second = rng.standard_normal(first.size)
        combined = apply_operator_polynomial(
            profile(0, scale_a * first + scale_b * second), 0
        )
        separate = scale_a * apply_operator_polynomial(
            profile(0, first), 0
        ) + scale_b * apply_operator_polynomial(profile(0, second), 0)
        np.testing.assert_allclose(combined, separate, atol=1e-13, rtol=1e-13)


class TestDetuning:
    def test_boundary_concentration(self):
        for degree in (70, 100):
            series = solve_series(0, degree // 2, 1)
            curve = detuning(
                profile_from_series(series, 1), series.entries[0].energy, 2000
            )
            assert curve.argmax_radius > 0.9
            assert np.all(curve.values >= 0.0)
            assert curve.degree == degree

    def test_orbital_one_monotone_decrease(self):
        maxima = []
        for degree in (20, 100, 500):
            series = solve_series(1, degree // 2, 1)
            curve = detuning(
                profile_from_series(series, 1), series.entries[0].energy, 4000
            )
            maxima.append(curve.max_detuning)
        assert maxima[0] > maxima[1] > maxima[2]

    def test_sample_count_validation(self, ground_profile_500, series_l0_500):
        with pytest.raises(ValueError):
            detuning(ground_profile_500, series_l0_500.entries[0].energy, 50)


class TestD1Comparison:
    def test_rows_against_stored_references(self, series_l0_500):
        rows = d1_comparison(series_l0_500)
        assert [row.k for row in rows] == [1, 2, 3, 4, 5, 6]
        assert rows[0].diff_variational < 1e-3
        assert rows[3].diff_variational < 2e-3
        assert rows[5].reference_asymptotic is None
        assert rows[5].diff_asymptotic is None
        for row, variational, asymptotic in zip(
            rows, D1_EVEN_REFERENCE_VARIATIONAL, D1_EVEN_REFERENCE_ASYMPTOTIC
        ):
            assert row.reference_variational == variational
            assert row.reference_asymptotic == asymptotic

    def test_requires_radial_series(self):
        with pytest.raises(InvalidLabel):
            d1_comparison(solve_series(1, 10, 1))


class TestAsymptoticGap:
    def test_matches_reference_arithmetic(self, series_l0_500):
        gaps = dict(asymptotic_gap(series_l0_500))
        for k, energy in enumerate(RADIAL_SERIES_500, start=1):
            expected = abs(energy - (k * np.pi - np.pi / 8.0))
            assert gaps[k] == pytest.approx(expected, abs=1e-5)

    def test_first_and_last_gaps(self, series_l0_500):
        gaps = dict(asymptotic_gap(series_l0_500))
        assert gaps[1] == pytest.approx(5.9e-3, abs=1e-4)
        assert gaps[6] == pytest.approx(8.6e-4, abs=3e-5)

    def test_requires_radial_series(self):
        with pytest.raises(InvalidLabel):
            asymptotic_gap(solve_series(2, 10, 1))


class TestCoefficientCorrespondence:
    def test_degree_500_ground_state(self, series_l0_500):
        report = coefficient_correspondence(series_l0_500)
        assert report.within_tolerance
        assert report.max_abs_difference < 1e-3
        # both sides vanish at the origin (odd integrand)
        assert abs(report.closed_form[0]) < 1e-12
        assert abs(report.oracle[0]) < 1e-12

    def test_small_degree_still_matches(self):
        report = coefficient_correspondence(
            solve_series(0, 5, 1), points=(0.3, 0.7), tolerance=1e-3
        )
        assert report.max_abs_difference < 1e-9

    def test_requires_radial_series(self):
        with pytest.raises(InvalidLabel):
            coefficient_correspondence(solve_series(1, 5, 1))
