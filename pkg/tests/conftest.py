"""Shared fixtures; the degree-500 solves are reused across test modules."""

import pytest

from cauchywell import profile_from_series, solve_series


@pytest.fixture(scope="session")
def series500():
    """Degree-500 series for l = 0..3, six eigenvalues each."""
    return {l: solve_series(l, 250, 6) for l in range(4)}


@pytest.fixture(scope="session")
def series_l0_500(series500):
    return series500[0]


@pytest.fixture(scope="session")
def ground_profile_500(series_l0_500):
    return profile_from_series(series_l0_500, 1)
