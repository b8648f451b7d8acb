"""Shared helpers for the suite."""

import numpy as np
import pytest

from harmconv.cpoly import NumericFailure, roots


@pytest.fixture
def rng():
    return np.random.default_rng(20240814)


def sample_points(closed, rng, count=100, cap=0.9):
    """Random disk points kept clear of a rational function's poles.

    Comparisons of closed-form dilatations against truncated series only
    make sense where the series converges fast and the rational is tame,
    so the sampling radius is min(cap, 0.6 * innermost pole modulus).
    """
    radius = cap
    try:
        poles = roots(closed.den)
    except NumericFailure:
        poles = []
    if len(poles):
        radius = min(cap, 0.6 * min(abs(p) for p in poles))
    rr = radius * np.sqrt(rng.uniform(0.01, 1.0, size=count))
    th = rng.uniform(0.0, 2.0 * np.pi, size=count)
    return rr * np.exp(1j * th)
