# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Closed-form periodic fields that are analytic but not band-limited.

Their Fourier coefficients decay geometrically, so spectral residuals built
from them shrink super-algebraically with resolution instead of sitting at the
rounding floor.
"""
import numpy as np

from .grid import Grid2D
from .scalar import ScalarField2D

# 1 / (c - cos t) has Fourier coefficients ~ rho^|k| with rho = c - sqrt(c^2 - 1)
DEFAULT_POLE = 1.45


def periodic_rational(theta: np.ndarray, c: float = DEFAULT_POLE) -> np.ndarray:
    if c <= 1.0:
        raise ValueError(f"c should exceed 1 to keep 1/(c - cos) regular, got {c}")
    return 1.0 / (c - np.cos(theta))


def decay_rate(c: float = DEFAULT_POLE) -> float:
    return c - np.sqrt(c * c - 1.0)


def analytic_triple(grid: Grid2D, c: float = DEFAULT_POLE):
    """Three independent analytic periodic fields for bracket-identity studies."""
    X, Y = grid.coords()
    a = periodic_rational(X, c) * np.sin(Y)
    b = periodic_rational(Y + 0.5, c) * np.cos(X)
    d = periodic_rational(X + Y + 1.0, c) + 0.5 * np.sin(X - Y)
    return ScalarField2D(grid, a), ScalarField2D(grid, b), ScalarField2D(grid, d)
