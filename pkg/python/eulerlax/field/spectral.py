# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Fourier pseudo-spectral calculus on periodic grids.

All transforms go through scipy.fft. Real fields use the real-to-complex
layout: the x axis (last array axis) holds the non-negative wavenumbers only.
First derivatives drop the Nyquist mode; even-order operators keep it.
"""
import functools
import logging
import os
from typing import Tuple

import numpy as np
import scipy.fft as sfft

from eulerlax.errors import NonZeroMeanError
from .grid import Grid2D
from .scalar import PeriodicField, ScalarField2D, SpectralCoeffs2D

logger = logging.getLogger(__name__)

# number of threads handed to scipy.fft; 1 keeps results bitwise reproducible
FFT_WORKERS = int(os.environ.get("EULERLAX_FFT_WORKERS", "1"))

_AXIS = {"x": -1, "y": -2, "z": -3}

# relative solvability tolerance of the periodic Poisson problem
POISSON_MEAN_RTOL = 1e-10


@functools.lru_cache(maxsize=None)
def wavenumbers(grid) -> Tuple[np.ndarray, ...]:
    """Angular wavenumbers per array axis, reshaped to broadcast against rfftn output."""
    ndim = len(grid.shape)
    out = []
    for axis, (n, length) in enumerate(zip(grid.shape, grid.lengths)):
        if axis == ndim - 1:
            k = 2.0 * np.pi * sfft.rfftfreq(n, d=length / n)
        else:
            k = 2.0 * np.pi * sfft.fftfreq(n, d=length / n)
        shape = [1] * ndim
        shape[axis] = k.size
        out.append(k.reshape(shape))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _derivative_multiplier(grid, axis: int) -> np.ndarray:
    k = wavenumbers(grid)[axis].astype(np.complex128).copy()
    n = grid.shape[axis]
    # the Nyquist mode has no odd derivative on a real grid
    index = [0] * k.ndim
    index[axis] = n // 2
    k[tuple(index)] = 0.0
    return 1j * k


@functools.lru_cache(maxsize=None)
def _k_squared(grid) -> np.ndarray:
    ks = wavenumbers(grid)
    total = np.zeros(1)
    for k in ks:
        total = total + k**2
    return total


@functools.lru_cache(maxsize=None)
def dealias_mask(grid) -> np.ndarray:
    """2/3-rule mask: keep integer wavenumbers |k| <= (n - 1) // 3 on every axis."""
    ndim = len(grid.shape)
    keep = np.ones(1, dtype=bool)
    for axis, n in enumerate(grid.shape):
        if axis == ndim - 1:
            index = sfft.rfftfreq(n, d=1.0 / n)
        else:
            index = sfft.fftfreq(n, d=1.0 / n)
        shape = [1] * ndim
        shape[axis] = index.size
        keep = keep & (np.abs(index) <= (n - 1) // 3).reshape(shape)
    return keep


def forward(values: np.ndarray) -> np.ndarray:
    return sfft.rfftn(values, workers=FFT_WORKERS)


def inverse(coeffs: np.ndarray, shape) -> np.ndarray:
    return sfft.irfftn(coeffs, s=shape, workers=FFT_WORKERS)


def derivative(f: PeriodicField, axis: str) -> PeriodicField:
    """Spectral first derivative along 'x', 'y' or 'z'."""
    ax = len(f.grid.shape) + _AXIS[axis]
    if ax < 0:
        raise ValueError(f"a {f.grid.ndim}D field has no '{axis}' direction")
    coeffs = forward(f.values) * _derivative_multiplier(f.grid, ax)
    return f.like(inverse(coeffs, f.grid.shape))


def ddx(f: PeriodicField) -> PeriodicField:
    return derivative(f, "x")


def ddy(f: PeriodicField) -> PeriodicField:
    return derivative(f, "y")


def ddz(f: PeriodicField) -> PeriodicField:
    return derivative(f, "z")


def gradient(f: PeriodicField) -> Tuple[PeriodicField, ...]:
    """All first derivatives from a single forward transform, ordered (x, y[, z])."""
    coeffs = forward(f.values)
    ndim = len(f.grid.shape)
    out = []
    for axis in ("x", "y", "z")[:ndim]:
        ax = ndim + _AXIS[axis]
        out.append(f.like(inverse(coeffs * _derivative_multiplier(f.grid, ax), f.grid.shape)))
    return tuple(out)


def laplacian(f: PeriodicField) -> PeriodicField:
    coeffs = -_k_squared(f.grid) * forward(f.values)
    return f.like(inverse(coeffs, f.grid.shape))


def solve_poisson(rhs: PeriodicField) -> PeriodicField:
    """Zero-mean solution u of laplacian(u) = rhs."""
    scale = rhs.max_abs()
    mean = rhs.mean()
    if abs(mean) > POISSON_MEAN_RTOL * scale:
        raise NonZeroMeanError(mean, scale)
    if mean != 0.0:
        logger.debug(f"solve_poisson drops the source mean {mean:.3e}")
    k2 = _k_squared(rhs.grid)
    coeffs = forward(rhs.values)
    safe = np.where(k2 == 0.0, 1.0, k2)
    coeffs = np.where(k2 == 0.0, 0.0, -coeffs / safe)
    return rhs.like(inverse(coeffs, rhs.grid.shape))


def dealias(f: PeriodicField) -> PeriodicField:
    """Project onto the modes retained by the 2/3 rule."""
    coeffs = forward(f.values) * dealias_mask(f.grid)
    return f.like(inverse(coeffs, f.grid.shape))


def to_spectral(f: ScalarField2D) -> SpectralCoeffs2D:
    """Fourier amplitudes normalized so that a unit cosine has amplitude 1/2."""
    return SpectralCoeffs2D(f.grid, sfft.fft2(f.values, workers=FFT_WORKERS) / f.grid.size)


def to_physical(c: SpectralCoeffs2D) -> ScalarField2D:
    values = sfft.ifft2(np.asarray(c.coeffs) * c.grid.size, workers=FFT_WORKERS)
    return ScalarField2D(c.grid, values.real)


def reflect_xy(f: ScalarField2D) -> ScalarField2D:
    """The composition f o sigma with sigma(x, y) = (y, x); needs a square grid."""
    grid: Grid2D = f.grid
    if not grid.is_square:
        raise ValueError(f"reflection needs a square grid, got {grid}")
    return f.like(f.values.T)
