# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Deterministic band-limited test fields."""
import numpy as np
import scipy.fft as sfft

from eulerlax.errors import BandLimitError
from .grid import Grid2D, Grid3D
from .scalar import ScalarField2D, ScalarField3D


def _integer_wavenumbers(shape):
    axes = [sfft.fftfreq(n, d=1.0 / n) for n in shape]
    return np.meshgrid(*axes, indexing="ij")


def _bandlimited_values(rng: np.random.Generator, kmax: int, shape, amplitude: float) -> np.ndarray:
    ks = _integer_wavenumbers(shape)
    band = np.ones(shape, dtype=bool)
    k_squared = np.zeros(shape)
    for k in ks:
        band &= np.abs(k) <= kmax
        k_squared += k**2
    band[(0,) * len(shape)] = False
    count = int(np.count_nonzero(band))
    coeffs = np.zeros(shape, dtype=np.complex128)
    # smooth spectrum: amplitudes fall off like 1 / (1 + |k|^2)
    weights = 1.0 / (1.0 + k_squared[band])
    coeffs[band] = (rng.standard_normal(count) + 1j * rng.standard_normal(count)) * weights
    # the real part keeps the symmetric band and drops the mean
    values = sfft.ifftn(coeffs).real
    peak = np.max(np.abs(values))
    if peak > 0.0:
        values = values * (amplitude / peak)
    return values


def _check_kmax(kmax: int, shape) -> None:
    if kmax < 0:
        raise BandLimitError(f"kmax should be non-negative, got {kmax}")
    limit = min(shape) / 3.0
    if kmax > limit:
        raise BandLimitError(f"kmax={kmax} exceeds min(n)/3 = {limit:.2f} for shape {shape}")


def random_bandlimited(seed: int, kmax: int, grid: Grid2D, amplitude: float = 1.0) -> ScalarField2D:
    """
    Real zero-mean field with modes only in |k|, |l| <= kmax.

    The result is fully determined by (seed, kmax, grid, amplitude) and is
    scaled so that its maximum absolute value equals `amplitude`.
    """
    _check_kmax(kmax, grid.shape)
    rng = np.random.default_rng(seed)
    return ScalarField2D(grid, _bandlimited_values(rng, kmax, grid.shape, amplitude))


def random_bandlimited_3d(seed: int, kmax: int, grid: Grid3D, amplitude: float = 1.0) -> ScalarField3D:
    _check_kmax(kmax, grid.shape)
    rng = np.random.default_rng(seed)
    return ScalarField3D(grid, _bandlimited_values(rng, kmax, grid.shape, amplitude))
