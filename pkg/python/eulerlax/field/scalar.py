# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Sampled scalar fields on periodic grids.

Fields are immutable value objects: the sample array is copied on construction
and flagged read-only, and every operation returns a new field.
"""
from dataclasses import dataclass, field
from numbers import Number
from typing import Callable, Union

import numpy as np

from eulerlax.errors import GridMismatchError
from .grid import Grid2D, Grid3D

Grid = Union[Grid2D, Grid3D]


def check_same_grid(*fields) -> Grid:
    grid = fields[0].grid
    for other in fields[1:]:
        if other.grid != grid:
            raise GridMismatchError(grid, other.grid)
    return grid


class PeriodicField:
    """Shared behaviour of real scalar fields in 2D and 3D."""

    grid: Grid
    values: np.ndarray

    def _legalize_values(self, expected_grid_type):
        if not isinstance(self.grid, expected_grid_type):
            raise TypeError(f"{type(self).__name__} needs a {expected_grid_type.__name__}, "
                            f"got {type(self.grid).__name__}")
        values = np.array(self.values, dtype=np.float64)
        if values.ndim == 1 and values.size == self.grid.size:
            values = values.reshape(self.grid.shape)
        if values.shape != self.grid.shape:
            raise ValueError(f"values should have shape {self.grid.shape}, got {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("field samples should all be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    # constructors
    @classmethod
    def zeros(cls, grid):
        return cls(grid, np.zeros(grid.shape))

    @classmethod
    def constant(cls, grid, value: float):
        return cls(grid, np.full(grid.shape, float(value)))

    @classmethod
    def from_function(cls, grid, fn: Callable[..., np.ndarray]):
        """Sample fn(X, Y[, Z]) on the grid."""
        values = fn(*grid.coords())
        return cls(grid, np.broadcast_to(values, grid.shape))

    def like(self, values: np.ndarray):
        return type(self)(self.grid, values)

    def map(self, fn: Callable[[np.ndarray], np.ndarray]):
        """Apply a pointwise function to the samples."""
        return self.like(fn(self.values))

    # reductions
    def mean(self) -> float:
        return float(np.mean(self.values))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def flat(self) -> np.ndarray:
        return self.values.reshape(-1)

    # arithmetic
    def _operand(self, other):
        if isinstance(other, PeriodicField):
            check_same_grid(self, other)
            return other.values
        if isinstance(other, Number):
            return other
        return NotImplemented

    def _binary(self, other, op):
        rhs = self._operand(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self.like(op(self.values, rhs))

    def __add__(self, other):
        return self._binary(other, np.add)

    def __radd__(self, other):
        return self._binary(other, lambda a, b: np.add(b, a))

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: np.subtract(b, a))

    def __mul__(self, other):
        return self._binary(other, np.multiply)

    def __rmul__(self, other):
        return self._binary(other, lambda a, b: np.multiply(b, a))

    def __truediv__(self, other):
        return self._binary(other, np.true_divide)

    def __neg__(self):
        return self.like(-self.values)

    def __pow__(self, exponent: float):
        return self.like(self.values**exponent)

    def __repr__(self):
        return f"{type(self).__name__}(grid={self.grid}, max_abs={self.max_abs():.6g})"


@dataclass(frozen=True, eq=False, repr=False)
class ScalarField2D(PeriodicField):
    grid: Grid2D
    values: np.ndarray

    def __post_init__(self):
        self._legalize_values(Grid2D)


@dataclass(frozen=True, eq=False, repr=False)
class ScalarField3D(PeriodicField):
    grid: Grid3D
    values: np.ndarray

    def __post_init__(self):
        self._legalize_values(Grid3D)


@dataclass(frozen=True, eq=False)
class ComplexField:
    """A complex-valued field stored as two real fields.

    Real-linear operators act componentwise, see `apply_real_linear`.
    """
    real: object
    imag: object

    def __post_init__(self):
        if type(self.real) is not type(self.imag):
            raise TypeError("real and imaginary parts should be fields of the same type")
        check_same_grid(self.real, self.imag)

    @classmethod
    def from_real(cls, real):
        return cls(real, real * 0.0)

    @property
    def grid(self):
        return self.real.grid

    def modulus(self) -> np.ndarray:
        return np.hypot(_samples(self.real), _samples(self.imag))

    def scale(self, factor: complex) -> "ComplexField":
        factor = complex(factor)
        return ComplexField(
            self.real * factor.real - self.imag * factor.imag,
            self.real * factor.imag + self.imag * factor.real,
        )

    def __add__(self, other: "ComplexField") -> "ComplexField":
        return ComplexField(self.real + other.real, self.imag + other.imag)

    def __sub__(self, other: "ComplexField") -> "ComplexField":
        return ComplexField(self.real - other.real, self.imag - other.imag)

    def __neg__(self) -> "ComplexField":
        return ComplexField(-self.real, -self.imag)


def as_complex(phi) -> ComplexField:
    return phi if isinstance(phi, ComplexField) else ComplexField.from_real(phi)


def apply_real_linear(op: Callable, phi):
    """Apply a real-linear operator to a real or complex field."""
    if isinstance(phi, ComplexField):
        return ComplexField(op(phi.real), op(phi.imag))
    return op(phi)


def _samples(f) -> np.ndarray:
    """Pointwise magnitudes of any supported field type."""
    if isinstance(f, ComplexField):
        return f.modulus()
    if hasattr(f, "magnitude"):
        return f.magnitude()
    return np.abs(f.values)


@dataclass(frozen=True, eq=False)
class Mask2D:
    """Samples retained by a relative-threshold test on singular denominators."""
    grid: Grid2D
    kept: np.ndarray
    threshold: float = 0.0

    WARN_FRACTION = 0.5

    def __post_init__(self):
        kept = np.array(self.kept, dtype=bool)
        if kept.shape != self.grid.shape:
            raise ValueError(f"mask should have shape {self.grid.shape}, got {kept.shape}")
        kept.setflags(write=False)
        object.__setattr__(self, "kept", kept)
        object.__setattr__(self, "threshold", float(self.threshold))

    @classmethod
    def full(cls, grid: Grid2D) -> "Mask2D":
        return cls(grid, np.ones(grid.shape, dtype=bool), 0.0)

    @classmethod
    def from_denominators(cls, eps_rel: float, *denominators: ScalarField2D) -> "Mask2D":
        """Keep samples where every |d| exceeds eps_rel * max|d|."""
        grid = check_same_grid(*denominators)
        kept = np.ones(grid.shape, dtype=bool)
        for d in denominators:
            scale = d.max_abs()
            kept &= np.abs(d.values) > eps_rel * scale
        return cls(grid, kept, eps_rel)

    @property
    def fraction(self) -> float:
        return float(np.count_nonzero(self.kept)) / self.kept.size

    @property
    def needs_warning(self) -> bool:
        return self.fraction < self.WARN_FRACTION

    def __and__(self, other: "Mask2D") -> "Mask2D":
        if other.grid != self.grid:
            raise GridMismatchError(self.grid, other.grid)
        return Mask2D(self.grid, self.kept & other.kept, max(self.threshold, other.threshold))

    def fill(self, values: np.ndarray, fill_value: float = 0.0) -> np.ndarray:
        """Return values with excluded samples replaced by fill_value."""
        return np.where(self.kept, values, fill_value)

    def divide(self, numerator: np.ndarray, denominator: np.ndarray) -> np.ndarray:
        """numerator / denominator on kept samples, zero elsewhere."""
        safe = np.where(self.kept, denominator, 1.0)
        return np.where(self.kept, numerator / safe, 0.0)


@dataclass(frozen=True, eq=False)
class SpectralCoeffs2D:
    """Complex Fourier amplitudes, f(x, y) = sum c[l, k] exp(i (k x 2pi/lx + l y 2pi/ly)).

    `coeffs` is laid out like numpy's fft2 output (negative wavenumbers wrap).
    """
    grid: Grid2D
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.complex128)
        if coeffs.shape != self.grid.shape:
            raise ValueError(f"coeffs should have shape {self.grid.shape}, got {coeffs.shape}")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    def coefficient(self, k: int, l: int) -> complex:
        """Amplitude of the (k, l) mode; k along x, l along y."""
        return complex(self.coeffs[l % self.grid.ny, k % self.grid.nx])

    def is_conjugate_symmetric(self, rtol: float = 1e-12) -> bool:
        c = self.coeffs
        mirrored = np.conj(np.roll(np.flip(c, axis=(0, 1)), shift=(1, 1), axis=(0, 1)))
        scale = max(float(np.max(np.abs(c))), 1e-300)
        return bool(np.max(np.abs(c - mirrored)) <= rtol * scale)

    def energy_above(self, kmax: int) -> float:
        """Sum of |c|^2 over modes with |k| > kmax or |l| > kmax."""
        ky = np.fft.fftfreq(self.grid.ny, 1.0 / self.grid.ny)
        kx = np.fft.fftfreq(self.grid.nx, 1.0 / self.grid.nx)
        KY, KX = np.meshgrid(ky, kx, indexing="ij")
        outside = (np.abs(KX) > kmax) | (np.abs(KY) > kmax)
        return float(np.sum(np.abs(self.coeffs[outside])**2))
