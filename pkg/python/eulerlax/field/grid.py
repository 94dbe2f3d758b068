# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Uniform periodic grids.

Sample arrays are stored with the x index innermost: shape (ny, nx) in 2D and
(nz, ny, nx) in 3D, so a row-major flatten is (y outer, x inner).
"""
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

TWO_PI = 2.0 * math.pi
MIN_POINTS = 8


def _legalize_count(name: str, value) -> int:
    if isinstance(value, bool) or int(value) != value:
        raise ValueError(f"{name} should be an integer, got {value!r}")
    value = int(value)
    if value < MIN_POINTS or value % 2 != 0:
        raise ValueError(f"{name} should be even and >= {MIN_POINTS}, got {value}")
    return value


def _legalize_period(name: str, value) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"{name} should be a positive finite period, got {value}")
    return value


@dataclass(frozen=True)
class Grid2D:
    nx: int
    ny: int
    lx: float = TWO_PI
    ly: float = TWO_PI

    def __post_init__(self):
        object.__setattr__(self, "nx", _legalize_count("nx", self.nx))
        object.__setattr__(self, "ny", _legalize_count("ny", self.ny))
        object.__setattr__(self, "lx", _legalize_period("lx", self.lx))
        object.__setattr__(self, "ly", _legalize_period("ly", self.ly))

    @classmethod
    def square(cls, n: int, length: float = TWO_PI) -> "Grid2D":
        return cls(nx=n, ny=n, lx=length, ly=length)

    @property
    def ndim(self) -> int:
        return 2

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.ny, self.nx)

    @property
    def lengths(self) -> Tuple[float, float]:
        # ordered like the array axes
        return (self.ly, self.lx)

    @property
    def size(self) -> int:
        return self.nx * self.ny

    @property
    def dx(self) -> float:
        return self.lx / self.nx

    @property
    def dy(self) -> float:
        return self.ly / self.ny

    @property
    def is_square(self) -> bool:
        return self.nx == self.ny and self.lx == self.ly

    def coords(self) -> Tuple[np.ndarray, np.ndarray]:
        """Return (X, Y) sample coordinates, each of shape (ny, nx)."""
        x = np.arange(self.nx) * self.dx
        y = np.arange(self.ny) * self.dy
        return np.meshgrid(x, y, indexing="xy")

    def to_dict(self):
        return {"nx": self.nx, "ny": self.ny, "lx": self.lx, "ly": self.ly}


@dataclass(frozen=True)
class Grid3D:
    nx: int
    ny: int
    nz: int
    lx: float = TWO_PI
    ly: float = TWO_PI
    lz: float = TWO_PI

    def __post_init__(self):
        for name in ("nx", "ny", "nz"):
            object.__setattr__(self, name, _legalize_count(name, getattr(self, name)))
        for name in ("lx", "ly", "lz"):
            object.__setattr__(self, name, _legalize_period(name, getattr(self, name)))

    @classmethod
    def cube(cls, n: int, length: float = TWO_PI) -> "Grid3D":
        return cls(nx=n, ny=n, nz=n, lx=length, ly=length, lz=length)

    @property
    def ndim(self) -> int:
        return 3

    @property
    def shape(self) -> Tuple[int, int, int]:
        return (self.nz, self.ny, self.nx)

    @property
    def lengths(self) -> Tuple[float, float, float]:
        return (self.lz, self.ly, self.lx)

    @property
    def size(self) -> int:
        return self.nx * self.ny * self.nz

    @property
    def dx(self) -> float:
        return self.lx / self.nx

    @property
    def dy(self) -> float:
        return self.ly / self.ny

    @property
    def dz(self) -> float:
        return self.lz / self.nz

    def plane(self) -> Grid2D:
        """The (x, y) cross-section grid."""
        return Grid2D(nx=self.nx, ny=self.ny, lx=self.lx, ly=self.ly)

    def coords(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Return (X, Y, Z) sample coordinates, each of shape (nz, ny, nx)."""
        x = np.arange(self.nx) * self.dx
        y = np.arange(self.ny) * self.dy
        z = np.arange(self.nz) * self.dz
        Z, Y, X = np.meshgrid(z, y, x, indexing="ij")
        return X, Y, Z

    def to_dict(self):
        return {
            "nx": self.nx,
            "ny": self.ny,
            "nz": self.nz,
            "lx": self.lx,
            "ly": self.ly,
            "lz": self.lz,
        }
