# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Vector fields on the periodic 3D grid and the constant shift vectors."""
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Tuple

import numpy as np

from eulerlax.errors import GridMismatchError
from eulerlax.field import Grid3D, ScalarField3D, check_same_grid, gradient, random_bandlimited_3d


@dataclass(frozen=True)
class ShiftVector:
    """A real constant 3-vector alpha, defining D = alpha . grad."""
    alpha: Tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        alpha = tuple(float(a) for a in self.alpha)
        if len(alpha) != 3:
            raise ValueError(f"a shift vector has 3 components, got {len(alpha)}")
        if not all(math.isfinite(a) for a in alpha):
            raise ValueError(f"shift vector should be finite, got {alpha}")
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def parse(cls, text: str) -> "ShiftVector":
        """'1,2,3' -> ShiftVector((1, 2, 3))."""
        return cls(tuple(float(v) for v in text.split(",")))

    @property
    def is_zero(self) -> bool:
        return not any(self.alpha)

    def __add__(self, other: "ShiftVector") -> "ShiftVector":
        return ShiftVector(tuple(a + b for a, b in zip(self.alpha, other.alpha)))

    def __mul__(self, factor: float) -> "ShiftVector":
        return ShiftVector(tuple(factor * a for a in self.alpha))

    __rmul__ = __mul__

    def __iter__(self):
        return iter(self.alpha)

    def to_list(self):
        return list(self.alpha)


@dataclass(frozen=True, eq=False)
class VectorField3D:
    x: ScalarField3D
    y: ScalarField3D
    z: ScalarField3D

    def __post_init__(self):
        check_same_grid(self.x, self.y, self.z)

    @classmethod
    def from_arrays(cls, grid: Grid3D, data: np.ndarray) -> "VectorField3D":
        data = np.asarray(data, dtype=np.float64)
        if data.shape != (3,) + grid.shape:
            raise ValueError(f"expected array of shape {(3,) + grid.shape}, got {data.shape}")
        return cls(*(ScalarField3D(grid, data[i]) for i in range(3)))

    @classmethod
    def from_components(cls, components: Iterable[ScalarField3D]) -> "VectorField3D":
        return cls(*components)

    @classmethod
    def zeros(cls, grid: Grid3D) -> "VectorField3D":
        return cls(*(ScalarField3D.zeros(grid) for _ in range(3)))

    @classmethod
    def constant(cls, grid: Grid3D, value) -> "VectorField3D":
        return cls(*(ScalarField3D.constant(grid, v) for v in value))

    @classmethod
    def from_functions(cls, grid: Grid3D, fx: Callable, fy: Callable, fz: Callable) -> "VectorField3D":
        return cls(*(ScalarField3D.from_function(grid, fn) for fn in (fx, fy, fz)))

    @classmethod
    def random(cls, seed: int, kmax: int, grid: Grid3D, amplitude: float = 1.0) -> "VectorField3D":
        """Three independent band-limited components drawn from one seed."""
        seeds = np.random.SeedSequence(seed).generate_state(3)
        return cls(*(random_bandlimited_3d(int(s), kmax, grid, amplitude) for s in seeds))

    @property
    def grid(self) -> Grid3D:
        return self.x.grid

    @property
    def components(self) -> Tuple[ScalarField3D, ScalarField3D, ScalarField3D]:
        return (self.x, self.y, self.z)

    def to_array(self) -> np.ndarray:
        return np.stack([c.values for c in self.components])

    def magnitude(self) -> np.ndarray:
        return np.sqrt(self.x.values**2 + self.y.values**2 + self.z.values**2)

    def max_abs(self) -> float:
        return float(np.max(self.magnitude()))

    def map(self, fn: Callable[[ScalarField3D], ScalarField3D]) -> "VectorField3D":
        return VectorField3D(*(fn(c) for c in self.components))

    def gradient(self) -> Tuple[Tuple[ScalarField3D, ...], ...]:
        """grad[i][j] = d_j of component i."""
        return tuple(gradient(c) for c in self.components)

    def _zip(self, other, op) -> "VectorField3D":
        if isinstance(other, VectorField3D):
            if other.grid != self.grid:
                raise GridMismatchError(self.grid, other.grid)
            return VectorField3D(*(op(a, b) for a, b in zip(self.components, other.components)))
        return VectorField3D(*(op(a, other) for a in self.components))

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._zip(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return self.map(lambda c: -c)

    def __repr__(self):
        return f"VectorField3D(grid={self.grid}, max|v|={self.max_abs():.3e})"
