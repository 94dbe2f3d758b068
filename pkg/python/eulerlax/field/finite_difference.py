# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Fourth-order central differences, an oracle independent of the FFT path."""
import numpy as np

from .scalar import PeriodicField

_AXIS = {"x": -1, "y": -2, "z": -3}


def fd4_derivative(f: PeriodicField, axis: str) -> PeriodicField:
    ax = _AXIS[axis]
    h = {"x": f.grid.dx, "y": f.grid.dy, "z": getattr(f.grid, "dz", None)}[axis]
    if h is None:
        raise ValueError(f"a {f.grid.ndim}D field has no '{axis}' direction")
    v = f.values
    d = (-np.roll(v, -2, axis=ax) + 8.0 * np.roll(v, -1, axis=ax) - 8.0 * np.roll(v, 1, axis=ax) +
         np.roll(v, 2, axis=ax)) / (12.0 * h)
    return f.like(d)


def fd4_bracket(a: PeriodicField, b: PeriodicField) -> PeriodicField:
    """{a, b} with finite-difference derivatives."""
    a_x, a_y = fd4_derivative(a, "x"), fd4_derivative(a, "y")
    b_x, b_y = fd4_derivative(b, "x"), fd4_derivative(b, "y")
    return a_x * b_y - a_y * b_x
