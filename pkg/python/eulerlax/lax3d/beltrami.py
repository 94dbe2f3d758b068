# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Prescribed 3D fields: ABC Beltrami flows and embeddings of 2D data."""
import logging
from typing import Tuple

import numpy as np

from eulerlax.field import Grid3D, ScalarField2D, ScalarField3D

from .operators import curl
from .vector import VectorField3D

logger = logging.getLogger(__name__)


def abc_flow(A: float, B: float, C: float, grid: Grid3D) -> Tuple[VectorField3D, VectorField3D]:
    """
    u = (A sin z + C cos y, B sin x + A cos z, C sin y + B cos x) and its
    spectral curl. On the 2 pi periodic cube curl u = u, so u is a steady
    solution of 3D Euler with omega parallel to u.
    """
    X, Y, Z = grid.coords()
    u = VectorField3D.from_arrays(grid, np.stack([
        A * np.sin(Z) + C * np.cos(Y),
        B * np.sin(X) + A * np.cos(Z),
        C * np.sin(Y) + B * np.cos(X),
    ]))
    omega = curl(u)
    logger.debug(f"abc flow (A, B, C) = ({A}, {B}, {C}): |curl u - u| = "
                 f"{(omega - u).max_abs():.3e}")
    return u, omega


def embed_2d(f2d: ScalarField2D, nz: int = 8, lz: float = 2.0 * np.pi) -> ScalarField3D:
    """A z-independent 3D copy of a 2D field."""
    grid = Grid3D(nx=f2d.grid.nx, ny=f2d.grid.ny, nz=nz, lx=f2d.grid.lx, ly=f2d.grid.ly, lz=lz)
    values = np.broadcast_to(f2d.values, grid.shape)
    return ScalarField3D(grid, values)


def embed_2d_vertical(f2d: ScalarField2D, nz: int = 8) -> VectorField3D:
    """(0, 0, f(x, y)) on the extruded grid."""
    top = embed_2d(f2d, nz)
    zero = ScalarField3D.zeros(top.grid)
    return VectorField3D(zero, zero, top)
