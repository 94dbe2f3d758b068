# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
from typing import Tuple

from eulerlax.field import ScalarField2D, check_same_grid, laplacian


def transform_potentials(omega: ScalarField2D, psi: ScalarField2D,
                         F: ScalarField2D) -> Tuple[ScalarField2D, ScalarField2D]:
    """(omega + laplacian(F), psi + F); the elliptic relation is preserved."""
    check_same_grid(omega, psi, F)
    return omega + laplacian(F), psi + F
