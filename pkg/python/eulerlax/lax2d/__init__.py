# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
from .operators import (
    LaxEigenfunction2D,  # noqa: F401
    lax_L,  # noqa: F401
    lax_A,  # noqa: F401
    commutator_residual,  # noqa: F401
    compatibility_residual_2d,  # noqa: F401
    eigen_residual,  # noqa: F401
    time_equation_residual,  # noqa: F401
    symmetry_residual,  # noqa: F401
)
from .transport import transport_phi, isospectrality_monitor  # noqa: F401
