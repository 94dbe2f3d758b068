# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
from .grid import Grid2D, Grid3D  # noqa: F401
from .scalar import (
    ScalarField2D,  # noqa: F401
    ScalarField3D,  # noqa: F401
    ComplexField,  # noqa: F401
    Mask2D,  # noqa: F401
    SpectralCoeffs2D,  # noqa: F401
    apply_real_linear,  # noqa: F401
    as_complex,  # noqa: F401
    check_same_grid,  # noqa: F401
)
from .spectral import (
    ddx,  # noqa: F401
    ddy,  # noqa: F401
    ddz,  # noqa: F401
    derivative,  # noqa: F401
    gradient,  # noqa: F401
    laplacian,  # noqa: F401
    solve_poisson,  # noqa: F401
    dealias,  # noqa: F401
    dealias_mask,  # noqa: F401
    to_spectral,  # noqa: F401
    to_physical,  # noqa: F401
    reflect_xy,  # noqa: F401
)
from .bracket import (
    poisson_bracket,  # noqa: F401
    jacobi_residual,  # noqa: F401
    leibniz_residual,  # noqa: F401
    antisymmetry_residual,  # noqa: F401
    bilinearity_residual,  # noqa: F401
    reflection_residual,  # noqa: F401
)
from .norms import norms, linf, l2  # noqa: F401
from .random import random_bandlimited, random_bandlimited_3d  # noqa: F401
from .analytic import analytic_triple, periodic_rational  # noqa: F401
from .finite_difference import fd4_derivative, fd4_bracket  # noqa: F401
from .io import write_snapshot, read_snapshot, encode_snapshot, decode_snapshot  # noqa: F401
