# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
from .vector import ShiftVector, VectorField3D  # noqa: F401
from .operators import (
    advective,  # noqa: F401
    curl,  # noqa: F401
    d_shift,  # noqa: F401
    divergence,  # noqa: F401
    lax3d_A,  # noqa: F401
    lax3d_L,  # noqa: F401
    lie_bracket,  # noqa: F401
)
from .compatibility import (
    Specialization,  # noqa: F401
    commutator_identity_residual,  # noqa: F401
    compatibility_residual_3v,  # noqa: F401
    shifted_bracket,  # noqa: F401
    specialization_check,  # noqa: F401
)
from .beltrami import abc_flow, embed_2d, embed_2d_vertical  # noqa: F401
from .limit import LimitStudy, alpha_limit_study, fit_order  # noqa: F401
