# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
from .kernel import (
    KernelFunction,  # noqa: F401
    build_kernel_solution,  # noqa: F401
    get_kernel_function,  # noqa: F401
    kernel_function_names,  # noqa: F401
    register_kernel_function,  # noqa: F401
)
from .gauge import (
    GaugedField,  # noqa: F401
    gauge,  # noqa: F401
    gauge_transform,  # noqa: F401
    gauge_transform_y,  # noqa: F401
    form_agreement,  # noqa: F401
)
from .potentials import transform_potentials  # noqa: F401
from .constraints import ConstraintReport, check_constraints  # noqa: F401
from .identities import proof_identity_AB, b3_b4_residual, cross_term_residual  # noqa: F401
from .verify import (
    DarbouxCase,  # noqa: F401
    darboux_verify,  # noqa: F401
    darboux_verify_trajectory,  # noqa: F401
    time_derivative,  # noqa: F401
)
