# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
from .state import (  # noqa: F401
    FlowState2D,
    SteadyStateSpec,
    is_unseeded_random,
    parse_state,
    steady_spec_of,
    with_default_seed,
)
from .solver import (
    Diagnostics,  # noqa: F401
    Trajectory,  # noqa: F401
    advection_rhs,  # noqa: F401
    euler_rhs,  # noqa: F401
    step_rk4,  # noqa: F401
    step_rk4_coupled,  # noqa: F401
    diagnostics,  # noqa: F401
    velocity,  # noqa: F401
    max_speed,  # noqa: F401
    cfl_dt,  # noqa: F401
    integrate,  # noqa: F401
)
