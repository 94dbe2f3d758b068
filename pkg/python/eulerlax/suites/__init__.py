# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
from .suite import Suite, SuiteConfig  # noqa: F401
from .config import ExperimentConfig  # noqa: F401
from .bracket import (
    BracketCheckConfig,  # noqa: F401
    BracketCheckSuite,  # noqa: F401
    JacobiConfig,  # noqa: F401
    JacobiSuite,  # noqa: F401
)
from .euler2d import Euler2DRunConfig, Euler2DRunSuite  # noqa: F401
from .lax2d import (
    Lax2DTransportConfig,  # noqa: F401
    Lax2DTransportSuite,  # noqa: F401
    Lax2DVerifyConfig,  # noqa: F401
    Lax2DVerifySuite,  # noqa: F401
)
from .darboux import (
    DarbouxProofConfig,  # noqa: F401
    DarbouxProofSuite,  # noqa: F401
    DarbouxRunConfig,  # noqa: F401
    DarbouxRunSuite,  # noqa: F401
)
from .lax3d import (
    Lax3DLimitConfig,  # noqa: F401
    Lax3DLimitSuite,  # noqa: F401
    Lax3DVerifyConfig,  # noqa: F401
    Lax3DVerifySuite,  # noqa: F401
)
from .convergence import ConvergeConfig, ConvergeSuite, convergence_study  # noqa: F401
from .registry import SUITES, check_suite_name, get_suite  # noqa: F401
from .runner import resolve_output, run_suite, seed_applies  # noqa: F401
