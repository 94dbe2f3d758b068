# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
from typing import Dict, Type

from eulerlax.errors import UnknownSuiteError

from .bracket import BracketCheckSuite, JacobiSuite
from .convergence import ConvergeSuite
from .darboux import DarbouxProofSuite, DarbouxRunSuite
from .euler2d import Euler2DRunSuite
from .lax2d import Lax2DTransportSuite, Lax2DVerifySuite
from .lax3d import Lax3DLimitSuite, Lax3DVerifySuite
from .suite import Suite

SUITES: Dict[str, Type[Suite]] = {
    suite.name: suite for suite in (
        JacobiSuite,
        BracketCheckSuite,
        Euler2DRunSuite,
        Lax2DVerifySuite,
        Lax2DTransportSuite,
        DarbouxRunSuite,
        DarbouxProofSuite,
        Lax3DVerifySuite,
        Lax3DLimitSuite,
        ConvergeSuite,
    )
}


def check_suite_name(name: str) -> str:
    if name not in SUITES:
        raise UnknownSuiteError(name, SUITES)
    return name


def get_suite(name: str) -> Type[Suite]:
    return SUITES[check_suite_name(name)]
