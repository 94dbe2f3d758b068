# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import logging
import os

from tqdm import tqdm


class TqdmLoggingHandler(logging.Handler):
    """Logging handler that writes through tqdm so progress bars stay intact."""

    def __init__(self, level=logging.NOTSET):
        super().__init__(level)

    def emit(self, record):
        try:
            msg = self.format(record)
            tqdm.write(msg)
        except Exception:
            self.handleError(record)


def set_log_level(level):
    """Set the level of the package logger.

    Args:
        level (str or int): a level name such as 'INFO' or a number such as logging.INFO.
    """
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.INFO)
    logger = logging.getLogger(__name__)
    logger.setLevel(level)


def _init_logger():
    logger = logging.getLogger(__name__)
    handler = TqdmLoggingHandler()
    formatter = logging.Formatter(
        fmt="%(asctime)s [EulerLax:%(levelname)s]: %(message)s", datefmt="%Y-%m-%d %H:%M:%S")
    handler.setFormatter(formatter)
    logger.addHandler(handler)
    logger.propagate = False
    set_log_level(os.environ.get("EULERLAX_LOG_LEVEL", "WARNING"))


_init_logger()

from . import testing  # noqa: F401, E402
from .errors import EulerLaxError  # noqa: F401, E402
from .field import Grid2D, Grid3D, ScalarField2D, ScalarField3D  # noqa: F401, E402
from .euler2d import FlowState2D, SteadyStateSpec, integrate  # noqa: F401, E402
from .lax2d import lax_L, lax_A  # noqa: F401, E402
from .darboux import DarbouxCase, darboux_verify  # noqa: F401, E402
from .lax3d import VectorField3D, ShiftVector, lax3d_L, lax3d_A  # noqa: F401, E402
from .report import ResidualReport  # noqa: F401, E402
from . import cache  # noqa: F401, E402
from .suites import ExperimentConfig, SUITES, run_suite, convergence_study  # noqa: F401, E402

__version__ = "0.1.0.dev0"
