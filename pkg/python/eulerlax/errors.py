# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Exception types raised by eulerlax.

Numerical verdicts are never raised; they are reported. The types below cover
invalid inputs and violated preconditions only.
"""
from typing import Iterable, Optional


class EulerLaxError(Exception):
    """Base class for all eulerlax errors."""


class GridMismatchError(EulerLaxError, ValueError):

    def __init__(self, lhs, rhs):
        super().__init__(f"Fields live on different grids: {lhs} vs {rhs}")
        self.lhs = lhs
        self.rhs = rhs


class NonZeroMeanError(EulerLaxError, ValueError):
    """Poisson right-hand side violates the solvability condition on the torus."""

    def __init__(self, mean: float, scale: float):
        super().__init__(
            f"Right-hand side has mean {mean:.3e} (max abs {scale:.3e}); "
            "the periodic Poisson problem requires a zero-mean source")
        self.mean = mean
        self.scale = scale


class BandLimitError(EulerLaxError, ValueError):
    pass


class EmptyMaskError(EulerLaxError, ValueError):
    pass


class DegenerateMaskError(EulerLaxError, ValueError):

    def __init__(self, fraction: float, minimum: float):
        super().__init__(f"Mask keeps {fraction:.3f} of the samples, below the minimum {minimum}; "
                         "the vorticity is too close to x-independent")
        self.fraction = fraction
        self.minimum = minimum


class ConstraintViolatedError(EulerLaxError, ValueError):
    """The potential shift breaks the main constraint set. `constraints` holds the measured residuals."""

    def __init__(self, message: str, constraints=None):
        super().__init__(message)
        self.constraints = constraints


class LengthMismatchError(EulerLaxError, ValueError):
    pass


class InsufficientSamplesError(EulerLaxError, ValueError):
    pass


class SnapshotFormatError(EulerLaxError, ValueError):
    pass


class _SuggestingError(EulerLaxError, ValueError):
    """Error for an unknown name, with a fuzzy suggestion when one is close enough."""

    kind = "name"

    def __init__(self, name: str, choices: Iterable[str], message: Optional[str] = None):
        from eulerlax.utils import best_match
        choices = sorted(choices)
        suggestion = best_match(name, choices)
        if message is None:
            message = f"Unknown {self.kind} '{name}'. Available: {', '.join(choices)}."
        if suggestion is not None:
            message += f" Did you mean '{suggestion}'?"
        super().__init__(message)
        self.name = name
        self.choices = choices
        self.suggestion = suggestion


class UnknownFunctionError(_SuggestingError):
    kind = "function"


class UnknownSuiteError(_SuggestingError):
    kind = "suite"


class ConfigError(EulerLaxError, ValueError):
    pass
