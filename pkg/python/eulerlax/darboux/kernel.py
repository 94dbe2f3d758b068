# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Functions of the vorticity, the elements of the kernel of {omega, .}."""
from dataclasses import dataclass
from typing import Callable, Dict, List

import numpy as np

from eulerlax.errors import UnknownFunctionError
from eulerlax.field import ScalarField2D


@dataclass(frozen=True)
class KernelFunction:
    """A smooth h together with its derivative h'."""
    name: str
    value: Callable[[np.ndarray], np.ndarray]
    derivative: Callable[[np.ndarray], np.ndarray]

    def __call__(self, s: np.ndarray) -> np.ndarray:
        return self.value(s)


# pole of the resolvent, kept outside the range of the unit-amplitude states
RESOLVENT_POLE = 4.0

_LIBRARY: Dict[str, KernelFunction] = {}
_ALIASES = {"s": "identity", "s^2": "square", "s2": "square", "s^3": "cube", "s3": "cube"}


def register_kernel_function(name: str, value, derivative) -> KernelFunction:
    fn = KernelFunction(name, value, derivative)
    _LIBRARY[name] = fn
    return fn


register_kernel_function("identity", lambda s: s, np.ones_like)
register_kernel_function("square", lambda s: s**2, lambda s: 2.0 * s)
register_kernel_function("cube", lambda s: s**3, lambda s: 3.0 * s**2)
register_kernel_function("sin", np.sin, np.cos)
register_kernel_function("cos", np.cos, lambda s: -np.sin(s))
register_kernel_function("exp4", lambda s: np.exp(s / 4.0), lambda s: 0.25 * np.exp(s / 4.0))
register_kernel_function("2+cos", lambda s: 2.0 + np.cos(s), lambda s: -np.sin(s))
register_kernel_function("resolvent", lambda s: 1.0 / (RESOLVENT_POLE - s),
                         lambda s: 1.0 / (RESOLVENT_POLE - s)**2)


def kernel_function_names() -> List[str]:
    return sorted(_LIBRARY) + sorted(_ALIASES)


def get_kernel_function(name: str) -> KernelFunction:
    key = _ALIASES.get(name.strip(), name.strip())
    if key not in _LIBRARY:
        raise UnknownFunctionError(name, kernel_function_names())
    return _LIBRARY[key]


def build_kernel_solution(omega: ScalarField2D, name: str) -> ScalarField2D:
    """h(omega) for a named h; every such field satisfies {omega, h(omega)} = 0."""
    return omega.map(get_kernel_function(name))
