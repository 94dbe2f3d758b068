# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Vorticity/streamfunction states of 2D Euler and a library of exact steady states."""
import logging
from dataclasses import dataclass, field
from typing import Dict, Literal, Optional

import numpy as np

from eulerlax.errors import ConfigError, GridMismatchError
from eulerlax.field import (
    Grid2D,
    ScalarField2D,
    laplacian,
    random_bandlimited,
    solve_poisson,
)

logger = logging.getLogger(__name__)

# tolerance of the elliptic relation, relative to max|omega|
ELLIPTIC_RTOL = 1e-10


@dataclass(frozen=True, eq=False)
class FlowState2D:
    """(omega, psi, t) with laplacian(psi) = omega."""
    omega: ScalarField2D
    psi: ScalarField2D
    t: float = 0.0
    # states built by the solver satisfy the relation by construction
    trusted: bool = field(default=False, repr=False)

    def __post_init__(self):
        if self.omega.grid != self.psi.grid:
            raise GridMismatchError(self.omega.grid, self.psi.grid)
        object.__setattr__(self, "t", float(self.t))
        if not self.trusted:
            residual = self.elliptic_residual()
            scale = max(self.omega.max_abs(), 1e-300)
            if residual > ELLIPTIC_RTOL * scale and residual > 1e-14:
                raise ValueError(f"laplacian(psi) differs from omega by {residual:.3e} "
                                 f"(max|omega| = {scale:.3e})")

    @classmethod
    def from_vorticity(cls, omega: ScalarField2D, t: float = 0.0) -> "FlowState2D":
        return cls(omega, solve_poisson(omega), t, trusted=True)

    @classmethod
    def zeros(cls, grid: Grid2D) -> "FlowState2D":
        zero = ScalarField2D.zeros(grid)
        return cls(zero, zero, 0.0, trusted=True)

    @property
    def grid(self) -> Grid2D:
        return self.omega.grid

    def elliptic_residual(self) -> float:
        return float(np.max(np.abs(laplacian(self.psi).values - self.omega.values)))

    def with_time(self, t: float) -> "FlowState2D":
        return FlowState2D(self.omega, self.psi, t, trusted=True)


@dataclass(frozen=True)
class SteadyStateSpec:
    """
    Exact steady states of 2D Euler.

    laplacian-eigenstate: psi = A sin(k x) sin(l y), omega = -(k^2 + l^2) psi
    shear:                psi = A cos(m y),          omega = -m^2 psi
    Both have omega proportional to psi, hence {psi, omega} = 0.
    """
    kind: Literal["laplacian-eigenstate", "shear"] = "laplacian-eigenstate"
    k: int = 1
    l: int = 1
    m: int = 1
    amplitude: float = 1.0

    KINDS = ("laplacian-eigenstate", "shear")

    def __post_init__(self):
        kind = {"eigenstate": "laplacian-eigenstate"}.get(self.kind, self.kind)
        if kind not in self.KINDS:
            raise ConfigError(f"unknown steady state kind {self.kind!r}; expected one of {self.KINDS}")
        object.__setattr__(self, "kind", kind)
        for name in ("k", "l", "m"):
            value = getattr(self, name)
            if int(value) != value:
                raise ConfigError(f"{name} should be an integer wavenumber, got {value}")
            object.__setattr__(self, name, int(value))
        object.__setattr__(self, "amplitude", float(self.amplitude))

    @property
    def eigenvalue(self) -> float:
        """The constant mu with omega = -mu psi."""
        if self.kind == "shear":
            return float(self.m**2)
        return float(self.k**2 + self.l**2)

    def build(self, grid: Grid2D, t: float = 0.0) -> FlowState2D:
        X, Y = grid.coords()
        if self.kind == "shear":
            psi = self.amplitude * np.cos(self.m * Y)
        else:
            psi = self.amplitude * np.sin(self.k * X) * np.sin(self.l * Y)
        omega = -self.eigenvalue * psi
        return FlowState2D(ScalarField2D(grid, omega), ScalarField2D(grid, psi), t)


def _parse_params(text: str) -> Dict[str, str]:
    params = {}
    if not text:
        return params
    for item in text.split(","):
        if "=" not in item:
            raise ConfigError(f"expected key=value in state parameters, got {item!r}")
        key, value = item.split("=", 1)
        params[key.strip()] = value.strip()
    return params


def parse_state(text: str, grid: Grid2D, t: float = 0.0) -> FlowState2D:
    """
    Build an initial state from a short description.

    Accepted forms:
        eigenstate:k=1,l=1,A=1
        shear:m=1,A=1
        random:seed=7,kmax=6,amp=1
    """
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    params = _parse_params(rest)
    try:
        if kind in ("eigenstate", "laplacian-eigenstate"):
            spec = SteadyStateSpec("laplacian-eigenstate",
                                   k=int(params.pop("k", 1)),
                                   l=int(params.pop("l", 1)),
                                   amplitude=float(params.pop("A", 1.0)))
            state = spec.build(grid, t)
        elif kind == "shear":
            spec = SteadyStateSpec("shear",
                                   m=int(params.pop("m", 1)),
                                   amplitude=float(params.pop("A", 1.0)))
            state = spec.build(grid, t)
        elif kind == "random":
            omega = random_bandlimited(int(params.pop("seed", 0)), int(params.pop("kmax", 6)), grid,
                                       float(params.pop("amp", 1.0)))
            state = FlowState2D.from_vorticity(omega, t)
        else:
            raise ConfigError(f"unknown initial state {kind!r}; expected eigenstate, shear or random")
    except ValueError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(f"cannot parse state {text!r}: {e}") from e
    if params:
        raise ConfigError(f"unused parameters {sorted(params)} in state {text!r}")
    return state


def is_unseeded_random(text: str) -> bool:
    kind, _, rest = text.partition(":")
    return kind.strip() == "random" and "seed" not in _parse_params(rest)


def with_default_seed(text: str, seed: int) -> str:
    """Give a `random:` description without an explicit seed the seed `seed`."""
    if not is_unseeded_random(text):
        return text
    _, _, rest = text.partition(":")
    seeded = f"random:seed={seed}" + (f",{rest}" if rest.strip() else "")
    logger.debug(f"state {text!r} runs as {seeded!r}")
    return seeded


def steady_spec_of(text: str) -> Optional[SteadyStateSpec]:
    """The SteadyStateSpec behind a state description, or None for non-steady states."""
    kind, _, rest = text.partition(":")
    params = _parse_params(rest)
    if kind in ("eigenstate", "laplacian-eigenstate"):
        return SteadyStateSpec("laplacian-eigenstate", k=int(params.get("k", 1)),
                               l=int(params.get("l", 1)), amplitude=float(params.get("A", 1.0)))
    if kind == "shear":
        return SteadyStateSpec("shear", m=int(params.get("m", 1)),
                               amplitude=float(params.get("A", 1.0)))
    return None
