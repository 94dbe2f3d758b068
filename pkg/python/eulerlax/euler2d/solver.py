# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Pseudo-spectral RK4 integration of d_t omega + {psi, omega} = 0."""
import logging
import math
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from eulerlax.field import ScalarField2D, gradient, poisson_bracket, solve_poisson
from eulerlax.field import spectral
from .state import FlowState2D

logger = logging.getLogger(__name__)

CFL_SAFETY = 0.5


class Diagnostics(NamedTuple):
    energy: float
    enstrophy: float
    mean_vorticity: float


def advection_rhs(psi: ScalarField2D, q: ScalarField2D) -> ScalarField2D:
    """-{psi, q} with 2/3-rule dealiasing and the mean mode removed."""
    bracket = poisson_bracket(psi, q, dealias=True)
    coeffs = spectral.forward(bracket.values)
    coeffs[(0,) * coeffs.ndim] = 0.0
    return -bracket.like(spectral.inverse(coeffs, bracket.grid.shape))


def euler_rhs(state: FlowState2D) -> ScalarField2D:
    """Time derivative of the vorticity, -{psi, omega}."""
    return advection_rhs(state.psi, state.omega)


def velocity(state: FlowState2D) -> Tuple[ScalarField2D, ScalarField2D]:
    """(u, v) = (-psi_y, psi_x), so that u . grad(omega) = {psi, omega}."""
    psi_x, psi_y = gradient(state.psi)
    return -psi_y, psi_x


def max_speed(state: FlowState2D) -> float:
    u, v = velocity(state)
    return float(np.max(np.hypot(u.values, v.values)))


def cfl_dt(state: FlowState2D, safety: float = CFL_SAFETY) -> float:
    """Largest stable step safety * min(dx, dy) / max|u|; inf for a fluid at rest."""
    speed = max_speed(state)
    if speed == 0.0:
        return math.inf
    return safety * min(state.grid.dx, state.grid.dy) / speed


def step_rk4_coupled(
    state: FlowState2D,
    dt: float,
    passive: Sequence[ScalarField2D] = (),
) -> Tuple[FlowState2D, Tuple[ScalarField2D, ...]]:
    """
    One classical RK4 step of the vorticity together with passive scalars.

    Every passive scalar q obeys d_t q = -{psi, q} with the same stage
    streamfunctions as the vorticity, so a scalar equal to omega stays equal
    to it bit for bit.
    """
    if dt < 0.0:
        raise ValueError(f"dt should be non-negative, got {dt}")
    passive = tuple(passive)
    if dt == 0.0:
        return state, passive
    bound = cfl_dt(state)
    if dt > bound:
        logger.warning(f"dt={dt:.3e} exceeds the CFL bound {bound:.3e} at t={state.t:.4f}")

    fields = (state.omega,) + passive
    psi1 = state.psi
    k1 = [advection_rhs(psi1, q) for q in fields]

    stage2 = [q + (0.5 * dt) * k for q, k in zip(fields, k1)]
    psi2 = solve_poisson(stage2[0])
    k2 = [advection_rhs(psi2, q) for q in stage2]

    stage3 = [q + (0.5 * dt) * k for q, k in zip(fields, k2)]
    psi3 = solve_poisson(stage3[0])
    k3 = [advection_rhs(psi3, q) for q in stage3]

    stage4 = [q + dt * k for q, k in zip(fields, k3)]
    psi4 = solve_poisson(stage4[0])
    k4 = [advection_rhs(psi4, q) for q in stage4]

    updated = [
        q + (dt / 6.0) * (a + 2.0 * b + 2.0 * c + d)
        for q, a, b, c, d in zip(fields, k1, k2, k3, k4)
    ]
    new_state = FlowState2D.from_vorticity(updated[0], state.t + dt)
    return new_state, tuple(updated[1:])


def step_rk4(state: FlowState2D, dt: float) -> FlowState2D:
    return step_rk4_coupled(state, dt)[0]


def diagnostics(state: FlowState2D) -> Diagnostics:
    """Domain-averaged energy 1/2 <|grad psi|^2>, enstrophy 1/2 <omega^2> and mean vorticity."""
    psi_x, psi_y = gradient(state.psi)
    energy = 0.5 * float(np.mean(psi_x.values**2 + psi_y.values**2))
    enstrophy = 0.5 * float(np.mean(state.omega.values**2))
    return Diagnostics(energy, enstrophy, state.omega.mean())


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Every state of a fixed-step run, states[i] at t0 + i * dt."""
    states: Tuple[FlowState2D, ...]
    dt: float

    def __len__(self):
        return len(self.states)

    def __getitem__(self, index):
        return self.states[index]

    def __iter__(self):
        return iter(self.states)

    @property
    def times(self) -> np.ndarray:
        return np.array([s.t for s in self.states])

    def snapshots(self, every: int) -> List[Tuple[int, FlowState2D]]:
        """(step, state) every `every` steps, the final state always included."""
        if every <= 0:
            return []
        last = len(self.states) - 1
        return [(i, s) for i, s in enumerate(self.states) if i % every == 0 or i == last]

    def diagnostics_rows(self) -> List[Tuple[float, float, float, float]]:
        return [(s.t,) + tuple(diagnostics(s)) for s in self.states]


def integrate(
    state: FlowState2D,
    dt: Optional[float],
    tend: float,
    progress: bool = False,
) -> Trajectory:
    """
    Advance `state` to t + tend with fixed RK4 steps.

    dt=None picks the CFL step with safety 0.5, shortened so that an integer
    number of steps lands on tend.
    """
    if tend < 0.0:
        raise ValueError(f"tend should be non-negative, got {tend}")
    if dt is None:
        dt = min(cfl_dt(state), tend) if tend > 0.0 else 0.0
    if tend == 0.0 or dt == 0.0:
        return Trajectory((state,), float(dt or 0.0))
    nsteps = max(1, int(math.ceil(tend / dt - 1e-9)))
    if abs(nsteps * dt - tend) > 1e-9 * max(1.0, tend):
        dt = tend / nsteps
        logger.info(f"adjusted dt to {dt:.6e} so that {nsteps} steps reach t={tend}")
    states = [state]
    for _ in tqdm(range(nsteps), desc="euler2d", disable=not progress):
        states.append(step_rk4(states[-1], dt))
    return Trajectory(tuple(states), dt)
