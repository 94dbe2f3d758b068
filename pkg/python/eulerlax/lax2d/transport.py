# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Transport of candidate eigenfunctions by the time half of the Lax pair."""
import logging
from typing import List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from eulerlax.errors import LengthMismatchError
from eulerlax.euler2d import FlowState2D, step_rk4_coupled
from eulerlax.field import ComplexField, ScalarField2D, check_same_grid, norms
from .operators import Phi, eigen_residual

logger = logging.getLogger(__name__)


def _split(phi: Phi) -> Tuple[ScalarField2D, ...]:
    if isinstance(phi, ComplexField):
        return (phi.real, phi.imag)
    return (phi,)


def _join(parts: Sequence[ScalarField2D], like: Phi) -> Phi:
    if isinstance(like, ComplexField):
        return ComplexField(parts[0], parts[1])
    return parts[0]


def transport_phi(
    trajectory: Sequence[FlowState2D],
    phi0: Phi,
    dt: Optional[float] = None,
    progress: bool = False,
) -> List[Phi]:
    """
    Integrate d_t phi = -{psi(t), phi} along an Euler trajectory.

    Each step re-runs the RK4 stages of the flow from trajectory[n] and
    advances phi with the same stage streamfunctions, so the coupled scheme
    keeps the accuracy of the flow integrator.
    """
    if len(trajectory) == 0:
        raise LengthMismatchError("the trajectory holds no states")
    check_same_grid(trajectory[0].omega, phi0)
    if dt is None:
        dt = getattr(trajectory, "dt", None)
        if dt is None:
            if len(trajectory) < 2:
                raise ValueError("dt is required for a single-state trajectory")
            dt = trajectory[1].t - trajectory[0].t
    for prev, nxt in zip(trajectory[:1], trajectory[1:2]):
        spacing = nxt.t - prev.t
        if abs(spacing - dt) > 1e-9 * max(1.0, abs(dt)):
            raise ValueError(f"dt={dt} does not match the trajectory spacing {spacing}")

    parts = _split(phi0)
    phis = [phi0]
    for n in tqdm(range(len(trajectory) - 1), desc="transport", disable=not progress):
        flow, parts = step_rk4_coupled(trajectory[n], dt, parts)
        drift = float(abs(flow.omega.values - trajectory[n + 1].omega.values).max())
        if drift > 1e-10 * max(1.0, trajectory[n + 1].omega.max_abs()):
            logger.warning(f"trajectory step {n} differs from the RK4 recomputation by {drift:.3e}")
        phis.append(_join(parts, phi0))
    return phis


def isospectrality_monitor(
    trajectory: Sequence[FlowState2D],
    phis: Sequence[Phi],
    lam: Union[complex, float] = 0.0,
) -> List[Tuple[float, float, float]]:
    """Rows (t, linf, l2) of ||L phi - lambda phi|| along the trajectory."""
    if len(phis) != len(trajectory):
        raise LengthMismatchError(
            f"{len(phis)} eigenfunction samples for {len(trajectory)} trajectory states")
    rows = []
    for state, phi in zip(trajectory, phis):
        linf, l2 = norms(eigen_residual(state.omega, phi, lam))
        rows.append((state.t, linf, l2))
    return rows
