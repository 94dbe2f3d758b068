# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import numpy as np
import pytest

import eulerlax
from eulerlax.errors import LengthMismatchError
from eulerlax.euler2d import FlowState2D, integrate
from eulerlax.field import ComplexField, Grid2D, random_bandlimited
from eulerlax.lax2d import isospectrality_monitor, transport_phi
from eulerlax.testing import eigenstate, random_state


def test_steady_flow_keeps_invariant_functions():
    trajectory = integrate(eigenstate(64), 1e-2, 0.2)
    phi0 = trajectory[0].omega.map(lambda s: s**3)
    phis = transport_phi(trajectory, phi0)
    assert len(phis) == len(trajectory)
    for phi in phis:
        assert (phi - phi0).max_abs() < 1e-9
    rows = isospectrality_monitor(trajectory, phis)
    assert max(r[1] for r in rows) < 1e-8


def test_fluid_at_rest_leaves_phi_untouched():
    trajectory = integrate(FlowState2D.zeros(Grid2D.square(16)), 0.1, 0.3)
    phi0 = random_bandlimited(1, 3, Grid2D.square(16))
    for phi in transport_phi(trajectory, phi0):
        np.testing.assert_array_equal(phi.values, phi0.values)


def test_vorticity_is_transported_with_itself():
    trajectory = integrate(random_state(7, n=64, kmax=6), 5e-3, 0.5)
    phis = transport_phi(trajectory, trajectory[0].omega)
    assert max((phi - s.omega).max_abs() for phi, s in zip(phis, trajectory)) < 1e-5
    rows = isospectrality_monitor(trajectory, phis)
    assert [r[0] for r in rows] == list(trajectory.times)
    assert max(r[1] for r in rows) < 1e-5


def test_complex_candidates_are_transported_componentwise():
    trajectory = integrate(random_state(1, n=32, kmax=4), 1e-2, 0.05)
    omega = trajectory[0].omega
    phis = transport_phi(trajectory, ComplexField(omega, 2.0 * omega))
    last = phis[-1]
    assert isinstance(last, ComplexField)
    assert (last.imag - 2.0 * last.real).max_abs() < 1e-12


def test_monitor_reports_candidates_outside_the_kernel():
    trajectory = integrate(random_state(2, n=32, kmax=4), 1e-2, 0.05)
    phi0 = random_bandlimited(99, 4, trajectory.states[0].grid)
    rows = isospectrality_monitor(trajectory, transport_phi(trajectory, phi0))
    assert rows[0][1] > 1e-2


def test_length_checks():
    trajectory = integrate(eigenstate(16), 0.1, 0.2)
    with pytest.raises(LengthMismatchError):
        isospectrality_monitor(trajectory, [trajectory[0].omega])
    with pytest.raises(ValueError):
        transport_phi(trajectory, trajectory[0].omega, dt=0.3)


if __name__ == "__main__":
    eulerlax.testing.main()
