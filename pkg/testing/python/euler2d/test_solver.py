# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import numpy as np
import pytest
from numpy.testing import assert_allclose

import eulerlax
from eulerlax.euler2d import (
    FlowState2D,
    SteadyStateSpec,
    cfl_dt,
    diagnostics,
    euler_rhs,
    integrate,
    step_rk4,
    step_rk4_coupled,
    velocity,
)
from eulerlax.field import Grid2D, fd4_bracket, gradient
from eulerlax.testing import eigenstate, random_state


@pytest.mark.parametrize("spec", [
    SteadyStateSpec("laplacian-eigenstate", k=1, l=1),
    SteadyStateSpec("laplacian-eigenstate", k=2, l=3, amplitude=0.3),
    SteadyStateSpec("shear", m=1),
    SteadyStateSpec("shear", m=4, amplitude=2.0),
])
def test_steady_states_have_zero_rhs(spec):
    assert euler_rhs(spec.build(Grid2D.square(64))).max_abs() < 1e-10


def test_rhs_matches_finite_difference_oracle():
    state = random_state(11, n=512, kmax=3)
    oracle = -fd4_bracket(state.psi, state.omega)
    rhs = euler_rhs(state)
    assert (rhs - oracle).max_abs() < 1e-6 * oracle.max_abs()


def test_velocity_transports_vorticity():
    state = random_state(2, n=64, kmax=5)
    u, v = velocity(state)
    omega_x, omega_y = gradient(state.omega)
    advection = u * omega_x + v * omega_y
    assert (advection + euler_rhs(state)).max_abs() < 1e-11


def test_step_keeps_steady_states():
    state = eigenstate(64)
    stepped = step_rk4(state, 1e-2)
    assert (stepped.omega - state.omega).max_abs() < 1e-10
    assert_allclose(stepped.t, 1e-2)


def test_zero_step_is_identity():
    state = random_state(0)
    assert step_rk4(state, 0.0) is state
    with pytest.raises(ValueError):
        step_rk4(state, -1e-3)


def test_rk4_local_error_is_fifth_order():
    state = random_state(5, n=32, kmax=4, amplitude=4.0)
    dts = np.array([1e-2, 5e-3, 2.5e-3])
    errors = []
    for dt in dts:
        full = step_rk4(state, dt)
        half = step_rk4(step_rk4(state, dt / 2.0), dt / 2.0)
        errors.append((full.omega - half.omega).max_abs())
    order = np.polyfit(np.log(dts), np.log(errors), 1)[0]
    assert order >= 4.5


def test_passive_copy_of_vorticity_stays_identical():
    state = random_state(3, n=32, kmax=4)
    new_state, (copy,) = step_rk4_coupled(state, 1e-2, (state.omega,))
    np.testing.assert_array_equal(copy.values, new_state.omega.values)


def test_diagnostics_of_closed_form_states():
    energy, enstrophy, mean = diagnostics(eigenstate(64))
    assert_allclose(energy, 0.25, atol=1e-13)
    assert_allclose(enstrophy, 0.5, atol=1e-13)
    assert abs(mean) < 1e-15
    assert tuple(diagnostics(FlowState2D.zeros(Grid2D.square(16)))) == (0.0, 0.0, 0.0)


def test_conservation_over_a_hundred_steps():
    state = random_state(8, n=64, kmax=8)
    trajectory = integrate(state, 1e-2, 1.0)
    assert len(trajectory) == 101
    rows = np.array(trajectory.diagnostics_rows())
    energy, enstrophy, mean = rows[:, 1], rows[:, 2], rows[:, 3]
    assert np.max(np.abs(energy - energy[0])) / energy[0] < 1e-6
    assert np.max(np.abs(enstrophy - enstrophy[0])) / enstrophy[0] < 1e-6
    assert np.max(np.abs(mean - mean[0])) < 1e-13


def test_integrate_lands_on_tend():
    state = eigenstate(32)
    trajectory = integrate(state, 0.3, 1.0)
    assert len(trajectory) == 5
    assert_allclose(trajectory.dt, 0.25)
    assert_allclose(trajectory[-1].t, 1.0)
    assert_allclose(trajectory.times, [0.0, 0.25, 0.5, 0.75, 1.0])
    assert [i for i, _ in trajectory.snapshots(3)] == [0, 3, 4]
    assert trajectory.snapshots(0) == []


def test_integrate_with_cfl_step():
    state = random_state(1, n=32, kmax=4)
    trajectory = integrate(state, None, 0.2)
    assert trajectory.dt <= cfl_dt(state) + 1e-15
    assert_allclose(trajectory[-1].t, 0.2)
    assert len(integrate(state, None, 0.0)) == 1


if __name__ == "__main__":
    eulerlax.testing.main()
