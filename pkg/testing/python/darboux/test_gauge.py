# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import numpy as np
import pytest

import eulerlax
from eulerlax.darboux import (
    build_kernel_solution,
    form_agreement,
    gauge,
    gauge_transform,
    gauge_transform_y,
    get_kernel_function,
    kernel_function_names,
    transform_potentials,
)
from eulerlax.errors import DegenerateMaskError, UnknownFunctionError
from eulerlax.field import ScalarField2D, gradient, norms, poisson_bracket
from eulerlax.lax2d import lax_L
from eulerlax.testing import eigenstate


@pytest.fixture(scope="module")
def state():
    return eigenstate(128)


@pytest.mark.parametrize("name", ["identity", "s", "s^2", "cube", "sin", "cos", "exp4", "2+cos",
                                  "resolvent"])
def test_kernel_library_solves_the_kernel_equation(state, name):
    solution = build_kernel_solution(state.omega, name)
    assert poisson_bracket(state.omega, solution).max_abs() < 1e-8


def test_kernel_library_values(state):
    np.testing.assert_array_equal(build_kernel_solution(state.omega, "s").values, state.omega.values)
    bounded = build_kernel_solution(state.omega, "2+cos")
    assert np.min(np.abs(bounded.values)) >= 1.0
    fn = get_kernel_function("resolvent")
    np.testing.assert_allclose(fn.derivative(np.array([0.0])), [1.0 / 16.0])
    assert "2+cos" in kernel_function_names()


def test_unknown_kernel_function_suggests_a_name():
    with pytest.raises(UnknownFunctionError, match="2\\+cos"):
        get_kernel_function("2+cosine")


def test_gauge_of_f_itself_vanishes(state):
    f = build_kernel_solution(state.omega, "2+cos")
    p_tilde, mask = gauge_transform(f, f, state.omega)
    assert norms(p_tilde, mask)[0] == 0.0


def test_gauge_closed_form(state):
    omega = state.omega
    square = build_kernel_solution(omega, "square")
    p_tilde, mask = gauge_transform(square, omega, omega, 1e-3)
    assert mask.fraction > 0.9
    assert norms(p_tilde - omega, mask)[0] < 1e-8
    # excluded samples are filled with zero
    assert np.all(p_tilde.values[~mask.kept] == 0.0)


def test_gauge_closed_form_bounded_f(state):
    omega = state.omega
    cube = build_kernel_solution(omega, "cube")
    f = build_kernel_solution(omega, "2+cos")
    p_tilde, mask = gauge_transform(cube, f, omega)
    s = omega.values
    expected = 3.0 * s**2 + np.sin(s) / (2.0 + np.cos(s)) * s**3
    assert np.max(np.abs(p_tilde.values - expected)[mask.kept]) < 1e-8


def test_x_and_y_forms_agree(state):
    omega = state.omega
    diff, mask = form_agreement(build_kernel_solution(omega, "square"), omega, omega)
    assert mask.fraction > 0.9
    assert norms(diff, mask)[0] < 1e-8
    y_form, y_mask = gauge_transform_y(build_kernel_solution(omega, "square"), omega, omega)
    assert norms(y_form - omega, y_mask)[0] < 1e-8


def test_gauge_is_linear_in_p(state):
    omega = state.omega
    p = build_kernel_solution(omega, "sin")
    f = build_kernel_solution(omega, "exp4")
    one, mask = gauge_transform(p, f, omega)
    scaled, _ = gauge_transform(2.5 * p, f, omega)
    np.testing.assert_allclose(scaled.values, 2.5 * one.values, rtol=1e-12, atol=1e-10)


def test_derivatives_by_quotient_rule_match_the_closed_form(state):
    omega = state.omega
    gauged = gauge(build_kernel_solution(omega, "square"), omega, omega)
    p_x, p_y = gauged.derivatives()
    o_x, o_y = gradient(omega)
    assert norms(p_x - o_x, gauged.mask)[0] < 1e-7
    assert norms(p_y - o_y, gauged.mask)[0] < 1e-7


def test_soliton_gauge_leaves_the_kernel(state):
    omega = state.omega
    p = build_kernel_solution(omega, "square")
    f = build_kernel_solution(omega, "2+cos")
    plain, mask = gauge_transform(p, f, omega, potential_factor=False)
    assert norms(lax_L(omega, plain), mask)[0] > 1e-3
    gauged = gauge(p, f, omega)
    p_x, p_y = gauged.derivatives()
    o_x, o_y = gradient(omega)
    assert norms(o_x * p_y - o_y * p_x, gauged.mask)[0] < 1e-6


def test_degenerate_masks_are_rejected(state):
    omega = state.omega
    with pytest.raises(DegenerateMaskError):
        gauge(omega * omega, omega, omega, min_fraction=0.999)
    with pytest.raises(ValueError):
        gauge_transform(omega, omega, omega, eps_rel=0.5)


@pytest.mark.parametrize("c", [0.1, 0.25, -0.3])
def test_transform_potentials(state, c):
    omega_t, psi_t = transform_potentials(state.omega, state.psi, c * state.omega)
    assert (omega_t - (1.0 - 2.0 * c) * state.omega).max_abs() < 1e-13
    assert (psi_t - (1.0 - 2.0 * c) * state.psi).max_abs() < 1e-13


def test_trivial_potential_shifts(state):
    grid = state.grid
    omega_t, psi_t = transform_potentials(state.omega, state.psi, ScalarField2D.zeros(grid))
    np.testing.assert_array_equal(omega_t.values, state.omega.values)
    omega_t, psi_t = transform_potentials(state.omega, state.psi, ScalarField2D.constant(grid, 3.0))
    assert (omega_t - state.omega).max_abs() < 1e-12
    assert (psi_t - state.psi - 3.0).max_abs() < 1e-14


def test_gauge_requires_a_shared_grid():
    small = eigenstate(32).omega
    with pytest.raises(ValueError):
        gauge_transform(small, small, eigenstate(64).omega)


if __name__ == "__main__":
    eulerlax.testing.main()
