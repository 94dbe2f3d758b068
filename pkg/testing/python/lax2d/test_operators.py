# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import numpy as np
import pytest
from numpy.testing import assert_allclose

import eulerlax
from eulerlax.errors import GridMismatchError
from eulerlax.euler2d import FlowState2D, euler_rhs
from eulerlax.field import ComplexField, Grid2D, ScalarField2D, norms, poisson_bracket, random_bandlimited
from eulerlax.lax2d import (
    LaxEigenfunction2D,
    commutator_residual,
    compatibility_residual_2d,
    eigen_residual,
    lax_A,
    lax_L,
    symmetry_residual,
    time_equation_residual,
)
from eulerlax.testing import random_state, random_triple

KERNEL_FUNCTIONS = [
    ("s", lambda s: s),
    ("s^2", lambda s: s**2),
    ("s^3", lambda s: s**3),
    ("sin", np.sin),
    ("exp(s/4)", lambda s: np.exp(s / 4.0)),
]


def field_of(n, fn):
    return ScalarField2D.from_function(Grid2D.square(n), fn)


def test_lax_L_closed_form():
    omega = field_of(64, lambda X, Y: np.sin(X))
    phi = field_of(64, lambda X, Y: np.sin(Y))
    expected = field_of(64, lambda X, Y: np.cos(X) * np.cos(Y))
    assert (lax_L(omega, phi) - expected).max_abs() < 1e-11


def test_lax_A_closed_form():
    psi = field_of(64, lambda X, Y: np.sin(X) * np.sin(Y))
    phi = field_of(64, lambda X, Y: np.cos(X))
    expected = field_of(64, lambda X, Y: np.sin(X)**2 * np.cos(Y))
    assert (lax_A(psi, phi) - expected).max_abs() < 1e-11
    assert lax_A(psi * 0.0, phi).max_abs() == 0.0
    assert lax_A(psi, psi.map(np.sin)).max_abs() < 1e-10


@pytest.mark.parametrize("name,h", KERNEL_FUNCTIONS)
def test_functions_of_vorticity_are_in_the_kernel(name, h):
    omega = random_bandlimited(9, 4, Grid2D.square(64))
    assert lax_L(omega, omega.map(h)).max_abs() < 1e-8


def test_grid_mismatch():
    with pytest.raises(GridMismatchError):
        lax_L(random_bandlimited(0, 2, Grid2D.square(16)), random_bandlimited(0, 2, Grid2D.square(32)))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_commutator_identity_for_arbitrary_fields(seed):
    omega, psi, phi = random_triple(seed, 64, 10)
    omega_t = random_bandlimited(100 + seed, 10, omega.grid)
    assert commutator_residual(omega, psi, omega_t, phi).max_abs() < 1e-8
    assert commutator_residual(omega, psi, omega_t, phi * 0.0).max_abs() == 0.0


def test_commutator_identity_on_euler_dynamics():
    state = random_state(4, n=64, kmax=10)
    phi = random_bandlimited(44, 10, state.grid)
    assert compatibility_residual_2d(state, euler_rhs(state), phi).max_abs() < 1e-8


def test_commutator_identity_for_complex_candidates():
    omega, psi, phi = random_triple(6, 64, 8)
    z = ComplexField(phi, random_bandlimited(66, 8, phi.grid))
    state = FlowState2D.from_vorticity(omega)
    residual = compatibility_residual_2d(state, omega * 0.3, z)
    assert isinstance(residual, ComplexField)
    assert norms(residual)[0] < 1e-8


def test_eigen_residual_with_nonzero_lambda():
    omega = random_bandlimited(2, 6, Grid2D.square(32))
    residual = eigen_residual(omega, omega, 2.0)
    assert_allclose(norms(residual)[0], 2.0 * omega.max_abs(), rtol=1e-10)
    candidate = LaxEigenfunction2D(omega * omega, 0)
    assert candidate.lam == 0j
    assert candidate.residual_norms(omega)[0] < 1e-9


def test_time_equation_for_kernel_elements():
    state = random_state(12, n=64, kmax=5)
    p = state.omega * state.omega
    p_t = -poisson_bracket(state.psi, p)
    residual, mask = time_equation_residual(p_t, p, state.omega, state.psi)
    assert mask.fraction > 0.9
    assert norms(residual, mask)[0] < 1e-9


def test_reflection_symmetry_of_the_pair():
    omega, psi, phi = random_triple(3, 64, 8)
    l_part, a_part = symmetry_residual(omega, psi, phi)
    assert l_part.max_abs() < 1e-11
    assert a_part.max_abs() < 1e-11


if __name__ == "__main__":
    eulerlax.testing.main()
