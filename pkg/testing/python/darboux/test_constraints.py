# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import math

import pytest

import eulerlax
from eulerlax.darboux import (
    b3_b4_residual,
    build_kernel_solution,
    check_constraints,
    cross_term_residual,
    proof_identity_AB,
)
from eulerlax.field import Grid2D, ScalarField2D, random_bandlimited
from eulerlax.testing import eigenstate, random_state


@pytest.fixture(scope="module")
def state():
    return eigenstate(128)


@pytest.mark.parametrize("c", [0.1, 0.25, -0.3])
def test_shift_proportional_to_vorticity_satisfies_every_set(state, c):
    report = check_constraints(state.omega, c * state.omega)
    for value in (report.r_main1, report.r_main2, report.r_alt1, report.r_alt2):
        assert 0.0 <= value < 1e-9
    assert report.verdict_main and report.verdict_alt1 and report.verdict_alt2
    assert report.identity_alt1 < 1e-8
    assert report.identity_alt2 < 1e-8
    assert not report.violates()


def test_independent_shift_is_a_negative_control(state):
    shift = random_bandlimited(3, 4, state.grid)
    report = check_constraints(state.omega, shift)
    assert report.r_alt1 > 1e-2
    assert not report.verdict_alt1
    assert not report.verdict_main
    assert report.violates()


def test_zero_shift_skips_the_second_identity(state):
    report = check_constraints(state.omega, ScalarField2D.zeros(state.grid))
    assert report.verdict_main
    assert report.mask_fraction_alt2 == 0.0
    assert math.isnan(report.identity_alt2)
    assert "identity_alt2" in report.notes
    assert report.to_dict()["verdict_alt1"] is True


def test_proof_identity_on_kernel_elements(state):
    omega = state.omega
    gap = proof_identity_AB(omega, omega, build_kernel_solution(omega, "square"))
    assert gap.value < 1e-6
    assert gap.mask_fraction > 0.9
    bounded = proof_identity_AB(omega, build_kernel_solution(omega, "2+cos"),
                                build_kernel_solution(omega, "cube"))
    assert bounded.value < 1e-6


def test_proof_identity_is_exact_when_p_equals_f(state):
    f = build_kernel_solution(state.omega, "exp4")
    assert proof_identity_AB(state.omega, f, f).value < 1e-12


def test_proof_identity_needs_kernel_elements(state):
    f = random_bandlimited(1, 3, state.grid) + 3.0
    p = random_bandlimited(2, 3, state.grid)
    assert proof_identity_AB(state.omega, f, p).value > 1e-3


@pytest.mark.parametrize("seed", [0, 1])
def test_cross_term_identity_holds_for_any_flow(seed):
    flow = random_state(seed, n=64, kmax=3)
    shift = random_bandlimited(seed + 10, 3, flow.grid)
    assert cross_term_residual(flow.omega, flow.psi, shift).max_abs() < 1e-8


def test_simplified_left_hand_side():
    flow = random_state(0, n=128, kmax=3)
    gap = b3_b4_residual(flow.omega, flow.psi, build_kernel_solution(flow.omega, "2+cos"))
    assert gap.relative < 1e-6
    assert gap.mask_fraction > 0.5


if __name__ == "__main__":
    eulerlax.testing.main()
