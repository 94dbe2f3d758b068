# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import itertools

import numpy as np
import pytest

import eulerlax
from eulerlax.darboux import (
    DarbouxCase,
    build_kernel_solution,
    darboux_verify,
    darboux_verify_trajectory,
    time_derivative,
)
from eulerlax.errors import ConstraintViolatedError, InsufficientSamplesError
from eulerlax.euler2d import integrate
from eulerlax.field import random_bandlimited
from eulerlax.testing import eigenstate


@pytest.fixture(scope="module")
def state():
    return eigenstate(128)


def test_closed_form_case(state):
    case = DarbouxCase.from_kernel(state, "identity", "square", 0.25)
    report = darboux_verify(case)
    assert report.residuals["ch1"].linf < 1e-7
    assert report.residuals["ch2"].linf < 1e-7
    assert report.residuals["ch1"].mask_fraction > 0.9
    assert report.verdict
    assert report.info["constraints"]["verdict_main"]
    assert set(report.residuals) >= {"d1_f", "d1_p", "constraint.main1", "constraint.main2",
                                     "ch1", "ch2", "AB"}


def test_unshifted_case(state):
    report = darboux_verify(DarbouxCase.from_kernel(state, "2+cos", "cube", 0.0))
    assert report.residuals["ch1"].linf < 1e-7
    assert report.verdict


def test_transforming_f_gives_zero(state):
    report = darboux_verify(DarbouxCase.from_kernel(state, "exp4", "exp4", 0.25))
    assert report.residuals["ch1"].linf == 0.0
    assert report.residuals["ch2"].linf == 0.0


@pytest.mark.parametrize("p,f,c", list(itertools.product(
    ["square", "cube", "sin"],
    ["2+cos", "exp4", "resolvent"],
    [0.1, 0.25, -0.3],
)))
def test_darboux_property_sweep(state, p, f, c):
    report = darboux_verify(DarbouxCase.from_kernel(state, f, p, c))
    assert report.verdict, report.failures
    assert report.residuals["ch1"].mask_fraction >= 0.9


def test_alternative_constraints_are_informational(state):
    report = darboux_verify(DarbouxCase.from_kernel(state, "2+cos", "square", 0.25))
    assert not report.residuals["constraint.alt1"].gated
    assert report.residuals["constraint.main2"].gated


def test_constraint_violation_is_an_error(state):
    case = DarbouxCase(state.omega, state.psi, build_kernel_solution(state.omega, "2+cos"),
                       build_kernel_solution(state.omega, "square"),
                       random_bandlimited(0, 4, state.grid))
    with pytest.raises(ConstraintViolatedError):
        darboux_verify(case)


def test_time_derivative_is_exact_for_quartics():
    dt = 0.1
    t = dt * np.arange(7)
    samples = [np.full(3, ti**4 - 2.0 * ti) for ti in t]
    derivative = time_derivative(samples, dt)
    for ti, d in zip(t, derivative):
        np.testing.assert_allclose(d, 4.0 * ti**3 - 2.0, atol=1e-10)
    with pytest.raises(InsufficientSamplesError):
        time_derivative(samples[:4], dt)


def test_steady_trajectory():
    trajectory = integrate(eigenstate(64), 1e-2, 0.04)
    cases = [DarbouxCase.from_kernel(s, "2+cos", "square", 0.25) for s in trajectory]
    report = darboux_verify_trajectory(cases, trajectory.dt)
    assert len(report.info["times"]) == 5
    assert report.residuals["ch1"].linf < 1e-6
    assert report.residuals["ch2"].linf < 1e-6
    assert report.verdict
    with pytest.raises(InsufficientSamplesError):
        darboux_verify_trajectory(cases[:4], trajectory.dt)


if __name__ == "__main__":
    eulerlax.testing.main()
