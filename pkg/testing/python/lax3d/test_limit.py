# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import eulerlax
from eulerlax.errors import InsufficientSamplesError
from eulerlax.field import Grid3D
from eulerlax.lax3d import LimitStudy, ShiftVector, abc_flow, alpha_limit_study, fit_order
from eulerlax.utils import read_csv

EPSILONS = [1e-1, 1e-2, 1e-3]


@pytest.fixture(scope="module")
def abc():
    return abc_flow(1.0, 1.0, 1.0, Grid3D.cube(16))


def test_order_is_linear(abc):
    u, omega = abc
    study = alpha_limit_study(u, omega, ShiftVector((1.0, 2.0, 3.0)), ShiftVector((-1.0, 0.0, 2.0)), EPSILONS)
    assert [r[0] for r in study.rows] == EPSILONS
    assert all(r[1] > 0.0 for r in study.rows)
    assert abs(study.order - 1.0) < 0.01


def test_zero_shifts_give_zero_differences(abc):
    u, omega = abc
    study = alpha_limit_study(u, omega, ShiftVector(), ShiftVector(), EPSILONS)
    assert all(r[1] == 0.0 for r in study.rows)
    assert math.isnan(study.order)


def test_difference_is_linear_in_the_shift(abc):
    u, omega = abc
    a1 = ShiftVector((0.5, -1.0, 0.25))
    single = alpha_limit_study(u, omega, a1, ShiftVector(), EPSILONS)
    double = alpha_limit_study(u, omega, 2.0 * a1, ShiftVector(), EPSILONS)
    assert_allclose([r[1] for r in double.rows], [2.0 * r[1] for r in single.rows], rtol=1e-10)


@pytest.mark.parametrize("epsilons,error", [
    ([1e-1, 1e-2], InsufficientSamplesError),
    ([1e-1, 0.0, -1e-3], ValueError),
    ([1e-3, 1e-2, 1e-1], ValueError),
    ([1e-1, 1e-1, 1e-2], ValueError),
])
def test_bad_epsilons(abc, epsilons, error):
    u, omega = abc
    with pytest.raises(error):
        alpha_limit_study(u, omega, ShiftVector((1.0, 0.0, 0.0)), ShiftVector(), epsilons)


def test_fit_order():
    eps = np.array([1e-1, 1e-2, 1e-3])
    assert abs(fit_order(eps, 3.0 * eps**2) - 2.0) < 1e-12
    assert math.isnan(fit_order(eps, [1.0, 0.0, 1.0]))


def test_study_writes_csv(tmp_path, abc):
    u, omega = abc
    study = alpha_limit_study(u, omega, ShiftVector((1.0, 0.0, 0.0)), ShiftVector(), EPSILONS)
    path = study.write(str(tmp_path / "limit.csv"))
    series = read_csv(path)
    assert tuple(series) == LimitStudy.COLUMNS
    assert_allclose(series["eps"], EPSILONS)
    assert_allclose(series["difference"], [r[1] for r in study.rows], rtol=1e-15)


if __name__ == "__main__":
    eulerlax.testing.main()
