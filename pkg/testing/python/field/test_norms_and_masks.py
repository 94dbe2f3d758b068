# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import numpy as np
import pytest
from numpy.testing import assert_allclose

import eulerlax
from eulerlax.errors import EmptyMaskError, GridMismatchError
from eulerlax.field import (
    ComplexField,
    Grid2D,
    Mask2D,
    ScalarField2D,
    apply_real_linear,
    as_complex,
    ddx,
    norms,
)


def sine(n=64):
    return ScalarField2D.from_function(Grid2D.square(n), lambda X, Y: np.sin(X))


def test_norms_of_zero_and_sine():
    grid = Grid2D.square(64)
    assert norms(ScalarField2D.zeros(grid)) == (0.0, 0.0)
    linf, l2 = norms(sine())
    assert_allclose(linf, 1.0, atol=1e-12)
    assert_allclose(l2, 1.0 / np.sqrt(2.0), atol=1e-12)


def test_full_mask_matches_unmasked():
    f = sine()
    assert norms(f, Mask2D.full(f.grid)) == norms(f)


def test_mask_from_denominators():
    f = sine()
    mask = Mask2D.from_denominators(0.5, f)
    # |sin x| > 1/2 on a third of the circle
    assert_allclose(mask.fraction, 2.0 / 3.0, atol=2.0 / 64)
    assert not mask.needs_warning
    linf, _ = norms(f, mask)
    assert_allclose(linf, 1.0, atol=1e-12)
    masked_min = np.min(np.abs(f.values[mask.kept]))
    assert masked_min > 0.5


def test_mask_warning_and_intersection():
    grid = Grid2D.square(32)
    left = Mask2D(grid, np.arange(32)[None, :].repeat(32, axis=0) < 12)
    right = Mask2D(grid, np.arange(32)[None, :].repeat(32, axis=0) >= 6)
    both = left & right
    assert_allclose(both.fraction, 6.0 / 32.0)
    assert both.needs_warning
    assert not Mask2D.full(grid).needs_warning


def test_mask_divide_and_fill():
    grid = Grid2D.square(8)
    kept = np.zeros(grid.shape, dtype=bool)
    kept[0, :4] = True
    mask = Mask2D(grid, kept)
    denominator = np.where(kept, 2.0, 0.0)
    quotient = mask.divide(np.ones(grid.shape), denominator)
    assert_allclose(quotient[kept], 0.5)
    assert np.all(quotient[~kept] == 0.0)
    assert np.all(mask.fill(np.full(grid.shape, 3.0), -1.0)[~kept] == -1.0)


def test_empty_mask_is_an_error():
    f = sine(16)
    empty = Mask2D(f.grid, np.zeros(f.grid.shape, dtype=bool))
    with pytest.raises(EmptyMaskError):
        norms(f, empty)


def test_mask_grid_must_match():
    with pytest.raises(GridMismatchError):
        norms(sine(16), Mask2D.full(Grid2D.square(32)))


def test_complex_fields_use_the_modulus():
    f = sine(32)
    g = ScalarField2D.from_function(f.grid, lambda X, Y: np.cos(X))
    z = ComplexField(f, g)
    linf, l2 = norms(z)
    assert_allclose(linf, 1.0, atol=1e-12)
    assert_allclose(l2, 1.0, atol=1e-12)
    rotated = z.scale(1j)
    assert_allclose(rotated.real.values, -g.values)
    assert_allclose(rotated.imag.values, f.values)


def test_real_linear_operators_act_componentwise():
    f = sine(32)
    z = apply_real_linear(ddx, ComplexField(f, 2.0 * f))
    assert_allclose(z.imag.values, 2.0 * z.real.values, atol=1e-13)
    assert as_complex(f).imag.max_abs() == 0.0


def test_fields_are_immutable():
    f = sine(16)
    with pytest.raises(ValueError):
        f.values[0, 0] = 1.0


def test_non_finite_samples_are_rejected():
    values = np.zeros((16, 16))
    values[3, 3] = np.nan
    with pytest.raises(ValueError):
        ScalarField2D(Grid2D.square(16), values)


if __name__ == "__main__":
    eulerlax.testing.main()
