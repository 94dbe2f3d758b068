# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""The canonical Poisson bracket on the plane, {a, b} = a_x b_y - a_y b_x."""
from .scalar import ScalarField2D, check_same_grid
from .spectral import (
    _derivative_multiplier,
    dealias_mask,
    forward,
    gradient,
    inverse,
    reflect_xy,
)


def poisson_bracket(a: ScalarField2D, b: ScalarField2D, dealias: bool = False) -> ScalarField2D:
    """
    Evaluate {a, b} with spectral derivatives and pointwise products.

    With dealias=True both inputs are truncated by the 2/3 rule before
    differentiation and the product is projected back onto the retained modes;
    this is the form used inside the time integrator. One-shot residual
    evaluations use the full spectrum.
    """
    grid = check_same_grid(a, b)
    if not isinstance(a, ScalarField2D) or not isinstance(b, ScalarField2D):
        raise TypeError("the Poisson bracket is defined for 2D scalar fields")
    if not dealias:
        a_x, a_y = gradient(a)
        b_x, b_y = gradient(b)
        return a.like(a_x.values * b_y.values - a_y.values * b_x.values)

    keep = dealias_mask(grid)
    mx = _derivative_multiplier(grid, 1)
    my = _derivative_multiplier(grid, 0)
    ca = forward(a.values) * keep
    cb = forward(b.values) * keep
    a_x, a_y = inverse(ca * mx, grid.shape), inverse(ca * my, grid.shape)
    b_x, b_y = inverse(cb * mx, grid.shape), inverse(cb * my, grid.shape)
    product = forward(a_x * b_y - a_y * b_x) * keep
    return a.like(inverse(product, grid.shape))


def jacobi_residual(a: ScalarField2D, b: ScalarField2D, c: ScalarField2D) -> ScalarField2D:
    """{a,{b,c}} + {b,{c,a}} + {c,{a,b}}, zero for an exact bracket."""
    return (poisson_bracket(a, poisson_bracket(b, c)) + poisson_bracket(b, poisson_bracket(c, a)) +
            poisson_bracket(c, poisson_bracket(a, b)))


def leibniz_residual(a: ScalarField2D, b: ScalarField2D, c: ScalarField2D) -> ScalarField2D:
    """{a, bc} - b{a, c} - c{a, b}."""
    return poisson_bracket(a, b * c) - b * poisson_bracket(a, c) - c * poisson_bracket(a, b)


def antisymmetry_residual(a: ScalarField2D, b: ScalarField2D) -> ScalarField2D:
    return poisson_bracket(a, b) + poisson_bracket(b, a)


def bilinearity_residual(a, b, c, alpha: float, beta: float) -> ScalarField2D:
    return (poisson_bracket(a, alpha * b + beta * c) - alpha * poisson_bracket(a, b) -
            beta * poisson_bracket(a, c))


def reflection_residual(a: ScalarField2D, b: ScalarField2D) -> ScalarField2D:
    """{a o s, b o s} + {a, b} o s for the swap s(x, y) = (y, x)."""
    return poisson_bracket(reflect_xy(a), reflect_xy(b)) + reflect_xy(poisson_bracket(a, b))
