# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""The Darboux gauge p -> (1 / omega_x) (p_x - (f_x / f) p) and its masked evaluation.

The gauge is singular where omega_x or f vanish. Values and derivatives are
only formed on the mask of samples where every denominator exceeds
eps_rel * max|denominator|; derivatives of the gauged field come from the
quotient rule applied to the smooth numerator and denominator, never from a
spectral derivative of the masked field.
"""
import logging
from dataclasses import dataclass
from typing import Literal, Tuple

from eulerlax.errors import DegenerateMaskError
from eulerlax.field import Mask2D, ScalarField2D, check_same_grid, gradient

logger = logging.getLogger(__name__)

DEFAULT_EPS_REL = 1e-3
MIN_MASK_FRACTION = 0.25


def _check_eps(eps_rel: float) -> None:
    if not 0.0 < eps_rel < 0.1:
        raise ValueError(f"eps_rel should lie in (0, 0.1), got {eps_rel}")


@dataclass(frozen=True, eq=False)
class GaugedField:
    """
    p_tilde = numerator / denominator on `mask`.

    x form:  numerator = p_x f - p f_x, denominator = omega_x f
    y form:  numerator = p_y f - p f_y, denominator = omega_y f
    soliton: numerator = p_x f - p f_x, denominator = f
    """
    numerator: ScalarField2D
    denominator: ScalarField2D
    mask: Mask2D
    form: str = "x"

    @property
    def grid(self):
        return self.numerator.grid

    @property
    def values(self) -> ScalarField2D:
        return self.numerator.like(self.mask.divide(self.numerator.values, self.denominator.values))

    def derivatives(self) -> Tuple[ScalarField2D, ScalarField2D]:
        """(p_tilde_x, p_tilde_y) by the quotient rule, zero off the mask."""
        n, d = self.numerator.values, self.denominator.values
        n_x, n_y = gradient(self.numerator)
        d_x, d_y = gradient(self.denominator)
        d2 = d * d
        px = self.mask.divide(n_x.values * d - n * d_x.values, d2)
        py = self.mask.divide(n_y.values * d - n * d_y.values, d2)
        return self.numerator.like(px), self.numerator.like(py)


def _gauge(p, f, omega, eps_rel, form, potential_factor, min_fraction) -> GaugedField:
    _check_eps(eps_rel)
    check_same_grid(p, f, omega)
    p_x, p_y = gradient(p)
    f_x, f_y = gradient(f)
    if form == "x":
        numerator = p_x * f - p * f_x
        slope = gradient(omega)[0]
    else:
        numerator = p_y * f - p * f_y
        slope = gradient(omega)[1]
    if potential_factor:
        mask = Mask2D.from_denominators(eps_rel, slope, f)
        denominator = slope * f
    else:
        mask = Mask2D.from_denominators(eps_rel, f)
        denominator = f
    if mask.fraction < min_fraction:
        raise DegenerateMaskError(mask.fraction, min_fraction)
    if mask.needs_warning:
        logger.warning(f"gauge mask keeps only {mask.fraction:.3f} of the samples")
    return GaugedField(numerator, denominator, mask, form if potential_factor else "soliton")


def gauge(
    p: ScalarField2D,
    f: ScalarField2D,
    omega: ScalarField2D,
    eps_rel: float = DEFAULT_EPS_REL,
    form: Literal["x", "y"] = "x",
    potential_factor: bool = True,
    min_fraction: float = MIN_MASK_FRACTION,
) -> GaugedField:
    if form not in ("x", "y"):
        raise ValueError(f"form should be 'x' or 'y', got {form!r}")
    return _gauge(p, f, omega, eps_rel, form, potential_factor, min_fraction)


def gauge_transform(
    p: ScalarField2D,
    f: ScalarField2D,
    omega: ScalarField2D,
    eps_rel: float = DEFAULT_EPS_REL,
    potential_factor: bool = True,
) -> Tuple[ScalarField2D, Mask2D]:
    """
    p_tilde = (1 / omega_x) (p_x - (f_x / f) p), zero off the returned mask.

    With potential_factor=False the 1 / omega_x factor is dropped, which gives
    the soliton-type gauge that does not produce Lax eigenfunctions here.
    """
    gauged = gauge(p, f, omega, eps_rel, "x", potential_factor)
    return gauged.values, gauged.mask


def gauge_transform_y(
    p: ScalarField2D,
    f: ScalarField2D,
    omega: ScalarField2D,
    eps_rel: float = DEFAULT_EPS_REL,
) -> Tuple[ScalarField2D, Mask2D]:
    """The y form p_y / omega_y - f_y p / (omega_y f)."""
    gauged = gauge(p, f, omega, eps_rel, "y")
    return gauged.values, gauged.mask


def form_agreement(
    p: ScalarField2D,
    f: ScalarField2D,
    omega: ScalarField2D,
    eps_rel: float = DEFAULT_EPS_REL,
) -> Tuple[ScalarField2D, Mask2D]:
    """Difference of the x and y forms on the intersection of their masks."""
    x_form = gauge(p, f, omega, eps_rel, "x")
    y_form = gauge(p, f, omega, eps_rel, "y")
    mask = x_form.mask & y_form.mask
    diff = mask.fill(x_form.values.values - y_form.values.values)
    return p.like(diff), mask
