# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Intermediate identities behind the Darboux consistency argument.

Each routine evaluates two algebraically equal expressions from the argument
and returns how far apart they are numerically.
"""
import math
from typing import NamedTuple

from eulerlax.field import (
    Mask2D,
    ScalarField2D,
    check_same_grid,
    derivative,
    gradient,
    laplacian,
    norms,
    poisson_bracket,
)

from .gauge import DEFAULT_EPS_REL, _check_eps


class IdentityDiscrepancy(NamedTuple):
    """Masked max-abs gaps between equal expressions."""
    first: float
    second: float
    mask_fraction: float

    @property
    def value(self) -> float:
        return max(self.first, self.second)


def _masked(values, mask: Mask2D) -> float:
    if mask.fraction == 0.0:
        return math.nan
    return norms(values, mask)[0]


def proof_identity_AB(
    omega: ScalarField2D,
    f: ScalarField2D,
    p: ScalarField2D,
    eps_rel: float = DEFAULT_EPS_REL,
) -> IdentityDiscrepancy:
    """
    Compare the mixed-derivative form A and the xx form B of the numerator of
    {omega_tilde, p_tilde}, and A with their common closed form

        (1 / omega_x) [omega_x f (f p_xx - p f_xx) - (omega_x f)_x (f p_x - p f_x)].

    Returns (|A - B|, |A - closed|) on the mask of |omega_x|, |omega_y|. The
    equality needs {omega, f} = {omega, p} = 0; otherwise the gaps are O(1).
    """
    _check_eps(eps_rel)
    check_same_grid(omega, f, p)
    o_x, o_y = gradient(omega)
    o_xx, o_xy = gradient(o_x)
    p_x, p_y = gradient(p)
    p_xx, p_xy = gradient(p_x)
    f_x, f_y = gradient(f)
    f_xx, f_xy = gradient(f_x)

    # grouped so that every term cancels exactly when p and f coincide
    n = p_x * f - p * f_x
    m_xx = f * p_xx - p * f_xx
    m_xy = f * p_xy - p * f_xy
    cross = p_x * f_y - p_y * f_x
    slope_f = o_x * f

    mask = Mask2D.from_denominators(eps_rel, o_x, o_y)
    a_num = (m_xy + cross) * slope_f - n * (o_xy * f + o_x * f_y)
    b_num = m_xx * slope_f - n * (o_xx * f + o_x * f_x)
    closed_num = slope_f * m_xx - derivative(slope_f, "x") * n
    a = mask.divide(a_num.values, o_y.values)
    b = mask.divide(b_num.values, o_x.values)
    closed = mask.divide(closed_num.values, o_x.values)
    return IdentityDiscrepancy(
        _masked(omega.like(a - b), mask),
        _masked(omega.like(a - closed), mask),
        mask.fraction,
    )


class RelativeDiscrepancy(NamedTuple):
    absolute: float
    relative: float
    mask_fraction: float


def b3_b4_residual(
    omega: ScalarField2D,
    psi: ScalarField2D,
    f: ScalarField2D,
    eps_rel: float = DEFAULT_EPS_REL,
) -> RelativeDiscrepancy:
    """
    With P = {omega, psi}, compare

        (1 / (omega_x f)) (P / omega_x)_x - (1 / (omega_x^2 f^2)) (f P)_x

    against its simplified form -(omega_x f)_x P / (omega_x^3 f^2). The
    quotient (P / omega_x)_x is expanded as P_x / omega_x - P omega_xx / omega_x^2.
    The relative gap is taken against max|simplified| on the mask.
    """
    _check_eps(eps_rel)
    check_same_grid(omega, psi, f)
    bracket = poisson_bracket(omega, psi)
    o_x = gradient(omega)[0]
    o_xx = derivative(o_x, "x")
    b_x = derivative(bracket, "x")
    fb_x = derivative(f * bracket, "x")
    slope_f_x = derivative(o_x * f, "x")

    mask = Mask2D.from_denominators(eps_rel, o_x, f)
    ox, fv, bv = o_x.values, f.values, bracket.values
    quotient_x = mask.divide(b_x.values * ox - bv * o_xx.values, ox**2)
    lhs = mask.divide(quotient_x, ox * fv) - mask.divide(fb_x.values, (ox * fv)**2)
    rhs = -mask.divide(slope_f_x.values * bv, ox**3 * fv**2)

    absolute = _masked(omega.like(lhs - rhs), mask)
    scale = _masked(omega.like(rhs), mask)
    relative = absolute / scale if scale and scale > 0.0 else absolute
    return RelativeDiscrepancy(absolute, relative, mask.fraction)


def cross_term_residual(omega: ScalarField2D, psi: ScalarField2D, F: ScalarField2D) -> ScalarField2D:
    """
    lap F_x {omega, psi} - omega_x {lap F, psi} - psi_x {omega, lap F}.

    Holds for arbitrary fields; it is the step that turns the (ch2) condition
    into a statement about {omega, F} + {lap F, F}.
    """
    check_same_grid(omega, psi, F)
    lap_F = laplacian(F)
    lap_F_x = gradient(lap_F)[0]
    o_x = gradient(omega)[0]
    psi_x = gradient(psi)[0]
    return (lap_F_x * poisson_bracket(omega, psi) - o_x * poisson_bracket(lap_F, psi) -
            psi_x * poisson_bracket(omega, lap_F))
