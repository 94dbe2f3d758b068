# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""
The 2D Euler Lax pair

    L phi = {omega, phi} = lambda phi,    d_t phi + A phi = 0,    A phi = {psi, phi},

whose compatibility condition is d_t omega + {psi, omega} = 0.
"""
from dataclasses import dataclass
from typing import Tuple, Union

from eulerlax.field import (
    ComplexField,
    Mask2D,
    ScalarField2D,
    apply_real_linear,
    as_complex,
    check_same_grid,
    gradient,
    norms,
    poisson_bracket,
    reflect_xy,
)

Phi = Union[ScalarField2D, ComplexField]


def lax_L(omega: ScalarField2D, phi: Phi) -> Phi:
    check_same_grid(omega, phi)
    return apply_real_linear(lambda part: poisson_bracket(omega, part), phi)


def lax_A(psi: ScalarField2D, phi: Phi) -> Phi:
    check_same_grid(psi, phi)
    return apply_real_linear(lambda part: poisson_bracket(psi, part), phi)


def commutator_residual(omega: ScalarField2D, psi: ScalarField2D, omega_t: ScalarField2D,
                        phi: Phi) -> Phi:
    """
    [(d_t L) + [A, L]] phi - {omega_t + {psi, omega}, phi} for arbitrary fields.

    The operator side is evaluated by applying L and A in sequence; the
    difference vanishes identically by the Jacobi identity.
    """
    check_same_grid(omega, psi, omega_t, phi)
    euler = omega_t + poisson_bracket(psi, omega)

    def residual(part: ScalarField2D) -> ScalarField2D:
        operator_side = (poisson_bracket(omega_t, part) +
                         poisson_bracket(psi, poisson_bracket(omega, part)) -
                         poisson_bracket(omega, poisson_bracket(psi, part)))
        return operator_side - poisson_bracket(euler, part)

    return apply_real_linear(residual, phi)


def compatibility_residual_2d(state, omega_t: ScalarField2D, phi: Phi) -> Phi:
    """commutator_residual for the (omega, psi) pair held by a flow state."""
    return commutator_residual(state.omega, state.psi, omega_t, phi)


def eigen_residual(omega: ScalarField2D, phi: Phi, lam: complex = 0.0) -> Phi:
    """L phi - lambda phi."""
    lam = complex(lam)
    if lam == 0.0:
        return lax_L(omega, phi)
    return as_complex(lax_L(omega, phi)) - as_complex(phi).scale(lam)


@dataclass(frozen=True, eq=False)
class LaxEigenfunction2D:
    """A candidate eigenpair of L; its residual is always measured, never assumed."""
    phi: Phi
    lam: complex = 0.0

    def __post_init__(self):
        object.__setattr__(self, "lam", complex(self.lam))

    def residual(self, omega: ScalarField2D) -> Phi:
        return eigen_residual(omega, self.phi, self.lam)

    def residual_norms(self, omega: ScalarField2D) -> Tuple[float, float]:
        return norms(self.residual(omega))


def time_equation_residual(p_t: ScalarField2D, p: ScalarField2D, omega: ScalarField2D,
                           psi: ScalarField2D, eps_rel: float = 1e-3) -> Tuple[ScalarField2D, Mask2D]:
    """
    p_t - (p_x / omega_x) {omega, psi} on the mask |omega_x| > eps_rel max|omega_x|.

    For p in the kernel of L this is the time equation d_t p + {psi, p} = 0
    rewritten without y-derivatives of p.
    """
    check_same_grid(p_t, p, omega, psi)
    p_x, _ = gradient(p)
    omega_x, _ = gradient(omega)
    mask = Mask2D.from_denominators(eps_rel, omega_x)
    rate = poisson_bracket(omega, psi)
    quotient = mask.divide(p_x.values * rate.values, omega_x.values)
    return p_t.like(mask.fill(p_t.values - quotient)), mask


def symmetry_residual(omega: ScalarField2D, psi: ScalarField2D,
                      phi: ScalarField2D) -> Tuple[ScalarField2D, ScalarField2D]:
    """
    Residuals of the reflection symmetry (t, x, y) -> (-t, y, x) of the Lax pair.

    Returns (L_{omega o s}(phi o s) + (L_omega phi) o s,
             A_{psi o s}(phi o s) + (A_psi phi) o s); the sign flip of A is
    absorbed by the reversal of t.
    """
    l_part = lax_L(reflect_xy(omega), reflect_xy(phi)) + reflect_xy(lax_L(omega, phi))
    a_part = lax_A(reflect_xy(psi), reflect_xy(phi)) + reflect_xy(lax_A(psi, phi))
    return l_part, a_part
