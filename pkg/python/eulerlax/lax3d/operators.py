# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Lax operators of 3D Euler in vorticity form.

    L phi = (omega . grad) phi - (phi . grad) omega + D1 phi
    A phi = (q . grad) phi - (phi . grad) q + D2 phi

with D = alpha . grad for constant shift vectors alpha. Without shifts and
with q = u these are the classical pair whose compatibility is 3D Euler.
"""
from typing import Optional, Union

from eulerlax.field import ComplexField, apply_real_linear, check_same_grid, gradient

from .vector import ShiftVector, VectorField3D

Phi3 = Union[VectorField3D, ComplexField]


def advective(a: VectorField3D, b: VectorField3D) -> VectorField3D:
    """(a . grad) b."""
    check_same_grid(a, b)
    out = []
    for comp in b.components:
        d_x, d_y, d_z = gradient(comp)
        out.append(a.x * d_x + a.y * d_y + a.z * d_z)
    return VectorField3D(*out)


def lie_bracket(a: VectorField3D, b: VectorField3D) -> VectorField3D:
    """(a . grad) b - (b . grad) a, the kernel shared by both operators."""
    return advective(a, b) - advective(b, a)


def _d_shift_real(alpha: ShiftVector, phi: VectorField3D) -> VectorField3D:
    a1, a2, a3 = alpha
    if alpha.is_zero:
        return VectorField3D.zeros(phi.grid)
    out = []
    for comp in phi.components:
        d_x, d_y, d_z = gradient(comp)
        out.append(a1 * d_x + a2 * d_y + a3 * d_z)
    return VectorField3D(*out)


def d_shift(alpha: ShiftVector, phi: Phi3) -> Phi3:
    """D phi = alpha_1 d_x phi + alpha_2 d_y phi + alpha_3 d_z phi, componentwise."""
    return apply_real_linear(lambda v: _d_shift_real(alpha, v), phi)


def _shifted(kernel: VectorField3D, phi: VectorField3D, alpha: Optional[ShiftVector]) -> VectorField3D:
    out = lie_bracket(kernel, phi)
    if alpha is not None and not alpha.is_zero:
        out = out + _d_shift_real(alpha, phi)
    return out


def lax3d_L(omega: VectorField3D, phi: Phi3, alpha: Optional[ShiftVector] = None) -> Phi3:
    return apply_real_linear(lambda v: _shifted(omega, v, alpha), phi)


def lax3d_A(q: VectorField3D, phi: Phi3, alpha: Optional[ShiftVector] = None) -> Phi3:
    """The time operator; q is the advecting field (the velocity u for Euler)."""
    return apply_real_linear(lambda v: _shifted(q, v, alpha), phi)


def curl(v: VectorField3D) -> VectorField3D:
    # ab is d_b of component a
    (_, xy, xz), (yx, _, yz), (zx, zy, _) = v.gradient()
    return VectorField3D(zy - yz, xz - zx, yx - xy)


def divergence(v: VectorField3D):
    grad = v.gradient()
    return grad[0][0] + grad[1][1] + grad[2][2]
