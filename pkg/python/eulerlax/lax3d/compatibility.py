# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Compatibility of the shifted 3D Lax pair.

For L = ad(omega + alpha1) and A = ad(q + alpha2) one has

    [A, L] phi = (B . grad) phi - (phi . grad) B,
    B = (q . grad) omega - (omega . grad) q + D2 omega - D1 q,

for arbitrary fields, so d_t omega + B = 0 is the compatibility condition.
"""
from typing import NamedTuple, Optional

from eulerlax.field import check_same_grid, linf

from .operators import d_shift, lax3d_A, lax3d_L, lie_bracket
from .vector import ShiftVector, VectorField3D

ZERO_SHIFT = ShiftVector()


def shifted_bracket(q: VectorField3D, omega: VectorField3D, a1: ShiftVector = ZERO_SHIFT,
                    a2: ShiftVector = ZERO_SHIFT) -> VectorField3D:
    """B = (q . grad) omega - (omega . grad) q + D2 omega - D1 q."""
    out = lie_bracket(q, omega)
    if not a2.is_zero:
        out = out + d_shift(a2, omega)
    if not a1.is_zero:
        out = out - d_shift(a1, q)
    return out


def commutator_identity_residual(
    q: VectorField3D,
    omega: VectorField3D,
    phi: VectorField3D,
    a1: ShiftVector = ZERO_SHIFT,
    a2: ShiftVector = ZERO_SHIFT,
) -> VectorField3D:
    """
    A(L phi) - L(A phi) computed by applying the operators twice, minus the
    collapsed form (B . grad) phi - (phi . grad) B. Vanishes for any inputs
    whose products stay resolved on the grid (kmax <= n / 6).
    """
    check_same_grid(q, omega, phi)
    direct = lax3d_A(q, lax3d_L(omega, phi, a1), a2) - lax3d_L(omega, lax3d_A(q, phi, a2), a1)
    collapsed = lie_bracket(shifted_bracket(q, omega, a1, a2), phi)
    return direct - collapsed


def compatibility_residual_3v(
    omega_t: Optional[VectorField3D],
    omega: VectorField3D,
    q: VectorField3D,
    a1: ShiftVector = ZERO_SHIFT,
    a2: ShiftVector = ZERO_SHIFT,
) -> VectorField3D:
    """d_t omega + (q . grad) omega - (omega . grad) q + D2 omega - D1 q; omega_t=None means steady."""
    out = shifted_bracket(q, omega, a1, a2)
    if omega_t is not None:
        check_same_grid(omega_t, omega)
        out = omega_t + out
    return out


class Specialization(NamedTuple):
    r1: float
    r2: float


def specialization_check(
    omega: VectorField3D,
    q: VectorField3D,
    a1: ShiftVector = ZERO_SHIFT,
    a2: ShiftVector = ZERO_SHIFT,
    omega_t: Optional[VectorField3D] = None,
) -> Specialization:
    """
    Residuals of the split system
        r1 = |d_t omega + (q . grad) omega - (omega . grad) q|
        r2 = |D1 q - D2 omega|
    as global max-abs norms; together they imply the compatibility equation.
    """
    check_same_grid(omega, q)
    first = lie_bracket(q, omega)
    if omega_t is not None:
        first = omega_t + first
    second = d_shift(a1, q) - d_shift(a2, omega)
    return Specialization(linf(first), linf(second))
