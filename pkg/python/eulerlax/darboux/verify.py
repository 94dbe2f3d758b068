# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""End-to-end checks that the Darboux map sends Lax eigenfunctions to eigenfunctions."""
import logging
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from eulerlax.errors import (
    ConstraintViolatedError,
    DegenerateMaskError,
    InsufficientSamplesError,
)
from eulerlax.euler2d import FlowState2D
from eulerlax.field import Mask2D, ScalarField2D, check_same_grid, gradient, poisson_bracket
from eulerlax.report import ResidualReport

from .constraints import DEFAULT_CONSTRAINT_TOL, check_constraints
from .gauge import DEFAULT_EPS_REL, MIN_MASK_FRACTION, GaugedField, gauge
from .identities import proof_identity_AB
from .kernel import build_kernel_solution
from .potentials import transform_potentials

logger = logging.getLogger(__name__)

# bound on {omega, f} and {omega, p} for a valid case
KERNEL_TOL = 1e-8
DEFAULT_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class DarbouxCase:
    """Inputs of one Darboux verification: a flow, the fixed solution f, the
    solution p to transform and the potential shift F."""
    omega: ScalarField2D
    psi: ScalarField2D
    f: ScalarField2D
    p: ScalarField2D
    bigF: ScalarField2D
    t: float = 0.0

    def __post_init__(self):
        check_same_grid(self.omega, self.psi, self.f, self.p, self.bigF)

    @classmethod
    def from_kernel(cls, state: FlowState2D, f: str, p: str, c: float = 0.0) -> "DarbouxCase":
        """f = h_f(omega), p = h_p(omega) from the kernel library and F = c omega."""
        return cls(state.omega, state.psi,
                   build_kernel_solution(state.omega, f),
                   build_kernel_solution(state.omega, p),
                   c * state.omega, state.t)

    @property
    def grid(self):
        return self.omega.grid

    def kernel_residuals(self):
        """({omega, f}, {omega, p}) max-abs residuals."""
        return (poisson_bracket(self.omega, self.f).max_abs(),
                poisson_bracket(self.omega, self.p).max_abs())


def _check_mask(mask: Mask2D, what: str) -> None:
    if mask.fraction < MIN_MASK_FRACTION:
        logger.error(f"{what} mask is degenerate")
        raise DegenerateMaskError(mask.fraction, MIN_MASK_FRACTION)


class _Transformed:
    """p_tilde with the transformed potentials of one case."""

    def __init__(self, case: DarbouxCase, eps_rel: float, constraint_tol: float):
        self.constraints = check_constraints(case.omega, case.bigF, eps_rel, constraint_tol)
        if self.constraints.violates():
            raise ConstraintViolatedError(
                f"potential shift violates {{omega, lap F}} = {{omega + lap F, F}} = 0: "
                f"residuals {self.constraints.r_main1:.3e}, {self.constraints.r_main2:.3e} "
                f"exceed 10 x {constraint_tol:.1e}", self.constraints)
        self.gauged: GaugedField = gauge(case.p, case.f, case.omega, eps_rel)
        self.omega, self.psi = transform_potentials(case.omega, case.psi, case.bigF)
        self.omega_x, self.omega_y = gradient(self.omega)
        self.p_x, self.p_y = self.gauged.derivatives()
        slope_mask = Mask2D.from_denominators(eps_rel, self.omega_x)
        self.mask = self.gauged.mask & slope_mask
        _check_mask(self.mask, "transformed slope")
        self.flow_bracket = poisson_bracket(self.omega, self.psi)

    def ch1(self) -> ScalarField2D:
        return self.omega_x * self.p_y - self.omega_y * self.p_x

    def transport(self) -> ScalarField2D:
        """(p_tilde_x / omega_tilde_x) {omega_tilde, psi_tilde} on the mask."""
        ratio = self.mask.divide(self.p_x.values, self.omega_x.values)
        return self.omega.like(ratio * self.flow_bracket.values)


def _new_report(case: DarbouxCase, eps_rel: float, **params) -> ResidualReport:
    return ResidualReport(suite="darboux", grid=case.grid.to_dict(),
                          parameters=dict(eps_rel=eps_rel, **params))


def darboux_verify(
    case: DarbouxCase,
    eps_rel: float = DEFAULT_EPS_REL,
    tol: float = DEFAULT_TOL,
    constraint_tol: float = DEFAULT_CONSTRAINT_TOL,
) -> ResidualReport:
    """
    Check that the gauged p_tilde solves the Lax pair of the transformed flow:

        (ch1) {omega_tilde, p_tilde} = 0
        (ch2) p_tilde_t = (p_tilde_x / omega_tilde_x) {omega_tilde, psi_tilde}

    The case is taken as steady, so p_tilde_t = 0. Raises
    ConstraintViolatedError when F breaks the main constraint set at 10x the
    constraint tolerance.
    """
    start = time.perf_counter()
    report = _new_report(case, eps_rel, tol=tol, constraint_tol=constraint_tol)
    d1_f, d1_p = case.kernel_residuals()
    report.add("d1_f", d1_f, tol=KERNEL_TOL)
    report.add("d1_p", d1_p, tol=KERNEL_TOL)

    tr = _Transformed(case, eps_rel, constraint_tol)
    cons = tr.constraints
    report.add("constraint.main1", cons.r_main1, tol=constraint_tol)
    report.add("constraint.main2", cons.r_main2, tol=constraint_tol)
    report.add("constraint.alt1", cons.r_alt1)
    report.add("constraint.alt2", cons.r_alt2)
    report.info["constraints"] = cons.to_dict()

    report.add("ch1", tr.ch1(), tol=tol, mask=tr.mask)
    report.add("ch2", -tr.transport(), tol=tol, mask=tr.mask)

    ab = proof_identity_AB(case.omega, case.f, case.p, eps_rel)
    report.add("AB", ab.value, tol=tol)
    report.residuals["AB"].mask_fraction = ab.mask_fraction

    report.info["gauge_mask_fraction"] = tr.gauged.mask.fraction
    report.info["euler_residual"] = tr.flow_bracket.max_abs()
    report.runtime_ms = (time.perf_counter() - start) * 1e3
    logger.info(f"darboux verdict={report.verdict} ch1={report.residuals['ch1'].linf:.3e} "
                f"ch2={report.residuals['ch2'].linf:.3e}")
    return report


def time_derivative(samples: Sequence[np.ndarray], dt: float) -> List[np.ndarray]:
    """
    Fourth-order finite differences in time: central in the interior and
    one-sided at the first and last two samples. Needs at least 5 samples.
    """
    n = len(samples)
    if n < 5:
        raise InsufficientSamplesError(f"need at least 5 snapshots for a 4th-order time derivative, got {n}")
    if dt <= 0.0:
        raise ValueError(f"dt should be positive, got {dt}")
    s = samples
    h = 12.0 * dt
    out = []
    for i in range(n):
        if i == 0:
            d = -25 * s[0] + 48 * s[1] - 36 * s[2] + 16 * s[3] - 3 * s[4]
        elif i == 1:
            d = -3 * s[0] - 10 * s[1] + 18 * s[2] - 6 * s[3] + s[4]
        elif i == n - 2:
            d = 3 * s[n - 1] + 10 * s[n - 2] - 18 * s[n - 3] + 6 * s[n - 4] - s[n - 5]
        elif i == n - 1:
            d = 25 * s[n - 1] - 48 * s[n - 2] + 36 * s[n - 3] - 16 * s[n - 4] + 3 * s[n - 5]
        else:
            d = -s[i + 2] + 8 * s[i + 1] - 8 * s[i - 1] + s[i - 2]
        out.append(d / h)
    return out


def darboux_verify_trajectory(
    cases: Sequence[DarbouxCase],
    dt: float,
    eps_rel: float = DEFAULT_EPS_REL,
    tol: float = DEFAULT_TOL,
    constraint_tol: float = DEFAULT_CONSTRAINT_TOL,
    kernel_tol: Optional[float] = KERNEL_TOL,
) -> ResidualReport:
    """
    Time-dependent (ch1)/(ch2) over snapshots cases[i] at t0 + i * dt.

    p_tilde_t comes from `time_derivative` on the intersection of all masks;
    every residual is the maximum over the snapshots.
    """
    if len(cases) < 5:
        raise InsufficientSamplesError(f"need at least 5 snapshots, got {len(cases)}")
    start = time.perf_counter()
    report = _new_report(cases[0], eps_rel, tol=tol, dt=dt, snapshots=len(cases))
    transformed = [_Transformed(case, eps_rel, constraint_tol) for case in cases]
    mask = transformed[0].mask
    for tr in transformed[1:]:
        mask = mask & tr.mask
    _check_mask(mask, "trajectory")

    p_t = time_derivative([tr.gauged.values.values for tr in transformed], dt)
    worst = {"d1_f": 0.0, "d1_p": 0.0, "constraint.main1": 0.0, "constraint.main2": 0.0,
             "ch1": 0.0, "ch2": 0.0}
    ch2_l2 = 0.0
    for case, tr, dpdt in zip(cases, transformed, p_t):
        d1_f, d1_p = case.kernel_residuals()
        worst["d1_f"] = max(worst["d1_f"], d1_f)
        worst["d1_p"] = max(worst["d1_p"], d1_p)
        worst["constraint.main1"] = max(worst["constraint.main1"], tr.constraints.r_main1)
        worst["constraint.main2"] = max(worst["constraint.main2"], tr.constraints.r_main2)
        ch1 = mask.fill(tr.ch1().values)
        ch2 = mask.fill(dpdt - tr.transport().values)
        worst["ch1"] = max(worst["ch1"], float(np.max(np.abs(ch1))))
        worst["ch2"] = max(worst["ch2"], float(np.max(np.abs(ch2))))
        ch2_l2 = max(ch2_l2, float(np.sqrt(np.sum(ch2**2) / max(np.count_nonzero(mask.kept), 1))))

    report.add("d1_f", worst["d1_f"], tol=kernel_tol)
    report.add("d1_p", worst["d1_p"], tol=kernel_tol)
    report.add("constraint.main1", worst["constraint.main1"], tol=constraint_tol)
    report.add("constraint.main2", worst["constraint.main2"], tol=constraint_tol)
    for name in ("ch1", "ch2"):
        entry = report.add(name, worst[name], tol=tol)
        entry.mask_fraction = mask.fraction
    report.residuals["ch2"].l2 = ch2_l2
    if mask.needs_warning:
        report.warn(f"trajectory mask keeps only {mask.fraction:.3f} of the samples")
    report.info["times"] = [case.t for case in cases]
    report.runtime_ms = (time.perf_counter() - start) * 1e3
    return report
