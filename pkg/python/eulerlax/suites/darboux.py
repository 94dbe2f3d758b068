# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Darboux transformation suites."""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from eulerlax.darboux import (
    DarbouxCase,
    b3_b4_residual,
    build_kernel_solution,
    check_constraints,
    cross_term_residual,
    darboux_verify,
    darboux_verify_trajectory,
    form_agreement,
    gauge_transform,
    proof_identity_AB,
)
from eulerlax.errors import ConstraintViolatedError, DegenerateMaskError
from eulerlax.euler2d import FlowState2D, integrate, parse_state, steady_spec_of
from eulerlax.field import Grid2D, random_bandlimited
from eulerlax.report import ResidualReport

from .suite import Suite, SuiteConfig

logger = logging.getLogger(__name__)

# snapshots of the time-dependent check
TRAJECTORY_SNAPSHOTS = 5


@dataclass(frozen=True)
class DarbouxRunConfig(SuiteConfig):
    n: int = 128
    init: str = "eigenstate:k=1,l=1,A=1"
    f: str = "2+cos"
    p: str = "square"
    c: float = 0.25
    eps_rel: float = 1e-3
    dt: Optional[float] = None
    tol: float = 1e-6


class DarbouxRunSuite(Suite):
    """
    Transform p with the fixed solution f and the shift F = c omega, then check
    the transformed Lax pair. Steady initial states are checked at one time;
    other states along a short co-evolved run with F = c omega.
    """

    name = "darboux-run"
    config_type = DarbouxRunConfig

    def forward(self) -> ResidualReport:
        config: DarbouxRunConfig = self.config
        grid = Grid2D.square(config.n)
        state = parse_state(config.init, grid)
        try:
            if steady_spec_of(config.init) is not None:
                report = darboux_verify(DarbouxCase.from_kernel(state, config.f, config.p, config.c),
                                        config.eps_rel, config.tol)
            else:
                dt = config.dt or 1e-2
                trajectory = integrate(state, dt, (TRAJECTORY_SNAPSHOTS - 1) * dt,
                                       progress=self.progress)
                cases = [DarbouxCase.from_kernel(s, config.f, config.p, config.c) for s in trajectory]
                report = darboux_verify_trajectory(cases, trajectory.dt, config.eps_rel, config.tol)
        except (ConstraintViolatedError, DegenerateMaskError) as e:
            report = self.rejected_case(grid, e)
        report.parameters.update(init=config.init, f=config.f, p=config.p, c=config.c)
        report.info["mask_fraction"] = report.mask_fraction
        return report

    def rejected_case(self, grid: Grid2D, error: Exception) -> ResidualReport:
        """A failing report for a case whose shift or mask rules out the check."""
        logger.debug(f"{self.name}: recording {type(error).__name__} as a failing entry")
        report = self.new_report(grid, eps_rel=self.config.eps_rel, tol=self.config.tol)
        if isinstance(error, ConstraintViolatedError):
            cons = error.constraints
            bound = 10.0 * cons.tol
            report.add("constraint.main1", cons.r_main1, tol=bound)
            report.add("constraint.main2", cons.r_main2, tol=bound)
            report.info["constraints"] = cons.to_dict()
        else:
            # excluded share of the grid against the largest one the gauge accepts
            entry = report.add("mask_excluded", 1.0 - error.fraction, tol=1.0 - error.minimum)
            entry.mask_fraction = error.fraction
        report.warn(str(error))
        return report


# (p, f) pairs of the A = B identity check
AB_PAIRS: Tuple[Tuple[str, str], ...] = (
    ("square", "identity"),
    ("cube", "2+cos"),
    ("sin", "exp4"),
    ("cos", "2+cos"),
    ("square", "resolvent"),
)
SHIFT_FAMILY = (0.1, 0.25, -0.3)


@dataclass(frozen=True)
class DarbouxProofConfig(SuiteConfig):
    n: int = 128
    seed: int = 0
    kmax: int = 3
    eps_rel: float = 1e-3
    tol: float = 1e-6


class DarbouxProofSuite(Suite):
    """The intermediate identities of the Darboux argument, one residual each."""

    name = "darboux-proof"
    config_type = DarbouxProofConfig

    # gap between the x and y forms of the gauge
    FORM_TOL = 1e-8
    # main constraint residual whenever an alternative set holds
    IMPLICATION_TOL = 1e-7
    ALT_TOL = 1e-9

    @classmethod
    def record_implication(cls, report: ResidualReport, label: str, cons) -> None:
        """
        The alternative set (alt1 or alt2) and the main set it implies, both
        gated: a shift meant to satisfy the alternative set fails the suite
        when it does not.
        """
        report.add(f"alternative[{label}]", min(cons.r_alt1, cons.r_alt2), tol=cls.ALT_TOL)
        report.add(f"implication[{label}]", max(cons.r_main1, cons.r_main2), tol=cls.IMPLICATION_TOL)

    def forward(self) -> ResidualReport:
        config: DarbouxProofConfig = self.config
        grid = Grid2D.square(config.n)
        eigen = parse_state("eigenstate:k=1,l=1,A=1", grid)
        omega = eigen.omega
        report = self.new_report(grid, seed=config.seed, kmax=config.kmax, eps_rel=config.eps_rel)

        def ab_case(pair):
            p_name, f_name = pair
            return proof_identity_AB(omega, build_kernel_solution(omega, f_name),
                                     build_kernel_solution(omega, p_name), config.eps_rel)

        for (p_name, f_name), gap in zip(AB_PAIRS, self.map_cases(ab_case, AB_PAIRS)):
            entry = report.add(f"AB[{p_name},{f_name}]", gap.value, tol=config.tol)
            entry.mask_fraction = gap.mask_fraction

        square, ident = build_kernel_solution(omega, "square"), build_kernel_solution(omega, "identity")
        diff, mask = form_agreement(square, ident, omega, config.eps_rel)
        report.add("gauge_forms", diff, tol=self.FORM_TOL, mask=mask)
        p_tilde, gauge_mask = gauge_transform(square, ident, omega, config.eps_rel)
        report.add("gauge_closed_form", p_tilde - omega, tol=self.FORM_TOL, mask=gauge_mask)

        for c in SHIFT_FAMILY:
            cons = check_constraints(omega, c * omega, config.eps_rel, self.ALT_TOL)
            self.record_implication(report, f"c={c}", cons)
            if not math.isnan(cons.identity_alt1):
                report.add(f"constraint_identity[c={c}]", cons.identity_alt1, tol=self.FORM_TOL)

        rand = random_bandlimited(config.seed, config.kmax, grid)
        control = check_constraints(omega, rand, config.eps_rel, self.ALT_TOL)
        report.add("implication_control[random F]", max(control.r_main1, control.r_main2))

        # identities that hold on unsteady flows as well
        flow = FlowState2D.from_vorticity(rand)
        shift = random_bandlimited(config.seed + 1, config.kmax, grid)
        cross = cross_term_residual(flow.omega, flow.psi, shift)
        report.add("cross_term", cross, tol=self.FORM_TOL)
        b34 = b3_b4_residual(flow.omega, flow.psi, build_kernel_solution(flow.omega, "2+cos"),
                             config.eps_rel)
        entry = report.add("b3_b4", b34.relative, tol=config.tol)
        entry.mask_fraction = b34.mask_fraction
        return report
