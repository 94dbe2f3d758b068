# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Suites for the 2D Lax pair: compatibility identities and isospectral transport."""
from dataclasses import dataclass
from typing import Optional, Tuple

from eulerlax.darboux import build_kernel_solution
from eulerlax.errors import ConfigError
from eulerlax.euler2d import FlowState2D, euler_rhs, integrate, parse_state
from eulerlax.field import ComplexField, Grid2D, ScalarField2D, random_bandlimited
from eulerlax.lax2d import (
    compatibility_residual_2d,
    eigen_residual,
    isospectrality_monitor,
    symmetry_residual,
    transport_phi,
)
from eulerlax.report import ResidualReport
from eulerlax.utils import write_csv

from .suite import Suite, SuiteConfig


@dataclass(frozen=True)
class Lax2DVerifyConfig(SuiteConfig):
    n: int = 64
    seed: int = 0
    seeds: int = 1
    kmax: int = 4
    tol: float = 1e-8


class Lax2DVerifySuite(Suite):
    name = "lax2d-verify"
    config_type = Lax2DVerifyConfig

    def forward(self) -> ResidualReport:
        config: Lax2DVerifyConfig = self.config
        grid = Grid2D.square(config.n)
        report = self.new_report(grid, seed=config.seed, seeds=config.seeds, kmax=config.kmax)

        def case(seed):
            omega = random_bandlimited(4 * seed, config.kmax, grid)
            phi = random_bandlimited(4 * seed + 1, config.kmax, grid)
            omega_t = random_bandlimited(4 * seed + 2, config.kmax, grid)
            state = FlowState2D.from_vorticity(omega)
            square = build_kernel_solution(omega, "square")
            cube = build_kernel_solution(omega, "cube")
            l_part, a_part = symmetry_residual(omega, state.psi, phi)
            complex_phi = ComplexField(phi, square)
            return {
                "compatibility": compatibility_residual_2d(state, omega_t, phi).max_abs(),
                "compatibility_euler": compatibility_residual_2d(state, euler_rhs(state), phi).max_abs(),
                "compatibility_complex": float(
                    compatibility_residual_2d(state, omega_t, complex_phi).modulus().max()),
                "kernel": max(eigen_residual(omega, square).max_abs(),
                              eigen_residual(omega, cube).max_abs()),
                "symmetry": max(l_part.max_abs(), a_part.max_abs()),
            }

        rows = self.map_cases(case, range(config.seed, config.seed + config.seeds))
        for name in rows[0]:
            report.add(name, max(r[name] for r in rows), tol=config.tol)
        return report


@dataclass(frozen=True)
class Lax2DTransportConfig(SuiteConfig):
    n: int = 64
    init: str = "random:seed=7,kmax=6"
    phi0: str = "omega"
    dt: Optional[float] = 5e-3
    tend: float = 0.5
    tol: float = 1e-5


def initial_phi(text: str, omega: ScalarField2D) -> Tuple[ScalarField2D, bool]:
    """
    Build phi0 from a description; the flag tells whether phi0 lies in the
    kernel of L, i.e. whether its isospectral residual should vanish.

        omega                  phi0 = omega
        <kernel function>      phi0 = h(omega), e.g. square or 2+cos
        random:seed=3,kmax=4   an independent field (control case)
    """
    text = text.strip()
    if text == "omega":
        return omega, True
    if text.startswith("random"):
        _, _, rest = text.partition(":")
        params = dict(item.split("=", 1) for item in rest.split(",") if item)
        try:
            field = random_bandlimited(int(params.pop("seed", 0)), int(params.pop("kmax", 4)), omega.grid)
        except ValueError as e:
            raise ConfigError(f"cannot parse phi0 {text!r}: {e}") from e
        if params:
            raise ConfigError(f"unused parameters {sorted(params)} in phi0 {text!r}")
        return field, False
    return build_kernel_solution(omega, text), True


class Lax2DTransportSuite(Suite):
    """Carry phi along an Euler run and watch {omega(t), phi(t)}."""

    name = "lax2d-transport"
    config_type = Lax2DTransportConfig

    def forward(self) -> ResidualReport:
        config: Lax2DTransportConfig = self.config
        grid = Grid2D.square(config.n)
        state = parse_state(config.init, grid)
        phi0, in_kernel = initial_phi(config.phi0, state.omega)
        trajectory = integrate(state, config.dt, config.tend, progress=self.progress)
        phis = transport_phi(trajectory, phi0, trajectory.dt, progress=self.progress)
        rows = isospectrality_monitor(trajectory, phis)
        report = self.new_report(grid, init=config.init, phi0=config.phi0, dt=trajectory.dt,
                                 tend=config.tend)
        report.add("isospectral", max(r[1] for r in rows), tol=config.tol if in_kernel else None)
        if config.phi0 == "omega":
            gap = max((phi - s.omega).max_abs() for phi, s in zip(phis, trajectory))
            report.add("phi_minus_omega", gap, tol=config.tol)
        path = self.series_path("transport.csv")
        if path is not None:
            write_csv(path, ("t", "linf", "l2"), rows)
        return report
