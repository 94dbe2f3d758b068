# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Suites for the shifted 3D Lax pair."""
from dataclasses import dataclass
from typing import Tuple

from eulerlax.field import Grid2D, Grid3D, linf, random_bandlimited
from eulerlax.lax3d import (
    ShiftVector,
    VectorField3D,
    abc_flow,
    alpha_limit_study,
    commutator_identity_residual,
    compatibility_residual_3v,
    curl,
    divergence,
    embed_2d_vertical,
    lax3d_A,
    lax3d_L,
    specialization_check,
)
from eulerlax.report import ResidualReport

from .suite import Suite, SuiteConfig


@dataclass(frozen=True)
class Lax3DVerifyConfig(SuiteConfig):
    n: int = 32
    seed: int = 0
    seeds: int = 1
    kmax: int = 4
    a1: Tuple[float, float, float] = (1.0, 2.0, 3.0)
    a2: Tuple[float, float, float] = (-1.0, 0.0, 2.0)
    tol: float = 1e-7


class Lax3DVerifySuite(Suite):
    name = "lax3d-verify"
    config_type = Lax3DVerifyConfig

    # closed-form checks on the ABC flow
    STEADY_TOL = 1e-10
    REDUCTION_TOL = 1e-12

    def forward(self) -> ResidualReport:
        config: Lax3DVerifyConfig = self.config
        grid = Grid3D.cube(config.n)
        a1, a2 = ShiftVector(config.a1), ShiftVector(config.a2)
        report = self.new_report(grid, seed=config.seed, seeds=config.seeds, kmax=config.kmax,
                                 a1=list(a1), a2=list(a2))

        def case(seed):
            q = VectorField3D.random(3 * seed, config.kmax, grid)
            omega = VectorField3D.random(3 * seed + 1, config.kmax, grid)
            phi = VectorField3D.random(3 * seed + 2, config.kmax, grid)
            return {
                "commutator": linf(commutator_identity_residual(q, omega, phi, a1, a2)),
                "commutator_unshifted": linf(commutator_identity_residual(q, omega, phi)),
                "self_annihilation": max(linf(lax3d_L(omega, omega)), linf(lax3d_A(q, q))),
            }

        rows = self.map_cases(case, range(config.seed, config.seed + config.seeds))
        for name in rows[0]:
            report.add(name, max(r[name] for r in rows), tol=config.tol)

        u, omega = abc_flow(1.0, 1.0, 1.0, grid)
        report.add("abc_beltrami", linf(curl(u) - u), tol=self.STEADY_TOL)
        report.add("abc_divergence", linf(divergence(u)), tol=self.STEADY_TOL)
        report.add("abc_compatibility", linf(compatibility_residual_3v(None, omega, omega)),
                   tol=self.STEADY_TOL)
        r1, r2 = specialization_check(omega, omega, a1, a1)
        report.add("specialization", max(r1, r2), tol=self.STEADY_TOL)

        plane = Grid2D(nx=grid.nx, ny=grid.ny, lx=grid.lx, ly=grid.ly)
        w = embed_2d_vertical(random_bandlimited(config.seed, config.kmax, plane), grid.nz)
        g = embed_2d_vertical(random_bandlimited(config.seed + 1, config.kmax, plane), grid.nz)
        report.add("reduction_2d", linf(lax3d_L(w, g)), tol=self.REDUCTION_TOL)
        return report


@dataclass(frozen=True)
class Lax3DLimitConfig(SuiteConfig):
    n: int = 32
    a1: Tuple[float, float, float] = (1.0, 2.0, 3.0)
    a2: Tuple[float, float, float] = (-1.0, 0.0, 2.0)
    eps: Tuple[float, ...] = (1e-1, 1e-2, 1e-3)
    tol: float = 1e-2


class Lax3DLimitSuite(Suite):
    """Fitted order of the shifted compatibility residual as the shifts vanish."""

    name = "lax3d-limit"
    config_type = Lax3DLimitConfig

    def forward(self) -> ResidualReport:
        config: Lax3DLimitConfig = self.config
        grid = Grid3D.cube(config.n)
        u, omega = abc_flow(1.0, 1.0, 1.0, grid)
        study = alpha_limit_study(u, omega, ShiftVector(config.a1), ShiftVector(config.a2), config.eps)
        report = self.new_report(grid, a1=list(config.a1), a2=list(config.a2), eps=list(config.eps))
        report.add("order_error", abs(study.order - 1.0), tol=config.tol)
        report.info["order"] = study.order
        report.info["rows"] = [list(r) for r in study.rows]
        path = self.series_path("limit.csv")
        if path is not None:
            study.write(path)
        return report
