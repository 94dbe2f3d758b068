# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Poisson bracket identity suites."""
from dataclasses import dataclass

import numpy as np

from eulerlax.field import (
    Grid2D,
    analytic_triple,
    antisymmetry_residual,
    bilinearity_residual,
    fd4_bracket,
    jacobi_residual,
    leibniz_residual,
    poisson_bracket,
    random_bandlimited,
    reflection_residual,
)
from eulerlax.report import ResidualReport

from .suite import Suite, SuiteConfig


def seeded_triple(seed: int, kmax: int, grid: Grid2D):
    return tuple(random_bandlimited(3 * seed + i, kmax, grid) for i in range(3))


@dataclass(frozen=True)
class JacobiConfig(SuiteConfig):
    n: int = 64
    seed: int = 0
    seeds: int = 1
    kmax: int = 4
    tol: float = 1e-8
    # analytic, non band-limited triple instead of random fields
    analytic: bool = False


class JacobiSuite(Suite):
    """{a, {b, c}} + {b, {c, a}} + {c, {a, b}} = 0 over seeded random triples."""

    name = "jacobi"
    config_type = JacobiConfig

    def forward(self) -> ResidualReport:
        config: JacobiConfig = self.config
        grid = Grid2D.square(config.n)
        report = self.new_report(grid, seed=config.seed, seeds=config.seeds, kmax=config.kmax,
                                 analytic=config.analytic)
        if config.analytic:
            report.add("jacobi", jacobi_residual(*analytic_triple(grid)), tol=config.tol)
            return report

        def case(seed):
            return jacobi_residual(*seeded_triple(seed, config.kmax, grid)).max_abs()

        seeds = range(config.seed, config.seed + config.seeds)
        values = self.map_cases(case, seeds)
        report.add("jacobi", max(values), tol=config.tol)
        report.info["per_seed"] = dict(zip([str(s) for s in seeds], values))
        return report


@dataclass(frozen=True)
class BracketCheckConfig(SuiteConfig):
    n: int = 64
    seed: int = 0
    seeds: int = 1
    kmax: int = 4
    tol: float = 1e-8


class BracketCheckSuite(Suite):
    """Every algebraic identity of the bracket, plus a finite-difference oracle."""

    name = "bracket-check"
    config_type = BracketCheckConfig

    ALPHA, BETA = 0.7, -1.3

    def forward(self) -> ResidualReport:
        config: BracketCheckConfig = self.config
        grid = Grid2D.square(config.n)
        report = self.new_report(grid, seed=config.seed, seeds=config.seeds, kmax=config.kmax)

        def case(seed):
            a, b, c = seeded_triple(seed, config.kmax, grid)
            spectral = poisson_bracket(a, b)
            oracle = fd4_bracket(a, b)
            return {
                "jacobi": jacobi_residual(a, b, c).max_abs(),
                "antisymmetry": antisymmetry_residual(a, b).max_abs(),
                "leibniz": leibniz_residual(a, b, c).max_abs(),
                "bilinearity": bilinearity_residual(a, b, c, self.ALPHA, self.BETA).max_abs(),
                "reflection": reflection_residual(a, b).max_abs(),
                "fd4_oracle": (spectral - oracle).max_abs() / max(spectral.max_abs(), 1e-300),
            }

        rows = self.map_cases(case, range(config.seed, config.seed + config.seeds))
        for name in ("jacobi", "antisymmetry", "leibniz", "bilinearity", "reflection"):
            report.add(name, max(r[name] for r in rows), tol=config.tol)
        # fourth-order oracle error, informational
        report.add("fd4_oracle", float(np.max([r["fd4_oracle"] for r in rows])))
        return report
