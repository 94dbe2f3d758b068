# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import logging
from dataclasses import dataclass
from typing import Optional

from eulerlax.euler2d import Trajectory, diagnostics, integrate, parse_state, steady_spec_of
from eulerlax.field import Grid2D, write_snapshot
from eulerlax.report import ResidualReport
from eulerlax.utils import write_csv

from .suite import Suite, SuiteConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Euler2DRunConfig(SuiteConfig):
    n: int = 64
    init: str = "eigenstate:k=1,l=1,A=1"
    dt: Optional[float] = None
    tend: float = 1.0
    snap_every: int = 0
    tol: float = 1e-6


def relative_drift(values) -> float:
    scale = max(abs(values[0]), 1e-300)
    return max(abs(v - values[0]) for v in values) / scale


class Euler2DRunSuite(Suite):
    """Integrate 2D Euler and check the conserved quantities."""

    name = "euler2d-run"
    config_type = Euler2DRunConfig

    # mean vorticity is conserved to rounding, independently of dt
    MEAN_TOL = 1e-13

    def forward(self) -> ResidualReport:
        config: Euler2DRunConfig = self.config
        grid = Grid2D.square(config.n)
        state = parse_state(config.init, grid)
        trajectory = integrate(state, config.dt, config.tend, progress=self.progress)
        report = self.new_report(grid, init=config.init, dt=trajectory.dt, tend=config.tend,
                                 steps=len(trajectory) - 1)
        rows = trajectory.diagnostics_rows()
        energy = [r[1] for r in rows]
        enstrophy = [r[2] for r in rows]
        mean = [r[3] for r in rows]
        report.add("energy_drift", relative_drift(energy), tol=config.tol)
        report.add("enstrophy_drift", relative_drift(enstrophy), tol=config.tol)
        report.add("mean_drift", max(abs(m - mean[0]) for m in mean), tol=self.MEAN_TOL)
        if steady_spec_of(config.init) is not None:
            drift = (trajectory[-1].omega - state.omega).max_abs()
            report.add("steady_drift", drift / max(state.omega.max_abs(), 1e-300), tol=config.tol)
        report.info["final"] = diagnostics(trajectory[-1])._asdict()
        self._write(trajectory, rows)
        return report

    def _write(self, trajectory: Trajectory, rows) -> None:
        path = self.artifact_path("diagnostics.csv")
        if path is None:
            return
        write_csv(path, ("t", "energy", "enstrophy", "mean_vorticity"), rows)
        for i, state in trajectory.snapshots(self.config.snap_every):
            write_snapshot(self.artifact_path(f"omega_{i:06d}.eulf"), state.omega)
        logger.info(f"wrote {len(self.artifacts)} artifacts into {self.out_dir}")
