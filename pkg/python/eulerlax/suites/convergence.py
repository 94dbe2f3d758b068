# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Resolution studies: residuals of analytic inputs must shrink spectrally."""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from eulerlax.darboux import DarbouxCase, darboux_verify
from eulerlax.errors import InsufficientSamplesError, UnknownSuiteError
from eulerlax.euler2d import SteadyStateSpec
from eulerlax.field import Grid2D, analytic_triple, jacobi_residual
from eulerlax.report import ResidualReport
from eulerlax.utils import write_csv

from .suite import Suite, SuiteConfig

logger = logging.getLogger(__name__)

# mask threshold shared by every resolution of the Darboux study
DARBOUX_STUDY_EPS = 5e-2


def jacobi_at(n: int, config) -> float:
    return jacobi_residual(*analytic_triple(Grid2D.square(n))).max_abs()


def darboux_at(n: int, config) -> float:
    """ch1 residual of the resolvent gauge on the unit eigenstate."""
    state = SteadyStateSpec("laplacian-eigenstate").build(Grid2D.square(n))
    case = DarbouxCase.from_kernel(state, "resolvent", "square", getattr(config, "c", 0.25))
    return darboux_verify(case, DARBOUX_STUDY_EPS).residuals["ch1"].linf


STUDIES: Dict[str, Callable[[int, object], float]] = {
    "jacobi": jacobi_at,
    "darboux-run": darboux_at,
}


def convergence_study(study: str, sizes: Sequence[int], config=None,
                      progress: bool = False) -> List[Tuple[int, float]]:
    """Rows (n, residual) of a named study over increasing resolutions."""
    sizes = [int(n) for n in sizes]
    if len(sizes) < 3:
        raise InsufficientSamplesError(f"a convergence study needs at least 3 sizes, got {sizes}")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError(f"sizes should be strictly increasing, got {sizes}")
    if study not in STUDIES:
        raise UnknownSuiteError(study, STUDIES)
    evaluate = STUDIES[study]
    rows = []
    for n in tqdm(sizes, desc=f"converge:{study}", disable=not progress):
        rows.append((n, evaluate(n, config)))
        logger.info(f"{study} at n={n}: residual {rows[-1][1]:.3e}")
    return rows


@dataclass(frozen=True)
class ConvergeConfig(SuiteConfig):
    sizes: Tuple[int, ...] = (32, 48, 64)
    study: str = "jacobi"
    c: float = 0.25
    # required decay r(sizes[0]) / r(sizes[-1])
    ratio: float = 1e3
    # bound on r(sizes[-1]) / r(sizes[0]); 1 / ratio when unset
    tol: Optional[float] = None


class ConvergeSuite(Suite):
    name = "converge"
    config_type = ConvergeConfig

    def forward(self) -> ResidualReport:
        config: ConvergeConfig = self.config
        rows = convergence_study(config.study, config.sizes, config, self.progress)
        report = self.new_report(None, study=config.study, sizes=list(config.sizes))
        first, last = rows[0][1], rows[-1][1]
        tol = 1.0 / config.ratio if config.tol is None else config.tol
        report.add("inverse_decay", last / first if first > 0.0 else 1.0, tol=tol)
        report.info["rows"] = [list(r) for r in rows]
        report.info["monotone"] = all(b[1] <= a[1] for a, b in zip(rows, rows[1:]))
        path = self.series_path(f"converge_{config.study}.csv")
        if path is not None:
            write_csv(path, ("n", "residual"), rows)
        return report
