# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Base classes of the verification suites."""
import logging
import os
import time
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from typing import Callable, Iterable, List, Optional, Type, TypeVar

from tqdm import tqdm

from eulerlax.report import ResidualReport

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class SuiteConfig:
    """Base class of the per-suite configurations. Used for typing."""

    @classmethod
    def from_experiment(cls, experiment) -> "SuiteConfig":
        """Pick the fields this config declares from an ExperimentConfig."""
        values = {}
        for f in fields(cls):
            if hasattr(experiment, f.name):
                value = getattr(experiment, f.name)
                if value is None and f.name == "tol":
                    continue
                values[f.name] = value
        return cls(**values)


class Suite(ABC):
    """
    One named verification suite.

    A suite is built from its frozen config, runs with `forward()` and returns
    a ResidualReport; artifacts go into `out_dir` when one is given.
    """

    name: str = "suite"
    config_type: Type[SuiteConfig] = SuiteConfig

    def __init__(self, config: SuiteConfig, out_dir: Optional[str] = None, jobs: int = 1,
                 progress: bool = False, series_file: Optional[str] = None):
        if not isinstance(config, self.config_type):
            raise TypeError(f"{type(self).__name__} expects a {self.config_type.__name__}, "
                            f"got {type(config).__name__}")
        self.config = config
        self.out_dir = out_dir
        self.series_file = series_file
        self.jobs = max(1, int(jobs))
        self.progress = progress
        self.artifacts: List[str] = []

    @classmethod
    def from_experiment(cls, experiment, **kwargs) -> "Suite":
        return cls(cls.config_type.from_experiment(experiment), **kwargs)

    @abstractmethod
    def forward(self) -> ResidualReport:
        raise NotImplementedError

    def __call__(self) -> ResidualReport:
        logger.info(f"running suite {self.name} with {self.config}")
        start = time.perf_counter()
        report = self.forward()
        report.suite = self.name
        report.runtime_ms = (time.perf_counter() - start) * 1e3
        if self.artifacts:
            report.info["artifacts"] = [os.path.basename(p) for p in self.artifacts]
        logger.info(f"suite {self.name} finished in {report.runtime_ms:.1f} ms, "
                    f"verdict={'pass' if report.verdict else 'fail'}")
        return report

    def new_report(self, grid=None, **parameters) -> ResidualReport:
        return ResidualReport(
            suite=self.name,
            grid=grid.to_dict() if grid is not None else {},
            parameters=parameters,
        )

    def artifact_path(self, filename: str) -> Optional[str]:
        if self.out_dir is None:
            return None
        os.makedirs(self.out_dir, exist_ok=True)
        path = os.path.join(self.out_dir, filename)
        self.artifacts.append(path)
        return path

    def series_path(self, default_name: str) -> Optional[str]:
        """Where a CSV series goes: an explicit file if one was requested, else the output directory."""
        if self.series_file is None:
            return self.artifact_path(default_name)
        directory = os.path.dirname(os.path.abspath(self.series_file))
        os.makedirs(directory, exist_ok=True)
        self.artifacts.append(self.series_file)
        return self.series_file

    def map_cases(self, fn: Callable[..., T], cases: Iterable, desc: Optional[str] = None) -> List[T]:
        """
        Run independent cases, on `jobs` threads when more than one is
        requested. Results come back in case order so reports stay deterministic.
        """
        cases = list(cases)
        desc = desc or self.name
        if self.jobs == 1 or len(cases) < 2:
            return [fn(case) for case in tqdm(cases, desc=desc, disable=not self.progress)]
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            return list(tqdm(pool.map(fn, cases), total=len(cases), desc=desc,
                             disable=not self.progress))

    def __repr__(self):
        return f"{type(self).__name__}({self.config})"
