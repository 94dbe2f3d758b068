# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Run one suite from an ExperimentConfig and write its JSON report."""
import logging
import os
from dataclasses import fields
from typing import NamedTuple, Optional

from eulerlax.cache import config_key, global_report_cache
from eulerlax.euler2d import is_unseeded_random
from eulerlax.report import ResidualReport

from .config import ExperimentConfig
from .registry import get_suite

logger = logging.getLogger(__name__)

REPORT_NAME = "report.json"


class OutputPaths(NamedTuple):
    report: Optional[str]
    artifacts: Optional[str]
    series: Optional[str]


def resolve_output(out: Optional[str]) -> OutputPaths:
    """
    Interpret --out.

    *.json  is the report file, artifacts go next to it
    *.csv   is the series file, the report takes the same stem
    other   is a directory holding report.json and the artifacts
    """
    if out is None:
        return OutputPaths(None, None, None)
    root, ext = os.path.splitext(out)
    if ext == ".json":
        return OutputPaths(out, os.path.dirname(os.path.abspath(out)), None)
    if ext == ".csv":
        return OutputPaths(root + ".json", os.path.dirname(os.path.abspath(out)), out)
    return OutputPaths(os.path.join(out, REPORT_NAME), out, None)


def _database_path(config: ExperimentConfig) -> Optional[str]:
    if config.database:
        return config.database
    return os.environ.get("EULERLAX_DATABASE_PATH") or None


def seed_applies(config: ExperimentConfig) -> bool:
    """Whether `config.seed` reaches the suite: a seed field or an unseeded `random:` state."""
    names = {f.name for f in fields(get_suite(config.suite).config_type)}
    if "seed" in names:
        return True
    return any(name in names and is_unseeded_random(getattr(config, name)) for name in ("init", "phi0"))


def run_suite(config: ExperimentConfig, progress: bool = False) -> ResidualReport:
    """
    Build the suite named by `config.suite`, run it and write the report
    when `config.out` is set.

    With a report database configured a finished run is stored under its
    suite config and an identical later run is served from it.
    """
    config = config.with_env().with_seeded_states()
    suite_cls = get_suite(config.suite)
    paths = resolve_output(config.out)
    suite = suite_cls.from_experiment(config, out_dir=paths.artifacts, jobs=config.jobs,
                                      progress=progress, series_file=paths.series)

    database = _database_path(config)
    report = None
    # runs that write artifacts always execute
    if database is not None and paths.artifacts is None:
        report = global_report_cache.lookup(suite.config, database)
        if report is not None:
            logger.info(f"reusing stored report {config_key(suite.config)[:12]} of {config.suite}")
    if report is None:
        report = suite()
        if database is not None:
            global_report_cache.add(suite.config, report)
            global_report_cache.save_into_database(database)

    if paths.report is not None:
        report.write(paths.report)
        logger.info(f"wrote {paths.report}")
    return report
