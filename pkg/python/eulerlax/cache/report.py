# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""On-disk database of residual reports keyed by suite configuration."""
import json
import logging
import os
import tempfile
from dataclasses import asdict
from hashlib import sha256
from typing import Dict, Optional

from eulerlax.report import ResidualReport

logger = logging.getLogger(__name__)

EULERLAX_DATABASE_PATH = os.environ.get("EULERLAX_DATABASE_PATH",
                                        os.path.expanduser("~/.cache/eulerlax"))


def config_key(config) -> str:
    return sha256(repr(config).encode()).hexdigest()


class ReportCache:
    """
    Manages reports of suite runs (jacobi, darboux-run, ...) keyed by their
    frozen configurations.
    """

    def __init__(self):
        self.cache: Dict[object, ResidualReport] = {}

    def add(self, config, report: ResidualReport):
        self.cache[config] = report

    def get(self, config) -> Optional[ResidualReport]:
        return self.cache.get(config)

    def exists(self, config) -> bool:
        return config in self.cache

    def clear(self):
        self.cache.clear()

    def size(self) -> int:
        return len(self.cache)

    def save_into_database(self, database_path=None):
        database_path = self._ensure_database_path(database_path)
        for config, report in self.cache.items():
            suite_path = os.path.join(database_path, report.suite)
            os.makedirs(suite_path, exist_ok=True)
            config_path = os.path.join(suite_path, config_key(config))
            # if the config already exists, skip saving
            if os.path.exists(config_path):
                continue
            os.makedirs(config_path, exist_ok=True)
            self._save_config_and_report(config, report, config_path)
        return database_path

    def load_from_database(self, database_path, suite: Optional[str] = None):
        if not os.path.exists(database_path):
            logger.info(f"Database path {database_path} does not exist, skipping loading reports")
            return
        suites = [suite] if suite else sorted(os.listdir(database_path))
        for name in suites:
            suite_path = os.path.join(database_path, name)
            if not os.path.isdir(suite_path):
                logger.info(f"Suite {name} does not exist in the database, skipping")
                continue
            for directory in sorted(os.listdir(suite_path)):
                self._load_report(os.path.join(suite_path, directory))

    def lookup(self, config, database_path) -> Optional[ResidualReport]:
        """Report of `config` from memory or from its database entry, if any."""
        report = self.get(config)
        if report is not None:
            return report
        from eulerlax.suites.registry import SUITES
        for suite in SUITES.values():
            if isinstance(config, suite.config_type) and type(config) is suite.config_type:
                path = os.path.join(database_path, suite.name, config_key(config))
                if os.path.isdir(path):
                    self._load_report(path)
                break
        report = self.get(config)
        logger.debug(f"database {'hit' if report else 'miss'} for {config}")
        return report

    def _ensure_database_path(self, database_path):
        if database_path is None:
            return tempfile.mkdtemp()
        os.makedirs(database_path, exist_ok=True)
        return database_path

    def _save_config_and_report(self, config, report: ResidualReport, config_path: str):
        config_type = type(config).__name__
        with open(os.path.join(config_path, f"{config_type}.json"), "w") as json_file:
            json.dump(asdict(config), json_file)
        with open(os.path.join(config_path, "report.json"), "w") as json_file:
            json_file.write(report.to_json())
        with open(os.path.join(config_path, "mapping.json"), "w") as json_file:
            json.dump({"config_type": config_type, "suite": report.suite}, json_file)

    def _load_report(self, config_path: str):
        mapping, config, report = None, None, None
        for file in os.listdir(config_path):
            full_path = os.path.join(config_path, file)
            if file == "mapping.json":
                with open(full_path) as f:
                    mapping = json.load(f)
            elif file == "report.json":
                report = ResidualReport.read(full_path)
            elif file.endswith(".json"):
                with open(full_path) as f:
                    config = json.load(f)
        if mapping and config is not None and report:
            self._instantiate_and_add(mapping, config, report)

    def _instantiate_and_add(self, mapping, config, report):
        from eulerlax.suites.registry import SUITES
        suite = SUITES.get(mapping["suite"])
        if suite is None or suite.config_type.__name__ != mapping["config_type"]:
            logger.warning(f"skipping database entry of unknown suite {mapping}")
            return
        values = {k: tuple(v) if isinstance(v, list) else v for k, v in config.items()}
        self.add(suite.config_type(**values), report)


global_report_cache = ReportCache()


def load_global_report_cache(database_path=None, suite=None):
    database_path = database_path or EULERLAX_DATABASE_PATH
    logger.info(f"Loading reports from database {database_path}")
    global_report_cache.load_from_database(database_path, suite)
    return global_report_cache


def get_database_path():
    return EULERLAX_DATABASE_PATH


def set_database_path(path):
    global EULERLAX_DATABASE_PATH
    EULERLAX_DATABASE_PATH = path
    return EULERLAX_DATABASE_PATH
