# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Experiment configuration shared by the command line and the suite runner."""
import json
import os
from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Dict, Optional, Tuple

import yaml

from eulerlax.errors import ConfigError
from eulerlax.euler2d import with_default_seed
from eulerlax.utils import best_match

SEED_ENV = "EULERLAX_SEED"


def _as_tuple(value, cast=float) -> Tuple:
    if isinstance(value, str):
        value = [v for v in value.replace(" ", "").split(",") if v]
    if isinstance(value, (int, float)):
        value = [value]
    return tuple(cast(v) for v in value)


@dataclass(frozen=True)
class ExperimentConfig:
    suite: str = "jacobi"
    n: int = 64
    # resolutions of a convergence study
    sizes: Tuple[int, ...] = (32, 48, 64)
    seed: int = 0
    # number of consecutive seeds swept by the randomized suites
    seeds: int = 1
    kmax: int = 4
    # None selects the suite default
    tol: Optional[float] = None
    eps_rel: float = 1e-3
    dt: Optional[float] = None
    tend: float = 1.0
    init: str = "eigenstate:k=1,l=1,A=1"
    phi0: str = "omega"
    f: str = "2+cos"
    p: str = "square"
    c: float = 0.25
    a1: Tuple[float, float, float] = (1.0, 2.0, 3.0)
    a2: Tuple[float, float, float] = (-1.0, 0.0, 2.0)
    eps: Tuple[float, ...] = (1e-1, 1e-2, 1e-3)
    snap_every: int = 0
    # suite whose residual a convergence study follows
    study: str = "jacobi"
    jobs: int = 1
    out: Optional[str] = None
    database: Optional[str] = None

    def __post_init__(self):
        from eulerlax.suites.registry import check_suite_name
        check_suite_name(self.suite)
        check_suite_name(self.study)
        try:
            object.__setattr__(self, "n", int(self.n))
            object.__setattr__(self, "sizes", _as_tuple(self.sizes, int))
            object.__setattr__(self, "seed", int(self.seed))
            object.__setattr__(self, "seeds", int(self.seeds))
            object.__setattr__(self, "kmax", int(self.kmax))
            object.__setattr__(self, "eps_rel", float(self.eps_rel))
            object.__setattr__(self, "tend", float(self.tend))
            object.__setattr__(self, "c", float(self.c))
            object.__setattr__(self, "a1", _as_tuple(self.a1))
            object.__setattr__(self, "a2", _as_tuple(self.a2))
            object.__setattr__(self, "eps", _as_tuple(self.eps))
            object.__setattr__(self, "snap_every", int(self.snap_every))
            object.__setattr__(self, "jobs", int(self.jobs))
            if self.tol is not None:
                object.__setattr__(self, "tol", float(self.tol))
            if self.dt is not None:
                object.__setattr__(self, "dt", float(self.dt))
        except (TypeError, ValueError) as e:
            raise ConfigError(f"invalid experiment configuration: {e}") from e
        self._validate()

    def _validate(self):
        if self.n < 8 or self.n % 2:
            raise ConfigError(f"n should be an even integer >= 8, got {self.n}")
        if self.seeds < 1:
            raise ConfigError(f"seeds should be at least 1, got {self.seeds}")
        if self.kmax < 0:
            raise ConfigError(f"kmax should be non-negative, got {self.kmax}")
        if self.tol is not None and self.tol <= 0.0:
            raise ConfigError(f"tol should be positive, got {self.tol}")
        if not 0.0 < self.eps_rel < 0.1:
            raise ConfigError(f"eps_rel should lie in (0, 0.1), got {self.eps_rel}")
        if self.dt is not None and self.dt <= 0.0:
            raise ConfigError(f"dt should be positive, got {self.dt}")
        if self.tend < 0.0:
            raise ConfigError(f"tend should be non-negative, got {self.tend}")
        if len(self.a1) != 3 or len(self.a2) != 3:
            raise ConfigError(f"shift vectors need 3 components, got {self.a1} and {self.a2}")
        if self.jobs < 1:
            raise ConfigError(f"jobs should be at least 1, got {self.jobs}")
        if self.snap_every < 0:
            raise ConfigError(f"snap_every should be non-negative, got {self.snap_every}")

    # construction
    @classmethod
    def field_names(cls):
        return [f.name for f in fields(cls)]

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentConfig":
        names = cls.field_names()
        unknown = [key for key in data if key not in names]
        if unknown:
            key = unknown[0]
            suggestion = best_match(key, names)
            hint = f" Did you mean '{suggestion}'?" if suggestion else ""
            raise ConfigError(f"unknown configuration key '{key}'.{hint}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_yaml(cls, text: str) -> "ExperimentConfig":
        data = yaml.safe_load(text) or {}
        if not isinstance(data, dict):
            raise ConfigError("a configuration file should hold a mapping")
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: str) -> "ExperimentConfig":
        with open(path) as f:
            text = f.read()
        if path.endswith((".yaml", ".yml")):
            return cls.from_yaml(text)
        return cls.from_json(text)

    def with_overrides(self, **overrides) -> "ExperimentConfig":
        unknown = [k for k in overrides if k not in self.field_names()]
        if unknown:
            raise ConfigError(f"unknown configuration keys {unknown}")
        return replace(self, **overrides)

    def with_env(self) -> "ExperimentConfig":
        """Apply EULERLAX_SEED when it is set."""
        seed = os.environ.get(SEED_ENV)
        if seed is None or seed == "":
            return self
        try:
            return replace(self, seed=int(seed))
        except ValueError as e:
            raise ConfigError(f"{SEED_ENV} should be an integer, got {seed!r}") from e

    def with_seeded_states(self) -> "ExperimentConfig":
        """
        Seed `random:` states that name no seed of their own: the initial state
        takes `seed`, a random phi0 takes `seed + 1`.
        """
        return replace(self, init=with_default_seed(self.init, self.seed),
                       phi0=with_default_seed(self.phi0, self.seed + 1))

    # serialization
    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        for key, value in data.items():
            if isinstance(value, tuple):
                data[key] = list(value)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_yaml(self) -> str:
        return yaml.safe_dump(self.to_dict(), sort_keys=True)
