# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Residual reports shared by every verification suite."""
import datetime
import json
import logging
import math
import os
from dataclasses import dataclass, field
from hashlib import sha256
from typing import Any, Dict, List, Optional

import numpy as np

from eulerlax.field import Mask2D, norms

logger = logging.getLogger(__name__)

# fields that legitimately differ between two runs of the same config
VOLATILE_KEYS = ("timestamp", "runtime_ms")


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, (np.integer, )):
        return int(value)
    if isinstance(value, (np.bool_, )):
        return bool(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if hasattr(value, "to_dict"):
        return _jsonable(value.to_dict())
    return value


@dataclass
class ResidualEntry:
    """
    One named residual. `tol=None` marks an informational value that does not
    take part in the verdict (negative controls, diagnostics).
    """
    linf: float
    l2: float = 0.0
    mask_fraction: float = 1.0
    tol: Optional[float] = None

    @property
    def gated(self) -> bool:
        return self.tol is not None

    @property
    def passed(self) -> bool:
        if self.tol is None:
            return True
        return bool(math.isfinite(self.linf) and self.linf < self.tol)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "linf": self.linf,
            "l2": self.l2,
            "mask_fraction": self.mask_fraction,
            "tol": self.tol,
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ResidualEntry":
        linf = data.get("linf")
        return cls(
            linf=math.nan if linf is None else float(linf),
            l2=float(data.get("l2") or 0.0),
            mask_fraction=float(data.get("mask_fraction", 1.0)),
            tol=data.get("tol"),
        )


@dataclass
class ResidualReport:
    suite: str
    grid: Dict[str, Any] = field(default_factory=dict)
    parameters: Dict[str, Any] = field(default_factory=dict)
    residuals: Dict[str, ResidualEntry] = field(default_factory=dict)
    info: Dict[str, Any] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)
    timestamp: str = field(
        default_factory=lambda: datetime.datetime.now(datetime.timezone.utc).isoformat())
    runtime_ms: float = 0.0

    # recording
    def add(self, name: str, value, tol: Optional[float] = None,
            mask: Optional[Mask2D] = None) -> ResidualEntry:
        """
        Record a residual. `value` is either a field (its norms are taken over
        `mask`) or a scalar already reduced to a max-abs value.
        """
        if isinstance(value, (int, float, np.floating)):
            entry = ResidualEntry(float(value), float(abs(value)), 1.0, tol)
        else:
            linf, l2 = norms(value, mask)
            fraction = mask.fraction if mask is not None else 1.0
            entry = ResidualEntry(linf, l2, fraction, tol)
        if mask is not None:
            entry.mask_fraction = mask.fraction
            if mask.needs_warning:
                self.warn(f"{name}: mask keeps only {mask.fraction:.3f} of the samples")
        self.residuals[name] = entry
        return entry

    def warn(self, message: str) -> None:
        logger.warning(f"[{self.suite}] {message}")
        self.warnings.append(message)

    def merge(self, other: "ResidualReport", prefix: str = "") -> None:
        for name, entry in other.residuals.items():
            self.residuals[prefix + name] = entry
        for key, value in other.info.items():
            self.info[prefix + key] = value
        self.warnings.extend(other.warnings)

    # verdict
    @property
    def verdict(self) -> bool:
        return all(entry.passed for entry in self.residuals.values())

    @property
    def failures(self) -> List[str]:
        return [name for name, entry in self.residuals.items() if not entry.passed]

    @property
    def mask_fraction(self) -> float:
        fractions = [e.mask_fraction for e in self.residuals.values()]
        return min(fractions) if fractions else 1.0

    # serialization
    def to_dict(self) -> Dict[str, Any]:
        return _jsonable({
            "suite": self.suite,
            "timestamp": self.timestamp,
            "runtime_ms": self.runtime_ms,
            "grid": self.grid,
            "parameters": self.parameters,
            "mask_fraction": self.mask_fraction,
            "residuals": {name: entry.to_dict() for name, entry in self.residuals.items()},
            "info": self.info,
            "warnings": self.warnings,
            "verdict": self.verdict,
        })

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ResidualReport":
        report = cls(
            suite=data["suite"],
            grid=dict(data.get("grid", {})),
            parameters=dict(data.get("parameters", {})),
            info=dict(data.get("info", {})),
            warnings=list(data.get("warnings", [])),
            timestamp=data.get("timestamp", ""),
            runtime_ms=float(data.get("runtime_ms", 0.0)),
        )
        for name, entry in data.get("residuals", {}).items():
            report.residuals[name] = ResidualEntry.from_dict(entry)
        return report

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def digest(self) -> str:
        """sha256 of the report without its timestamp and runtime."""
        data = self.to_dict()
        for key in VOLATILE_KEYS:
            data.pop(key, None)
        return sha256(json.dumps(data, sort_keys=True).encode()).hexdigest()

    def write(self, path: str) -> str:
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        with open(path, "w") as f:
            f.write(self.to_json())
        return path

    @classmethod
    def read(cls, path: str) -> "ResidualReport":
        with open(path) as f:
            return cls.from_dict(json.load(f))

    def summary_rows(self) -> List[List[Any]]:
        rows = []
        for name, entry in self.residuals.items():
            status = "info" if not entry.gated else ("pass" if entry.passed else "FAIL")
            tol = "-" if entry.tol is None else f"{entry.tol:.1e}"
            rows.append([name, f"{entry.linf:.3e}", f"{entry.l2:.3e}", f"{entry.mask_fraction:.3f}",
                         tol, status])
        return rows
