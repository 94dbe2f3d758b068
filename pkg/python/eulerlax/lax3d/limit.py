# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Behaviour of the shifted compatibility equation as the shifts go to zero."""
import logging
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from eulerlax.errors import InsufficientSamplesError
from eulerlax.field import linf
from eulerlax.utils import write_csv

from .compatibility import compatibility_residual_3v
from .vector import ShiftVector, VectorField3D

logger = logging.getLogger(__name__)


@dataclass
class LimitStudy:
    """(eps, |residual(eps a1, eps a2) - residual(0, 0)|) rows and the fitted order in eps."""
    rows: List[Tuple[float, float]] = field(default_factory=list)
    order: float = float("nan")

    COLUMNS = ("eps", "difference")

    def write(self, path: str) -> str:
        return write_csv(path, self.COLUMNS, self.rows)


def fit_order(eps: Sequence[float], values: Sequence[float]) -> float:
    """Slope of log(values) against log(eps); nan when any value is zero."""
    values = np.asarray(values, dtype=float)
    if np.any(values <= 0.0):
        return float("nan")
    slope, _ = np.polyfit(np.log(np.asarray(eps, dtype=float)), np.log(values), 1)
    return float(slope)


def alpha_limit_study(
    q_base: VectorField3D,
    omega: VectorField3D,
    a1: ShiftVector,
    a2: ShiftVector,
    epsilons: Sequence[float],
) -> LimitStudy:
    """
    Distance between the shifted and the unshifted compatibility residuals for
    shifts eps * a1, eps * a2. The shift terms are linear in alpha, so the
    fitted order is 1 unless a1 = a2 = 0, where every difference is zero.
    """
    epsilons = [float(e) for e in epsilons]
    if len(epsilons) < 3:
        raise InsufficientSamplesError(f"need at least 3 epsilons for an order fit, got {len(epsilons)}")
    if any(e <= 0.0 for e in epsilons):
        raise ValueError(f"epsilons should be positive, got {epsilons}")
    if any(b >= a for a, b in zip(epsilons, epsilons[1:])):
        raise ValueError(f"epsilons should be strictly decreasing, got {epsilons}")

    base = compatibility_residual_3v(None, omega, q_base)
    study = LimitStudy()
    for eps in epsilons:
        shifted = compatibility_residual_3v(None, omega, q_base, eps * a1, eps * a2)
        study.rows.append((eps, linf(shifted - base)))
    study.order = fit_order(epsilons, [r[1] for r in study.rows])
    logger.info(f"alpha limit: fitted order {study.order:.4f} over eps={epsilons}")
    return study
