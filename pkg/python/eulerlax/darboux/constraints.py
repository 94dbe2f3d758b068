# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""Constraints on the potential shift F under which the Darboux map is consistent.

Main set:  {omega, lap F} = 0 and {omega + lap F, F} = 0
Alt set 1: {omega, lap F} = 0 and {omega, F} = 0
Alt set 2: {omega, lap F} = 0 and {lap F, F} = 0
Either alternative implies the main set. The reduction rests on

    {omega + lap F, F} = ((omega_y + lap F_y) / omega_y) {omega, F}
    {omega + lap F, F} = ((omega_y + lap F_y) / lap F_y) {lap F, F}

whenever {omega, lap F} = 0; both are checked on their own masks.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from eulerlax.field import Mask2D, ScalarField2D, check_same_grid, gradient, laplacian, norms
from eulerlax.field import poisson_bracket

from .gauge import DEFAULT_EPS_REL, _check_eps

logger = logging.getLogger(__name__)

DEFAULT_CONSTRAINT_TOL = 1e-9


@dataclass
class ConstraintReport:
    r_main1: float
    r_main2: float
    r_alt1: float
    r_alt2: float
    tol: float = DEFAULT_CONSTRAINT_TOL
    # discrepancy of the reduction identities; nan when their mask is empty
    identity_alt1: float = math.nan
    identity_alt2: float = math.nan
    mask_fraction_alt1: float = 0.0
    mask_fraction_alt2: float = 0.0
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def verdict_main(self) -> bool:
        return self.r_main1 < self.tol and self.r_main2 < self.tol

    @property
    def verdict_alt1(self) -> bool:
        return self.r_main1 < self.tol and self.r_alt1 < self.tol

    @property
    def verdict_alt2(self) -> bool:
        return self.r_main1 < self.tol and self.r_alt2 < self.tol

    def violates(self, factor: float = 10.0) -> bool:
        """True when the main set fails even at factor * tol."""
        bound = factor * self.tol
        return not (self.r_main1 < bound and self.r_main2 < bound)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r_main1": self.r_main1,
            "r_main2": self.r_main2,
            "r_alt1": self.r_alt1,
            "r_alt2": self.r_alt2,
            "tol": self.tol,
            "verdict_main": self.verdict_main,
            "verdict_alt1": self.verdict_alt1,
            "verdict_alt2": self.verdict_alt2,
            "identity_alt1": self.identity_alt1,
            "identity_alt2": self.identity_alt2,
            "mask_fraction_alt1": self.mask_fraction_alt1,
            "mask_fraction_alt2": self.mask_fraction_alt2,
        }


def _masked_linf(values: ScalarField2D, mask: Mask2D) -> Optional[float]:
    if mask.fraction == 0.0:
        return None
    return norms(values, mask)[0]


def check_constraints(
    omega: ScalarField2D,
    F: ScalarField2D,
    eps_rel: float = DEFAULT_EPS_REL,
    tol: float = DEFAULT_CONSTRAINT_TOL,
) -> ConstraintReport:
    _check_eps(eps_rel)
    check_same_grid(omega, F)
    lap_F = laplacian(F)
    shifted = omega + lap_F
    main2 = poisson_bracket(shifted, F)
    alt1 = poisson_bracket(omega, F)
    alt2 = poisson_bracket(lap_F, F)
    report = ConstraintReport(
        r_main1=poisson_bracket(omega, lap_F).max_abs(),
        r_main2=main2.max_abs(),
        r_alt1=alt1.max_abs(),
        r_alt2=alt2.max_abs(),
        tol=tol,
    )

    omega_y = gradient(omega)[1]
    lap_F_y = gradient(lap_F)[1]
    numerator = (omega_y + lap_F_y).values

    mask1 = Mask2D.from_denominators(eps_rel, omega_y)
    ratio1 = mask1.divide(numerator, omega_y.values)
    value = _masked_linf(main2 - omega.like(ratio1) * alt1, mask1)
    report.mask_fraction_alt1 = mask1.fraction
    if value is not None:
        report.identity_alt1 = value

    mask2 = Mask2D.from_denominators(eps_rel, lap_F_y)
    ratio2 = mask2.divide(numerator, lap_F_y.values)
    value = _masked_linf(main2 - omega.like(ratio2) * alt2, mask2)
    report.mask_fraction_alt2 = mask2.fraction
    if value is not None:
        report.identity_alt2 = value
    else:
        report.notes["identity_alt2"] = "lap F is y-independent; second identity not checked"

    logger.debug(f"constraints: main=({report.r_main1:.2e}, {report.r_main2:.2e}) "
                 f"alt=({report.r_alt1:.2e}, {report.r_alt2:.2e})")
    return report
