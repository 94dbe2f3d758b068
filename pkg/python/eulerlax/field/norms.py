# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
from typing import Optional, Tuple

import numpy as np

from eulerlax.errors import EmptyMaskError, GridMismatchError
from .scalar import Mask2D, _samples


def norms(f, mask: Optional[Mask2D] = None) -> Tuple[float, float]:
    """
    Max-abs and root-mean-square of a field over the kept samples.

    Complex fields use the pointwise modulus, vector fields the pointwise
    Euclidean length.
    """
    samples = _samples(f)
    if mask is not None:
        if mask.grid != f.grid:
            raise GridMismatchError(f.grid, mask.grid)
        samples = samples[mask.kept]
        if samples.size == 0:
            raise EmptyMaskError("norm requested over an empty mask")
    linf = float(np.max(samples))
    l2 = float(np.sqrt(np.mean(samples**2)))
    return linf, l2


def linf(f, mask: Optional[Mask2D] = None) -> float:
    return norms(f, mask)[0]


def l2(f, mask: Optional[Mask2D] = None) -> float:
    return norms(f, mask)[1]
