# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import os
from typing import Dict, List, Sequence

import numpy as np


def write_csv(path: str, columns: Sequence[str], rows) -> str:
    """Write a numeric series as CSV with a header row."""
    data = np.asarray(rows, dtype=np.float64).reshape(-1, len(columns))
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    np.savetxt(path, data, delimiter=",", header=",".join(columns), comments="", fmt="%.17g")
    return path


def read_csv(path: str) -> Dict[str, np.ndarray]:
    with open(path) as f:
        columns: List[str] = f.readline().strip().split(",")
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return {name: data[:, i] for i, name in enumerate(columns)}
