# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
from .name_matching import best_match  # noqa: F401
from .series import write_csv, read_csv  # noqa: F401
