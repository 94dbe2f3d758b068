# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
from .report import (
    ReportCache,  # noqa: F401
    config_key,  # noqa: F401
    global_report_cache,  # noqa: F401
    load_global_report_cache,  # noqa: F401
    get_database_path,  # noqa: F401
    set_database_path,  # noqa: F401
)
