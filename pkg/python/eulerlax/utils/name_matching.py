# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import logging
from typing import Optional, Sequence

from thefuzz import process

logger = logging.getLogger(__name__)

MATCH_THRESHOLD = 60


def best_match(query: str, choices: Sequence[str]) -> Optional[str]:
    """
    Finds the closest registered name for a query using fuzzy string matching.

    Returns None when nothing scores above MATCH_THRESHOLD.
    """
    if not choices or not query:
        return None
    match, score = process.extractOne(query, list(choices))
    logger.debug("best match for %r is %r (score %d)", query, match, score)
    return match if score >= MATCH_THRESHOLD else None
