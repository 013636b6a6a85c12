"""HTTP status-code categorization.

2xx Success, 3xx Redirection, 4xx Client Error, 5xx Server Error; 1xx
codes fall outside those four buckets and map to Other.
"""

from __future__ import annotations

import enum


class OutOfRangeStatus(ValueError):
    pass


class StatusCategory(enum.Enum):
    SUCCESS = "success"
    REDIRECTION = "redirection"
    CLIENT_ERROR = "client_error"
    SERVER_ERROR = "server_error"
    OTHER = "other"


def categorize_status(code: int) -> StatusCategory:
    if not isinstance(code, int) or isinstance(code, bool) or not 100 <= code <= 599:
        raise OutOfRangeStatus(f"status code {code!r} outside 100-599")
    if code < 200:
        return StatusCategory.OTHER
    if code < 300:
        return StatusCategory.SUCCESS
    if code < 400:
        return StatusCategory.REDIRECTION
    if code < 500:
        return StatusCategory.CLIENT_ERROR
    return StatusCategory.SERVER_ERROR


ERROR_CATEGORIES = (StatusCategory.CLIENT_ERROR, StatusCategory.SERVER_ERROR)
