"""Named feature maps: the common currency between feature extractors.

A feature map is a plain dict from feature name to a finite numeric value,
or to :data:`MISSING` when the extractor could not produce one. Extractors
never fabricate numbers for unavailable features; imputation happens later,
in one place, when vectors are assembled.
"""

from __future__ import annotations

import math


class _Missing:
    """Singleton marker for an unavailable feature value."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "MISSING"


MISSING = _Missing()

FeatureValue = "int | float | _Missing"


def check_feature_map(entries: dict) -> dict:
    """Validate a feature map: unique names enforced by dict, values finite
    numbers or MISSING. Returns the map unchanged."""
    for name, value in entries.items():
        if value is MISSING:
            continue
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"feature {name!r}: non-numeric value {value!r}")
        if not math.isfinite(value):
            raise ValueError(f"feature {name!r}: non-finite value {value!r}")
    return entries
