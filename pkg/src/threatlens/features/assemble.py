"""Feature-vector assembly: schema order, conflict detection, imputation."""

from __future__ import annotations

from dataclasses import dataclass

from ..featuremap import MISSING
from .schema import FeatureSchema

#: Stand-in for unavailable content/external features. Counts and ratios
#: are never negative, so -1 is unambiguous.
IMPUTATION_SENTINEL = -1.0


class ConflictingFeatureValue(ValueError):
    pass


@dataclass(frozen=True)
class FeatureVector:
    schema_version: str
    values: tuple[float, ...]
    imputed_mask: tuple[bool, ...]

    def imputed_count(self) -> int:
        return sum(self.imputed_mask)


def assemble_feature_vector(schema: FeatureSchema, maps: list[dict],
                            sentinel: float = IMPUTATION_SENTINEL) -> FeatureVector:
    """Order feature maps into one vector per the schema.

    Maps may overlap only with equal values; columns absent from every map
    (or present as MISSING everywhere) take the sentinel with their mask
    bit set. The result always has exactly one value per schema column.
    """
    merged: dict[str, float] = {}
    for fmap in maps:
        for name, value in fmap.items():
            if value is MISSING:
                continue
            if name in merged and merged[name] != value:
                raise ConflictingFeatureValue(
                    f"{name!r} has conflicting values {merged[name]!r} and {value!r}")
            merged[name] = value
    values = []
    mask = []
    for name in schema.column_names:
        if name in merged:
            values.append(float(merged[name]))
            mask.append(False)
        else:
            values.append(float(sentinel))
            mask.append(True)
    return FeatureVector(schema_version=schema.version,
                         values=tuple(values), imputed_mask=tuple(mask))
