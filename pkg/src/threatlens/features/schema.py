"""Feature schema: the ordered column contract shared by training data,
assembled vectors and trained models.

The group table below is the auditable assignment of every known dataset
column to its source: lexical (from the URL string), content (from page
markup), external (from third-party providers). Columns outside the table
are carried with group "unknown" and filled by imputation at serve time.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from ..urls.lexical import LEXICAL_FEATURE_NAMES


class DuplicateColumn(ValueError):
    pass


class MissingLabelColumn(ValueError):
    pass


class SchemaMismatch(ValueError):
    pass


_CONTENT_COLUMNS = (
    "nb_hyperlinks", "ratio_intHyperlinks", "ratio_extHyperlinks",
    "ratio_nullHyperlinks", "nb_extCSS", "ratio_intRedirection",
    "ratio_extRedirection", "ratio_intErrors", "ratio_extErrors",
    "login_form", "external_favicon", "links_in_tags", "submit_email",
    "ratio_intMedia", "ratio_extMedia", "sfh", "iframe", "popup_window",
    "safe_anchor", "onmouseover", "right_clic", "empty_title",
    "domain_in_title", "domain_with_copyright", "nb_redirection",
    "nb_external_redirection",
)

_EXTERNAL_COLUMNS = (
    "whois_registered_domain", "domain_registration_length", "domain_age",
    "web_traffic", "dns_record", "google_index", "page_rank",
    "statistical_report",
)

#: Lexical columns known from the dataset family that have no registered
#: extractor; they still belong to the lexical group for auditing.
_LEXICAL_UNEXTRACTED = (
    "abnormal_subdomain", "random_domain", "domain_in_brand",
    "brand_in_subdomain", "brand_in_path",
)

GROUP_TABLE: dict[str, str] = {}
for _name in LEXICAL_FEATURE_NAMES + _LEXICAL_UNEXTRACTED:
    GROUP_TABLE[_name] = "lexical"
for _name in _CONTENT_COLUMNS:
    GROUP_TABLE[_name] = "content"
for _name in _EXTERNAL_COLUMNS:
    GROUP_TABLE[_name] = "external"

#: Columns that identify the row rather than describe it.
IDENTIFIER_COLUMNS = ("url",)


@dataclass(frozen=True)
class FeatureSchema:
    name: str
    version: str
    columns: tuple[tuple[str, str], ...]  # (column name, group)

    @property
    def column_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.columns)

    def __len__(self) -> int:
        return len(self.columns)


def schema_version(column_names) -> str:
    digest = hashlib.sha256("\x1f".join(column_names).encode("utf-8"))
    return digest.hexdigest()[:12]


def load_schema_from_dataset(header: list[str], label_column: str,
                             name: str = "phishing-url") -> FeatureSchema:
    """Schema from a dataset header: drops the label column and identifier
    columns, assigns groups from the table, keeps header order."""
    if len(set(header)) != len(header):
        seen, dupes = set(), set()
        for col in header:
            (dupes if col in seen else seen).add(col)
        raise DuplicateColumn(f"duplicate columns: {sorted(dupes)}")
    if label_column not in header:
        raise MissingLabelColumn(f"label column {label_column!r} not in header")
    columns = tuple(
        (col, GROUP_TABLE.get(col, "unknown"))
        for col in header
        if col != label_column and col not in IDENTIFIER_COLUMNS
    )
    return FeatureSchema(name=name, version=schema_version(c for c, _ in columns),
                         columns=columns)


def check_same_schema(expected: FeatureSchema, actual: FeatureSchema) -> None:
    if (expected.name, expected.version, expected.columns) != (
            actual.name, actual.version, actual.columns):
        raise SchemaMismatch(
            f"schema {actual.name}:{actual.version} does not match "
            f"model schema {expected.name}:{expected.version}")
