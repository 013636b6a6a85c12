from .assemble import (
    IMPUTATION_SENTINEL,
    ConflictingFeatureValue,
    FeatureVector,
    assemble_feature_vector,
)
from .content import CONTENT_FEATURE_NAMES, extract_content_features
from .providers import (
    ProviderReport,
    StubPageContentProvider,
    StubSearchIndexProvider,
    StubWhoisProvider,
    query_external_features,
)
from .schema import (
    GROUP_TABLE,
    DuplicateColumn,
    FeatureSchema,
    MissingLabelColumn,
    SchemaMismatch,
    check_same_schema,
    load_schema_from_dataset,
    schema_version,
)

__all__ = [
    "IMPUTATION_SENTINEL",
    "ConflictingFeatureValue",
    "FeatureVector",
    "assemble_feature_vector",
    "CONTENT_FEATURE_NAMES",
    "extract_content_features",
    "ProviderReport",
    "StubPageContentProvider",
    "StubSearchIndexProvider",
    "StubWhoisProvider",
    "query_external_features",
    "GROUP_TABLE",
    "DuplicateColumn",
    "FeatureSchema",
    "MissingLabelColumn",
    "SchemaMismatch",
    "check_same_schema",
    "load_schema_from_dataset",
    "schema_version",
]
