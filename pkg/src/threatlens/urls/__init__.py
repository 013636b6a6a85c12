from .parsing import MalformedUrl, UrlParts, parse_url
from .suffix import SuffixList, default_suffix_list
from .lexical import (
    LEXICAL_FEATURE_NAMES,
    extract_lexical_features,
    load_shortener_hosts,
)

__all__ = [
    "MalformedUrl",
    "UrlParts",
    "parse_url",
    "SuffixList",
    "default_suffix_list",
    "LEXICAL_FEATURE_NAMES",
    "extract_lexical_features",
    "load_shortener_hosts",
]
