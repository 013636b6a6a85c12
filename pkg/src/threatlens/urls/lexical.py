"""Lexical URL features: everything computable from the URL string alone.

Counts are taken over the raw input string exactly as the user supplied it
(no percent-decoding, no scheme prefixing), because the signal often lives
in the raw encoding. Host-scoped features use the parsed, lowercased host.

The registry below is the authoritative lexical-group table: feature name
to extractor. Schema columns without a registered extractor are imputed
downstream.
"""

from __future__ import annotations

import functools
import re
from importlib import resources

from ..featuremap import check_feature_map
from .parsing import UrlParts, _SCHEME_RE


@functools.lru_cache(maxsize=4)
def _load_shorteners(name: str = "shorteners.txt") -> frozenset[str]:
    text = resources.files("threatlens.urls").joinpath("data", name).read_text("utf-8")
    hosts = set()
    for line in text.splitlines():
        line = line.strip().lower()
        if line and not line.startswith("#"):
            hosts.add(line)
    return frozenset(hosts)


def load_shortener_hosts(path=None) -> frozenset[str]:
    if path is None:
        return _load_shorteners()
    with open(path, encoding="utf-8") as fh:
        return frozenset(
            line.strip().lower() for line in fh
            if line.strip() and not line.lstrip().startswith("#")
        )


_WORD_SPLIT_RE = re.compile(r"[^a-z0-9]+")

# Path tokens that phishing kits reuse; counted case-insensitively.
_PHISH_HINTS = (
    "wp", "login", "includes", "admin", "content", "site", "images", "js",
    "alibaba", "css", "myaccount", "dropbox", "themes", "plugins", "signin",
    "view",
)

# TLDs disproportionately used by throwaway registrations.
_SUSPICIOUS_TLDS = frozenset((
    "ga", "tk", "ml", "cf", "gq", "xyz", "top", "work", "click", "link",
    "loan", "date", "racing", "party", "review", "country", "stream",
    "download", "men", "gdn", "bid", "win", "vip", "icu", "buzz", "cyou",
    "rest", "monster", "science", "accountant", "faith", "cricket", "webcam",
    "trade",
))


def _words(text: str) -> list[str]:
    return [w for w in _WORD_SPLIT_RE.split(text.lower()) if w]


def _word_stats(words: list[str]) -> tuple[int, int, float]:
    if not words:
        return 0, 0, 0.0
    lengths = [len(w) for w in words]
    return min(lengths), max(lengths), sum(lengths) / len(lengths)


def _longest_char_run(text: str) -> int:
    best = run = 0
    prev = None
    for ch in text:
        run = run + 1 if ch == prev else 1
        prev = ch
        best = max(best, run)
    return best


def _after_scheme(raw: str) -> str:
    m = _SCHEME_RE.match(raw)
    return raw[m.end():] if m else raw


def _digit_ratio(text: str) -> float:
    if not text:
        return 0.0
    return sum(ch.isdigit() for ch in text) / len(text)


def _contains_token(haystack: str, token: str) -> int:
    return int(bool(token) and token in haystack)


def extract_lexical_features(raw: str, parts: UrlParts,
                             shorteners: frozenset[str] | None = None) -> dict:
    """Compute every registered lexical feature for ``raw``.

    ``parts`` must come from :func:`parse_url` on the same string. The
    result has one finite entry per registered feature (never MISSING).
    """
    if shorteners is None:
        shorteners = _load_shorteners()
    lower = raw.lower()
    host = parts.host
    path_lower = parts.path.lower()
    sub_text = ".".join(parts.subdomain_labels)
    words_raw = _words(lower)
    words_host = _words(host)
    words_path = _words(path_lower)
    sh_raw, lo_raw, av_raw = _word_stats(words_raw)
    sh_host, lo_host, av_host = _word_stats(words_host)
    sh_path, lo_path, av_path = _word_stats(words_path)
    domain_label = parts.registrable_domain.split(".")[0]
    last_segment = parts.path.rstrip("/").rpartition("/")[2]

    features = {
        "length_url": len(raw),
        "length_hostname": len(host),
        "ip": int(parts.is_ip_host),
        "nb_dots": raw.count("."),
        "nb_hyphens": raw.count("-"),
        "nb_at": raw.count("@"),
        "nb_qm": raw.count("?"),
        "nb_and": raw.count("&"),
        "nb_or": raw.count("|"),
        "nb_eq": raw.count("="),
        "nb_underscore": raw.count("_"),
        "nb_tilde": raw.count("~"),
        "nb_percent": raw.count("%"),
        "nb_slash": raw.count("/"),
        "nb_star": raw.count("*"),
        "nb_colon": raw.count(":"),
        "nb_comma": raw.count(","),
        "nb_semicolumn": raw.count(";"),
        "nb_dollar": raw.count("$"),
        "nb_space": sum(ch.isspace() for ch in raw),
        "nb_www": lower.count("www"),
        "nb_com": lower.count("com"),
        "nb_dslash": _after_scheme(raw).count("//"),
        "http_in_path": path_lower.count("http"),
        "https_token": int(parts.scheme != "https"),
        "ratio_digits_url": _digit_ratio(raw),
        "ratio_digits_host": _digit_ratio(host),
        "punycode": int(any(label.startswith("xn--") for label in host.split("."))),
        "port": int(parts.port is not None),
        "tld_in_path": _contains_token(path_lower, parts.tld),
        "tld_in_subdomain": _contains_token(sub_text, parts.tld),
        "nb_subdomains": len(parts.subdomain_labels),
        "prefix_suffix": int("-" in domain_label),
        "shortening_service": int(host in shorteners),
        "path_extension": int("." in last_segment),
        "length_words_raw": len(words_raw),
        "char_repeat": _longest_char_run(raw),
        "shortest_words_raw": sh_raw,
        "shortest_word_host": sh_host,
        "shortest_word_path": sh_path,
        "longest_words_raw": lo_raw,
        "longest_word_host": lo_host,
        "longest_word_path": lo_path,
        "avg_words_raw": av_raw,
        "avg_word_host": av_host,
        "avg_word_path": av_path,
        "phish_hints": sum(path_lower.count(hint) for hint in _PHISH_HINTS),
        "suspecious_tld": int(parts.tld in _SUSPICIOUS_TLDS),
    }
    return check_feature_map(features)


def _registered_names() -> tuple[str, ...]:
    from .parsing import parse_url
    sample = "http://example.com/"
    return tuple(extract_lexical_features(sample, parse_url(sample)))


#: Names of every feature the extractor above produces, in output order.
LEXICAL_FEATURE_NAMES = _registered_names()
