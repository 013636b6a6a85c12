"""External feature providers: WHOIS-style records, search-index presence,
page content.

Providers are defined purely by interface. The repo ships deterministic
stubs keyed by a hash of (provider id, seed, host); live clients are
optional adapters that plug in behind the same interface. Failures never
raise out of the query layer: every provider yields a report whose outcome
tells the caller what happened.
"""

from __future__ import annotations

import concurrent.futures
import hashlib
import time
from dataclasses import dataclass, field

from ..featuremap import MISSING
from ..urls.parsing import UrlParts
from .content import CONTENT_FEATURE_NAMES, extract_content_features


@dataclass(frozen=True)
class ProviderReport:
    provider_id: str
    features: dict = field(default_factory=dict)
    latency_ms: float = 0.0
    outcome: str = "ok"  # ok | timeout | error | stubbed


class _StubBase:
    """Deterministic pseudo-provider: pure function of (id, seed, host)."""

    outcome = "stubbed"

    def __init__(self, seed: int = 0):
        self.seed = seed

    def _draw(self, host: str, field_name: str, modulus: int) -> int:
        payload = f"{self.provider_id}:{self.seed}:{host}:{field_name}"
        digest = hashlib.sha256(payload.encode("utf-8")).digest()
        return int.from_bytes(digest[:8], "big") % modulus

    def fetch(self, parts: UrlParts) -> dict:
        raise NotImplementedError


class StubWhoisProvider(_StubBase):
    provider_id = "whois-stub"

    def fetch(self, parts: UrlParts) -> dict:
        host = parts.registrable_domain
        return {
            "whois_registered_domain": self._draw(host, "registered", 2),
            "domain_registration_length": self._draw(host, "reglen", 3650),
            "domain_age": self._draw(host, "age", 9000),
            "dns_record": self._draw(host, "dns", 2),
        }


class StubSearchIndexProvider(_StubBase):
    provider_id = "search-stub"

    def fetch(self, parts: UrlParts) -> dict:
        host = parts.host
        return {
            "google_index": self._draw(host, "indexed", 2),
            "page_rank": self._draw(host, "rank", 11),
            "web_traffic": self._draw(host, "traffic", 10_000_000),
            "statistical_report": self._draw(host, "report", 2),
        }


class StubPageContentProvider(_StubBase):
    """Stands in for a page fetch: emits a deterministic tiny document and
    runs the real content extractor over it."""

    provider_id = "page-stub"

    def fetch(self, parts: UrlParts) -> dict:
        host = parts.host
        n_links = self._draw(host, "links", 30)
        n_ext = self._draw(host, "ext", n_links + 1) if n_links else 0
        pieces = ["<html><head><title>stub</title></head><body>"]
        pieces += [f'<a href="/p{i}">x</a>' for i in range(n_links - n_ext)]
        pieces += [f'<a href="http://ext{i}.example/">x</a>' for i in range(n_ext)]
        if self._draw(host, "iframe", 2):
            pieces.append("<iframe src='/f'></iframe>")
        pieces.append("</body></html>")
        return extract_content_features("".join(pieces), page_host=host)


def all_missing(names=CONTENT_FEATURE_NAMES) -> dict:
    return {name: MISSING for name in names}


def query_external_features(parts: UrlParts, providers: list,
                            timeout_ms: float) -> list[ProviderReport]:
    """Query every provider concurrently; one report per provider.

    A provider that exceeds the timeout or raises yields an all-MISSING
    report with the corresponding outcome instead of failing the batch.
    """
    if not providers:
        raise ValueError("providers must be nonempty")
    if timeout_ms <= 0:
        raise ValueError("timeout_ms must be > 0")
    reports = []
    pool = concurrent.futures.ThreadPoolExecutor(max_workers=len(providers))
    try:
        started = time.perf_counter()
        futures = [pool.submit(provider.fetch, parts) for provider in providers]
        for provider, future in zip(providers, futures):
            remaining = timeout_ms / 1000.0 - (time.perf_counter() - started)
            try:
                features = future.result(timeout=max(remaining, 0.0))
                outcome = getattr(provider, "outcome", "ok")
            except concurrent.futures.TimeoutError:
                future.cancel()
                features, outcome = {}, "timeout"
            except Exception:
                features, outcome = {}, "error"
            latency_ms = (time.perf_counter() - started) * 1000.0
            reports.append(ProviderReport(
                provider_id=provider.provider_id, features=features,
                latency_ms=latency_ms, outcome=outcome))
    finally:
        # Do not wait for stragglers: a hung provider must not block the
        # caller past its timeout.
        pool.shutdown(wait=False)
    return reports
