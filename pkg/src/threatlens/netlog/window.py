"""Rolling window of captured HTTP transactions and its anomaly analysis.

One writer (ingest) and one periodic reader (the sweeper) share a window;
analysis works on a snapshot taken under the window lock, so ingestion is
never blocked for longer than one list copy.
"""

from __future__ import annotations

import bisect
import enum
import threading
from dataclasses import dataclass, field

from ..urls.parsing import MalformedUrl, parse_url
from .categories import ERROR_CATEGORIES, StatusCategory, categorize_status

INVALID_HOST = "invalid"


class InvalidEntry(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LogEntry:
    timestamp_ms: int
    method: str = field(compare=False)
    url: str = field(compare=False)
    status_code: int = field(compare=False)
    origin_tab: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.timestamp_ms <= 0:
            raise InvalidEntry(f"timestamp {self.timestamp_ms} must be > 0")
        if not 100 <= self.status_code <= 599:
            raise InvalidEntry(
                f"status code {self.status_code} outside 100-599")


class ThreatLevel(enum.Enum):
    NONE = "none"
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


@dataclass(frozen=True)
class ThreatThresholds:
    medium_ratio: float = 0.1
    high_ratio: float = 0.3
    high_host_errors: int = 5


@dataclass(frozen=True)
class AnomalyReport:
    window_start_ms: int
    window_end_ms: int
    counts: dict[StatusCategory, int]
    total: int
    error_ratio: float
    threat_level: ThreatLevel
    offending_hosts: tuple[tuple[str, int], ...]

    def as_dict(self) -> dict:
        return {
            "window_start_ms": self.window_start_ms,
            "window_end_ms": self.window_end_ms,
            "counts": {cat.value: n for cat, n in self.counts.items()},
            "total": self.total,
            "error_ratio": self.error_ratio,
            "threat_level": self.threat_level.value,
            "offending_hosts": [
                {"host": host, "errors": count}
                for host, count in self.offending_hosts
            ],
        }


class LogWindow:
    """Time-ordered, capacity- and span-bounded entry buffer."""

    def __init__(self, capacity: int = 5000, window_span_s: float = 300.0):
        if capacity < 1 or window_span_s <= 0:
            raise ValueError("capacity >= 1 and window_span_s > 0 required")
        self.capacity = capacity
        self.window_span_s = window_span_s
        self._entries: list[LogEntry] = []
        self._lock = threading.Lock()
        self._sweeper_attached = False

    def ingest(self, entry: LogEntry) -> "LogWindow":
        with self._lock:
            bisect.insort(self._entries, entry)
            cutoff = self._entries[-1].timestamp_ms - int(self.window_span_s * 1000)
            first_kept = bisect.bisect_left(
                self._entries, cutoff, key=lambda e: e.timestamp_ms)
            if first_kept:
                del self._entries[:first_kept]
            if len(self._entries) > self.capacity:
                del self._entries[: len(self._entries) - self.capacity]
        return self

    def snapshot(self) -> list[LogEntry]:
        with self._lock:
            return list(self._entries)

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)


def ingest_entry(window: LogWindow, entry: LogEntry) -> LogWindow:
    return window.ingest(entry)


def _entry_host(url: str) -> str:
    try:
        return parse_url(url).host
    except MalformedUrl:
        return INVALID_HOST


def _threat_level(total: int, error_ratio: float, max_host_errors: int,
                  thresholds: ThreatThresholds) -> ThreatLevel:
    if total == 0 or error_ratio == 0.0:
        return ThreatLevel.NONE
    if error_ratio >= thresholds.high_ratio or \
            max_host_errors >= thresholds.high_host_errors:
        return ThreatLevel.HIGH
    if error_ratio >= thresholds.medium_ratio:
        return ThreatLevel.MEDIUM
    return ThreatLevel.LOW


def analyze_window(window: LogWindow, now_ms: int,
                   thresholds: ThreatThresholds | None = None) -> AnomalyReport:
    """Categorize entries within [now - span, now] and grade the result."""
    thresholds = thresholds or ThreatThresholds()
    span_ms = int(window.window_span_s * 1000)
    start_ms = now_ms - span_ms
    counts = {category: 0 for category in StatusCategory}
    host_errors: dict[str, int] = {}
    for entry in window.snapshot():
        if not start_ms <= entry.timestamp_ms <= now_ms:
            continue
        category = categorize_status(entry.status_code)
        counts[category] += 1
        if category in ERROR_CATEGORIES:
            host = _entry_host(entry.url)
            host_errors[host] = host_errors.get(host, 0) + 1
    total = sum(counts.values())
    errors = sum(counts[c] for c in ERROR_CATEGORIES)
    error_ratio = errors / total if total else 0.0
    offenders = tuple(sorted(host_errors.items(), key=lambda kv: (-kv[1], kv[0])))
    max_host_errors = offenders[0][1] if offenders else 0
    return AnomalyReport(
        window_start_ms=start_ms,
        window_end_ms=now_ms,
        counts=counts,
        total=total,
        error_ratio=error_ratio,
        threat_level=_threat_level(total, error_ratio, max_host_errors, thresholds),
        offending_hosts=offenders,
    )
