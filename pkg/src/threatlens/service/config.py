"""Service configuration: YAML file with environment overrides.

Environment variables THREATLENS_PORT and THREATLENS_BUNDLE override the
listen port and bundle path regardless of the file contents.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import yaml

from ..netlog.window import ThreatThresholds

DEFAULT_PORT = 8974


@dataclass(frozen=True)
class ProviderConfig:
    enabled: bool = False
    timeout_ms: float = 1500.0
    stub_seed: int = 0
    ids: tuple[str, ...] = ("whois-stub", "search-stub", "page-stub")


@dataclass(frozen=True)
class LogWindowConfig:
    capacity: int = 5000
    span_seconds: float = 300.0


@dataclass(frozen=True)
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = DEFAULT_PORT
    bundle_path: str = "bundle.json"
    decision_threshold: float = 0.5
    cors_origins: tuple[str, ...] = ()
    providers: ProviderConfig = field(default_factory=ProviderConfig)
    log_window: LogWindowConfig = field(default_factory=LogWindowConfig)
    thresholds: ThreatThresholds = field(default_factory=ThreatThresholds)


def _env_overrides(host, port, bundle_path):
    port_env = os.environ.get("THREATLENS_PORT")
    if port_env:
        port = int(port_env)
    bundle_env = os.environ.get("THREATLENS_BUNDLE")
    if bundle_env:
        bundle_path = bundle_env
    return host, port, bundle_path


def load_config(path=None) -> ServiceConfig:
    data = {}
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}
    listen = data.get("listen", {})
    providers = data.get("providers", {})
    log_window = data.get("log_window", {})
    thresholds = data.get("thresholds", {})
    host, port, bundle_path = _env_overrides(
        listen.get("host", "127.0.0.1"),
        int(listen.get("port", DEFAULT_PORT)),
        data.get("bundle_path", "bundle.json"),
    )
    return ServiceConfig(
        host=host,
        port=port,
        bundle_path=bundle_path,
        decision_threshold=float(data.get("decision_threshold", 0.5)),
        cors_origins=tuple(data.get("cors_origins", ())),
        providers=ProviderConfig(
            enabled=bool(providers.get("enabled", False)),
            timeout_ms=float(providers.get("timeout_ms", 1500.0)),
            stub_seed=int(providers.get("stub_seed", 0)),
            ids=tuple(providers.get("ids",
                                    ("whois-stub", "search-stub", "page-stub"))),
        ),
        log_window=LogWindowConfig(
            capacity=int(log_window.get("capacity", 5000)),
            span_seconds=float(log_window.get("span_seconds", 300.0)),
        ),
        thresholds=ThreatThresholds(
            medium_ratio=float(thresholds.get("medium_ratio", 0.1)),
            high_ratio=float(thresholds.get("high_ratio", 0.3)),
            high_host_errors=int(thresholds.get("high_host_errors", 5)),
        ),
    )
