from .app import AppState, create_app
from .bundle import (
    FORMAT_VERSION,
    CorruptBundle,
    IoFailure,
    ModelBundle,
    UnsupportedFormatVersion,
    load_model_bundle,
    make_bundle,
    save_model_bundle,
)
from .config import ServiceConfig, load_config

__all__ = [
    "AppState",
    "create_app",
    "FORMAT_VERSION",
    "CorruptBundle",
    "IoFailure",
    "ModelBundle",
    "UnsupportedFormatVersion",
    "load_model_bundle",
    "make_bundle",
    "save_model_bundle",
    "ServiceConfig",
    "load_config",
]
