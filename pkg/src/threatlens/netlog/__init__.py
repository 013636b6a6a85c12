from .categories import ERROR_CATEGORIES, OutOfRangeStatus, StatusCategory, categorize_status
from .sweeper import AlreadyRunning, SimulatedClock, SweeperHandle, SystemClock, run_sweeper
from .window import (
    INVALID_HOST,
    AnomalyReport,
    InvalidEntry,
    LogEntry,
    LogWindow,
    ThreatLevel,
    ThreatThresholds,
    analyze_window,
    ingest_entry,
)

__all__ = [
    "ERROR_CATEGORIES",
    "OutOfRangeStatus",
    "StatusCategory",
    "categorize_status",
    "AlreadyRunning",
    "SimulatedClock",
    "SweeperHandle",
    "SystemClock",
    "run_sweeper",
    "INVALID_HOST",
    "AnomalyReport",
    "InvalidEntry",
    "LogEntry",
    "LogWindow",
    "ThreatLevel",
    "ThreatThresholds",
    "analyze_window",
    "ingest_entry",
]
