"""Periodic window analysis on an injectable clock.

The sweeper emits one report per period tick to a sink callable. The
clock abstraction keeps production on wall time while tests drive a
simulated clock deterministically.
"""

from __future__ import annotations

import threading
import time

from .window import LogWindow, ThreatThresholds, analyze_window


class AlreadyRunning(RuntimeError):
    pass


class SystemClock:
    def now_ms(self) -> int:
        return int(time.time() * 1000)

    def wait_until(self, deadline_ms: int, stop: threading.Event) -> bool:
        """Sleep until the deadline; False when stopped first."""
        while True:
            remaining = (deadline_ms - self.now_ms()) / 1000.0
            if remaining <= 0:
                return True
            if stop.wait(timeout=min(remaining, 0.5)):
                return False


class SimulatedClock:
    """Virtual clock that jumps to each requested deadline instantly and
    refuses deadlines past its horizon."""

    def __init__(self, start_ms: int = 0, horizon_ms: int | None = None):
        self._now = start_ms
        self.horizon_ms = horizon_ms

    def now_ms(self) -> int:
        return self._now

    def wait_until(self, deadline_ms: int, stop: threading.Event) -> bool:
        if stop.is_set():
            return False
        if self.horizon_ms is not None and deadline_ms > self.horizon_ms:
            self._now = self.horizon_ms
            return False
        self._now = max(self._now, deadline_ms)
        return True


class SweeperHandle:
    def __init__(self, window: LogWindow, thread: threading.Thread,
                 stop: threading.Event):
        self._window = window
        self._thread = thread
        self._stop = stop

    def stop(self, timeout: float = 5.0) -> None:
        self._stop.set()
        self._thread.join(timeout=timeout)
        with self._window._lock:
            self._window._sweeper_attached = False

    def join(self, timeout: float = 5.0) -> None:
        self._thread.join(timeout=timeout)
        with self._window._lock:
            self._window._sweeper_attached = False

    @property
    def running(self) -> bool:
        return self._thread.is_alive()


def run_sweeper(window: LogWindow, period_s: float = 30.0, sink=None,
                clock=None, thresholds: ThreatThresholds | None = None) -> SweeperHandle:
    """Start the periodic analyzer; the first report fires one full period
    after start. Only one sweeper may run per window."""
    if period_s <= 0:
        raise ValueError("period_s must be > 0")
    if sink is None:
        raise ValueError("sink is required")
    clock = clock or SystemClock()
    with window._lock:
        if window._sweeper_attached:
            raise AlreadyRunning("a sweeper is already attached to this window")
        window._sweeper_attached = True
    stop = threading.Event()
    period_ms = int(period_s * 1000)

    def loop():
        start = clock.now_ms()
        tick = 1
        while not stop.is_set():
            if not clock.wait_until(start + tick * period_ms, stop):
                break
            sink(analyze_window(window, now_ms=clock.now_ms(),
                                thresholds=thresholds))
            tick += 1

    thread = threading.Thread(target=loop, name="netlog-sweeper", daemon=True)
    thread.start()
    return SweeperHandle(window, thread, stop)
