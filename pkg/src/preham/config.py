"""Process-wide tuning knobs.

Two knobs exist: the fraction-size threshold above which full polynomial
gcd reduction runs (0 means always), and an optional wall-clock deadline
that long-running procedures poll via :func:`checkpoint`.  Both are set
once by the CLI (or a test) before computing; values are never mutated
mid-operation.
"""
from __future__ import annotations

import time
from contextlib import contextmanager

from .errors import TimeLimitExceeded

_gcd_threshold: int = 0
_deadline: float | None = None


def gcd_threshold() -> int:
    return _gcd_threshold


def set_gcd_threshold(n: int) -> None:
    global _gcd_threshold
    if n < 0:
        raise ValueError("threshold must be >= 0")
    _gcd_threshold = n


def set_time_limit(seconds: float | None) -> None:
    global _deadline
    _deadline = None if seconds is None else time.monotonic() + seconds


def checkpoint() -> None:
    """Raise TimeLimitExceeded if the configured deadline has passed."""
    if _deadline is not None and time.monotonic() > _deadline:
        raise TimeLimitExceeded


@contextmanager
def limits(gcd_threshold: int | None = None, time_limit: float | None = None):
    """Temporarily override the knobs (used by tests and the CLI)."""
    global _gcd_threshold, _deadline
    old = (_gcd_threshold, _deadline)
    try:
        if gcd_threshold is not None:
            set_gcd_threshold(gcd_threshold)
        if time_limit is not None:
            set_time_limit(time_limit)
        yield
    finally:
        _gcd_threshold, _deadline = old
