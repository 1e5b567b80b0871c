"""Runtime knobs read from the environment.

``DUORAT_GUARD``  overrides the per-axis enumeration span limit (default 10**7).
``DUORAT_ACCEL``  selects the kernel backend: ``numba`` (default when numba
imports) or ``numpy``.
"""

import os

from .errors import RangeTooLarge

DEFAULT_GUARD = 10**7
# pair enumerations (x, y) may cost this many times the span guard
WORK_FACTOR = 100


def guard() -> int:
    raw = os.environ.get("DUORAT_GUARD")
    if raw is None or raw == "":
        return DEFAULT_GUARD
    return int(raw)


def check_span(span: int, what: str = "range") -> None:
    limit = guard()
    if span > limit:
        raise RangeTooLarge(f"{what} spans {span} values; guard is {limit} (set DUORAT_GUARD)")


def check_work(work: int, what: str = "enumeration") -> None:
    limit = guard() * WORK_FACTOR
    if work > limit:
        raise RangeTooLarge(f"{what} needs {work} steps; limit is {limit} (set DUORAT_GUARD)")


def accel_backend() -> str:
    choice = os.environ.get("DUORAT_ACCEL", "numba").strip().lower()
    if choice not in ("numba", "numpy"):
        raise ValueError(f"DUORAT_ACCEL must be 'numba' or 'numpy', got {choice!r}")
    return choice
