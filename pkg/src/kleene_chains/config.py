"""Runtime limits shared by the oracle and the command line."""

from __future__ import annotations

import os
from dataclasses import dataclass

WORKERS_ENV = "KLEENE_ORACLE_WORKERS"


@dataclass(frozen=True)
class Limits:
    # n=9 is already 28,146,690 naive evaluations
    max_naive_n: int = 9
    # memoized path enumerates C_n trees; C_14 = 742,900
    max_oracle_n: int = 14
    max_horizon: int = 5000
    max_truthtable_n: int = 5


DEFAULT_LIMITS = Limits()


def oracle_workers() -> int:
    """Number of worker processes for oracle runs, read from ``KLEENE_ORACLE_WORKERS``."""
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        workers = int(raw)
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return max(1, workers)
