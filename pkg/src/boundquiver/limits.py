"""Search budgets.  ``BQ_MAX_COSETS`` and ``BQ_SUBSET_BOUND`` override the defaults."""
from __future__ import annotations

import os

MAX_COSETS = 10_000
SUBSET_BOUND = 16
TIETZE_BUDGET = 10_000
# largest |V_S| enumerated over a prime field
VECTOR_CAP = 100_000


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{name} must be positive")
    return value


def max_cosets() -> int:
    return _env_int("BQ_MAX_COSETS", MAX_COSETS)


def subset_bound() -> int:
    return _env_int("BQ_SUBSET_BOUND", SUBSET_BOUND)


def tietze_budget() -> int:
    return TIETZE_BUDGET


def vector_cap() -> int:
    return VECTOR_CAP
