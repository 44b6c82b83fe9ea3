"""Runtime caps, overridable through environment variables.

COMMVAR_MAX_RANK      cap on the Cartan rank accepted by class enumeration (default 12)
COMMVAR_MAX_N         cap on the number of torus factors n (default 16)
COMMVAR_MAX_TABLE_M   cap on m for symmetric-group character tables (default 10)

The caps guard against accidentally requesting partition-pair enumerations or
dense polynomial powers far beyond what exact arithmetic handles comfortably;
raise them explicitly when a larger computation is intended.
"""

from __future__ import annotations

import os

DEFAULT_MAX_RANK = 12
DEFAULT_MAX_N = 16
DEFAULT_MAX_TABLE_M = 10


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def max_rank() -> int:
    return _env_int("COMMVAR_MAX_RANK", DEFAULT_MAX_RANK)


def max_n() -> int:
    return _env_int("COMMVAR_MAX_N", DEFAULT_MAX_N)


def max_table_m() -> int:
    return _env_int("COMMVAR_MAX_TABLE_M", DEFAULT_MAX_TABLE_M)
