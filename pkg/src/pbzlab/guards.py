"""Sweep guards and the ``PBZLAB_GUARD`` override.

``PBZLAB_GUARD`` accepts ``off`` (disable every guard), a bare integer
(sets the congruence size guard) or comma-separated ``name=value`` pairs
with names ``con``, ``sub`` and ``sat``.
"""

from __future__ import annotations

import os

DEFAULTS = {"con": 24, "sub": 16, "sat": 10**7}


def _parse(raw: str) -> dict[str, float]:
    raw = raw.strip().lower()
    if not raw:
        return {}
    if raw in ("off", "none", "inf"):
        return {k: float("inf") for k in DEFAULTS}
    if raw.isdigit():
        return {"con": int(raw)}
    out: dict[str, float] = {}
    for item in raw.split(","):
        name, _, value = item.partition("=")
        name = name.strip()
        if name not in DEFAULTS or not value.strip().isdigit():
            raise ValueError(f"bad PBZLAB_GUARD entry {item!r}")
        out[name] = int(value)
    return out


def guard(name: str, override: int | None = None) -> float:
    """The active limit for guard ``name``; an explicit ``override`` wins."""
    if override is not None:
        return override
    return _parse(os.environ.get("PBZLAB_GUARD", "")).get(name, DEFAULTS[name])
