"""Single place that decides between the compiled and numpy kernel sets.

DBMTRI_FORCE_BACKEND=py skips the compiled module even when present (useful
for benchmarking the fallback); =cy turns a missing compiled module into a
hard error instead of a silent downgrade.
"""

from __future__ import annotations

import os

_FORCE = os.environ.get("DBMTRI_FORCE_BACKEND", "").strip().lower()
if _FORCE not in ("", "py", "cy"):
    raise RuntimeError(f"DBMTRI_FORCE_BACKEND must be 'py' or 'cy', got {_FORCE!r}")

cy = None
if _FORCE != "py":
    try:
        from . import _hh_cy as cy  # type: ignore[no-redef]
    except ImportError:
        if _FORCE == "cy":
            raise
        cy = None


def backend_name() -> str:
    return "cython" if cy is not None else "numpy"
