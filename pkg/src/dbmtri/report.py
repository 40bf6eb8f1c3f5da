"""CSV and JSON result files with enough provenance to reproduce a run.

CSV layout: one comment line (config hash, seed, package version), a
``t,value,stderr,series`` header, then one row per curve point.  Nothing
in the file depends on wall time, so reruns with the same seed produce
byte-identical output; timing lives in the JSON summary only.
"""

from __future__ import annotations

import hashlib
import json
import subprocess
from pathlib import Path


def _version() -> str:
    from . import __version__

    return __version__


def config_hash(config: dict) -> str:
    """Short stable digest of the experiment configuration."""
    payload = json.dumps(config, sort_keys=True, default=str).encode()
    return hashlib.sha256(payload).hexdigest()[:12]


def git_version() -> str:
    """Short commit hash of the working tree, or the package version."""
    try:
        out = subprocess.run(
            ["git", "rev-parse", "--short", "HEAD"],
            capture_output=True,
            text=True,
            timeout=5,
        )
        if out.returncode == 0:
            return out.stdout.strip()
    except OSError:
        pass
    return _version()


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_csv(path, curves, config: dict, seed) -> None:
    lines = [f"# config={config_hash(config)} seed={seed} version={_version()}"]
    lines.append("t,value,stderr,series")
    for c in curves:
        n = len(c.t)
        for i in range(n):
            se = "" if c.se is None else _fmt(c.se[i])
            lines.append(f"{_fmt(c.t[i])},{_fmt(c.value[i])},{se},{c.series}")
    Path(path).write_text("\n".join(lines) + "\n")


def write_summary(path, result, seed, wall_time_s: float) -> None:
    payload = {
        "config": result.config,
        "seed": seed,
        "git_version": git_version(),
        "wall_time_s": round(wall_time_s, 3),
        "checks": [{"name": c.name, "pass": c.passed, "detail": c.detail} for c in result.checks],
        "metrics": result.metrics,
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")
