"""Shipped example inputs.

``path(name)`` resolves a fixture file, honoring the ARRPI_FIXTURES
environment variable so a user corpus can shadow the packaged one.
"""

import os
from pathlib import Path

_HERE = Path(__file__).resolve().parent


def fixture_dir() -> Path:
    env = os.environ.get("ARRPI_FIXTURES")
    return Path(env) if env else _HERE


def path(name: str) -> Path:
    p = fixture_dir() / name
    if not p.exists() and fixture_dir() != _HERE:
        p = _HERE / name
    return p
