"""Bundled example scores in the native text format.

Set the ``VOICELEADING_FIXTURES`` environment variable to serve fixtures
from a different directory.
"""

from __future__ import annotations

import os
from pathlib import Path

from ..errors import FixtureError

ENV_VAR = "VOICELEADING_FIXTURES"

_SUFFIX = ".vl"


def fixtures_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent


def list_fixtures() -> list[str]:
    directory = fixtures_dir()
    if not directory.is_dir():
        return []
    return sorted(path.stem for path in directory.glob(f"*{_SUFFIX}"))


def fixture_path(name: str) -> Path:
    stem = name[: -len(_SUFFIX)] if name.endswith(_SUFFIX) else name
    path = fixtures_dir() / f"{stem}{_SUFFIX}"
    if not path.is_file():
        known = ", ".join(list_fixtures()) or "none"
        raise FixtureError(f"unknown fixture {name!r}; available: {known}")
    return path


def load_fixture(name: str) -> str:
    return fixture_path(name).read_text(encoding="utf-8")
