"""Bundled case-study tables, addressable by short name."""

from __future__ import annotations

from importlib import resources

from .errors import DomainError
from .scenario import table_kind

FIXTURE_NAMES = ("h2_sweep", "n2_spa", "n2_booster", "jellium")


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        known = ", ".join(FIXTURE_NAMES)
        raise DomainError(f"unknown fixture {name!r}; bundled fixtures: {known}")
    path = resources.files("gspgate").joinpath("fixtures", f"{name}.csv")
    return path.read_text(encoding="utf-8")


def fixture_kind(name: str) -> str:
    return table_kind(fixture_text(name))


def list_fixtures() -> list[tuple[str, str]]:
    """(name, kind) for every bundled fixture."""
    return [(name, fixture_kind(name)) for name in FIXTURE_NAMES]
