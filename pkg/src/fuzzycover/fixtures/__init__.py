"""Bundled example documents used by the demos, the test suite, and `check`."""

from __future__ import annotations

from importlib import resources


def fixture_names() -> list[str]:
    root = resources.files(__package__)
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_text(name: str) -> str:
    if not name.endswith(".json"):
        name += ".json"
    return (resources.files(__package__) / name).read_text(encoding="utf-8")
