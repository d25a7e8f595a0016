"""Benchmark scenario records and suite loading."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

CATEGORIES = ("absolute-qualified", "negation", "numeric-categorical")

DEFAULT_SUITE_NAME = "suite_v1.jsonl"


@dataclass(frozen=True)
class Scenario:
    """One benchmark input with its expected-conflict labels.

    Keyword lists drive scoring: a fact or pair side "matches" when every
    keyword occurs in it (case-insensitive, punctuation stripped; multi-word
    keywords match as phrases). Control scenarios carry no expected conflict
    and are excluded from the headline means.
    """

    id: str
    text: str
    category: str | None = None
    expected_a: tuple[str, ...] = ()
    expected_b: tuple[str, ...] = ()
    resolution_keywords: tuple[str, ...] = ()
    control: bool = False

    def __post_init__(self) -> None:
        if self.category is not None and self.category not in CATEGORIES:
            raise ValueError(f"unknown category {self.category!r} in scenario {self.id}")
        if self.category is not None and not (self.expected_a and self.expected_b):
            raise ValueError(f"scenario {self.id} has a category but empty keyword lists")


def scenario_from_record(record: dict) -> Scenario:
    return Scenario(
        id=record["id"],
        text=record["text"],
        category=record.get("category"),
        expected_a=tuple(record.get("expected_a", ())),
        expected_b=tuple(record.get("expected_b", ())),
        resolution_keywords=tuple(record.get("resolution_keywords", ())),
        control=bool(record.get("control", False)),
    )


def load_suite(path: str | Path) -> list[Scenario]:
    """Read a line-delimited suite file (one JSON record per line)."""
    scenarios = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        try:
            scenarios.append(scenario_from_record(json.loads(line)))
        except (json.JSONDecodeError, KeyError) as exc:
            raise ValueError(f"{path}:{lineno}: bad scenario record: {exc}") from exc
    if not scenarios:
        raise ValueError(f"{path}: suite is empty")
    return scenarios


def default_suite_path() -> Path:
    return Path(str(resources.files("cogbasic") / "data" / DEFAULT_SUITE_NAME))


def load_default_suite() -> list[Scenario]:
    return load_suite(default_suite_path())
