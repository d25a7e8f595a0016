"""Deterministic provider backed by the lexicon rules."""

from __future__ import annotations

from ..memory import ConflictPair
from . import conflicts, text
from .base import Resolution


class RuleBasedProvider:
    """Fully offline provider; stateless and safe to share between runs."""

    label = "rules"

    def extract_declarative(self, source: str) -> list[str]:
        return text.extract_declarative(source)

    def extract_procedural(self, source: str) -> list[str]:
        return text.extract_procedural(source)

    def detect_conflicts(self, facts: list[str]) -> list[ConflictPair]:
        return conflicts.detect_conflicts(facts)

    def resolve_conflicts(self, pairs: list[ConflictPair]) -> Resolution:
        reconciled, summary = conflicts.resolve_conflicts(pairs)
        return Resolution(tuple(reconciled), summary)
