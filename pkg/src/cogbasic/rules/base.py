"""Provider interface for the cognitive operations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, runtime_checkable

from ..memory import ConflictPair


@dataclass(frozen=True)
class Resolution:
    """One merged statement per input pair, plus the combined summary."""

    reconciled: tuple[tuple[ConflictPair, str], ...]
    summary: str


@runtime_checkable
class CognitiveOpsProvider(Protocol):
    """The four operations a backend must supply to the interpreter."""

    def extract_declarative(self, text: str) -> list[str]: ...

    def extract_procedural(self, text: str) -> list[str]: ...

    def detect_conflicts(self, facts: list[str]) -> list[ConflictPair]: ...

    def resolve_conflicts(self, pairs: list[ConflictPair]) -> Resolution: ...
