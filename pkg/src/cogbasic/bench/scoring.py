"""The three binary scores per scenario: extraction, detection, resolution.

Scoring looks at the whole run, not only final memory: resolving rewrites
declarative entries and clears the conflict list, so both the extraction and
the detection checks run against the peak content seen anywhere in the trace.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..interpreter import RunResult
from ..llm.inmodel import ModelTrace
from ..memory import ConflictPair, MemoryState, normalize_ws
from .scenarios import Scenario

_NON_WORD_RE = re.compile(r"[^a-z0-9]+")


def _normalize(text: str) -> str:
    return _NON_WORD_RE.sub(" ", text.lower()).strip()


def matches_keywords(text: str, keywords: tuple[str, ...]) -> bool:
    """All keywords present as words/phrases, case- and punctuation-blind."""
    if not keywords:
        return False
    haystack = f" {_normalize(text)} "
    return all(f" {_normalize(kw)} " in haystack for kw in keywords)


@dataclass
class RunView:
    """What scoring needs from a run: final state plus peak list contents."""

    final: MemoryState
    declarative_seen: list[str] = field(default_factory=list)
    conflicts_seen: list[ConflictPair] = field(default_factory=list)


def _collect(view: RunView, memory: MemoryState, seen_facts: set, seen_pairs: set) -> None:
    for fact in memory.declarative:
        key = normalize_ws(fact)
        if key and key not in seen_facts:
            seen_facts.add(key)
            view.declarative_seen.append(fact)
    for pair in memory.conflicts:
        key = (normalize_ws(pair.a), normalize_ws(pair.b))
        if key not in seen_pairs:
            seen_pairs.add(key)
            view.conflicts_seen.append(pair)


def view_from_run(result: RunResult) -> RunView:
    view = RunView(final=result.final_memory)
    seen_facts: set = set()
    seen_pairs: set = set()
    for entry in result.trace:
        _collect(view, entry.memory, seen_facts, seen_pairs)
    _collect(view, result.final_memory, seen_facts, seen_pairs)
    return view


def view_from_model_trace(trace: ModelTrace) -> RunView:
    view = RunView(final=trace.final_memory)
    seen_facts: set = set()
    seen_pairs: set = set()
    for entry in trace.entries:
        if entry.memory is not None:
            _collect(view, entry.memory, seen_facts, seen_pairs)
    _collect(view, trace.final_memory, seen_facts, seen_pairs)
    return view


@dataclass(frozen=True)
class ScoreCard:
    scenario_id: str
    d: int
    c: int
    r: int
    full_chain: int
    notes: str = ""


def _pair_matches(pair: ConflictPair, a_kw, b_kw) -> bool:
    straight = matches_keywords(pair.a, a_kw) and matches_keywords(pair.b, b_kw)
    flipped = matches_keywords(pair.a, b_kw) and matches_keywords(pair.b, a_kw)
    return straight or flipped


def score_run(scenario: Scenario, view: RunView) -> ScoreCard:
    """Three binary scores; full-chain is their conjunction."""
    if scenario.control:
        return _score_control(scenario, view)

    d = int(
        any(matches_keywords(f, scenario.expected_a) for f in view.declarative_seen)
        and any(matches_keywords(f, scenario.expected_b) for f in view.declarative_seen)
    )
    c = int(
        any(_pair_matches(p, scenario.expected_a, scenario.expected_b) for p in view.conflicts_seen)
    )
    r = int(
        bool(view.final.resolution)
        and not view.final.conflicts
        and all(
            matches_keywords(view.final.resolution, (kw,))
            for kw in scenario.resolution_keywords
        )
    )
    full = int(d and c and r)
    return ScoreCard(scenario.id, d, c, r, full)


def _score_control(scenario: Scenario, view: RunView) -> ScoreCard:
    # No-conflict rubric: detection is right when nothing was flagged,
    # resolution is right when it never triggered.
    d = 1
    c = int(not view.conflicts_seen)
    r = int(not view.final.resolution and not view.final.conflicts)
    return ScoreCard(scenario.id, d, c, r, int(d and c and r), notes="control")
