"""Sentence segmentation and declarative/procedural classification."""

from __future__ import annotations

import re

from . import wordlists

_SENTENCE_END_RE = re.compile(r"([.!?]+)(\s+|$)")
_WORD_BEFORE_RE = re.compile(r"([A-Za-z][A-Za-z.]*)$")
_TOKEN_RE = re.compile(r"[a-z0-9']+")
_STEP_N_RE = re.compile(r"\bstep\s+\d+\b")
_IF_COMMA_RE = re.compile(r"^if\b[^,]*,\s*(?:please\s+)?([a-z]+)")
_IF_THEN_RE = re.compile(r"^if\b.*?\bthen\s+(?:please\s+)?([a-z]+)")

_ORDINAL_MARKERS = frozenset(
    {"first", "second", "third", "then", "next", "finally", "afterwards", "lastly"}
)
_MODALS = frozenset({"must", "should"})


def segment_sentences(text: str) -> list[str]:
    """Split prose on sentence-final punctuation, keeping the punctuation.

    A short abbreviation list ("e.g.", "Dr.", ...) suppresses false splits.
    """
    sentences: list[str] = []
    abbrevs = wordlists.abbreviations()
    start = 0
    for match in _SENTENCE_END_RE.finditer(text):
        if match.group(1).startswith("."):
            before = _WORD_BEFORE_RE.search(text, start, match.start())
            if before and before.group(1).lower().rstrip(".") in abbrevs:
                continue
        sentences.append(text[start : match.end(1)].strip())
        start = match.end()
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return [s for s in sentences if s]


def classify_sentence(sentence: str) -> str:
    """Return ``"procedural"`` or ``"declarative"``.

    Procedural markers: a leading imperative verb, a leading ordinal/step
    marker, a conditional-action form, or a modal obligation.
    """
    lowered = sentence.lower()
    tokens = _TOKEN_RE.findall(lowered)
    if not tokens:
        return "declarative"
    verbs = wordlists.imperative_verbs()

    if tokens[0] in verbs:
        return "procedural"
    if tokens[0] in _ORDINAL_MARKERS or _STEP_N_RE.search(lowered):
        return "procedural"
    for pattern in (_IF_COMMA_RE, _IF_THEN_RE):
        m = pattern.match(lowered)
        if m and m.group(1) in verbs:
            return "procedural"
    for i, tok in enumerate(tokens):
        if tok in _MODALS and i + 1 < len(tokens):
            return "procedural"
    return "declarative"


def extract_declarative(text: str) -> list[str]:
    return [s for s in segment_sentences(text) if classify_sentence(s) == "declarative"]


def extract_procedural(text: str) -> list[str]:
    return [s for s in segment_sentences(text) if classify_sentence(s) == "procedural"]
