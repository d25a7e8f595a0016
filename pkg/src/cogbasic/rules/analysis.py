"""Per-sentence feature extraction feeding the conflict rules.

Everything here is closed-vocabulary and regex-based on purpose: two runs on
the same sentence always produce the same analysis, which is what makes the
conflict detector testable against a brute-force reference.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import wordlists

_TOKEN_RE = re.compile(r"[a-z0-9:']+")
_TIME_RE = re.compile(r"^(\d{1,2}):(\d{2})(am|pm)?$")
_NUM_RE = re.compile(r"^(\d+)(am|pm)?$")

_ARTICLES = frozenset({"the", "a", "an"})
_COPULAS = frozenset({"is", "are", "was", "were"})

# Irregular n't contractions; everything else just drops the suffix.
_CONTRACTION_STEMS = {"won't": "will", "can't": "can", "shan't": "shall", "ain't": "is"}


@dataclass(frozen=True)
class FactAnalysis:
    """Features of one declarative sentence."""

    subject_key: tuple[str, ...]
    polarity: str  # "positive" | "negative"
    quantifier: str  # "absolute-always" | "absolute-never" | "qualified" | "none"
    value_slot: str | None  # surface token, e.g. "9", "9am", "red"
    raw: str


def _expand_tokens(sentence: str) -> list[str]:
    """Lowercased tokens with n't contractions expanded to stem + "not"."""
    tokens: list[str] = []
    for tok in _TOKEN_RE.findall(sentence.lower()):
        tok = tok.strip(":'")
        if not tok:
            continue
        if tok == "cannot":
            tokens.extend(["can", "not"])
        elif tok.endswith("n't"):
            tokens.extend([_CONTRACTION_STEMS.get(tok, tok[:-3]), "not"])
        else:
            tokens.append(tok)
    return tokens


def normalize_value(token: str) -> str:
    """Comparison key for a value token.

    Clock-like tokens ("9", "9am", "09:00") collapse onto minutes past
    midnight so differently written equal times do not count as a
    disagreement; other numbers and category words keep their own namespace.
    """
    m = _TIME_RE.match(token)
    if m:
        hour, minute, suffix = int(m.group(1)), int(m.group(2)), m.group(3)
        return f"t:{_to_minutes(hour, minute, suffix)}"
    m = _NUM_RE.match(token)
    if m:
        number, suffix = int(m.group(1)), m.group(2)
        if suffix and 1 <= number <= 12:
            return f"t:{_to_minutes(number, 0, suffix)}"
        if not suffix and 0 <= number <= 23:
            return f"t:{number * 60}"
        return f"num:{number}"
    return f"cat:{token}"


def _to_minutes(hour: int, minute: int, suffix: str | None) -> int:
    if suffix == "am" and hour == 12:
        hour = 0
    elif suffix == "pm" and hour != 12:
        hour += 12
    return hour * 60 + minute


def _is_numeric_or_time(token: str) -> bool:
    return bool(_TIME_RE.match(token) or _NUM_RE.match(token))


def analyze_fact(sentence: str) -> FactAnalysis:
    """Extract polarity, quantifier, value slot, and the subject key.

    The subject key is the ordered content-token sequence left after
    dropping articles, negation markers, quantifiers, and the chosen value
    token; two facts are about the same thing iff their keys are equal.
    """
    tokens = _expand_tokens(sentence)
    negations = wordlists.negation_markers()
    absolutes = wordlists.absolute_quantifiers()
    qualifieds = wordlists.qualified_quantifiers()
    categories = wordlists.category_values()

    polarity = "negative" if any(t in negations for t in tokens) else "positive"

    quantifier = "none"
    for tok in tokens:
        if tok == "always":
            quantifier = "absolute-always"
            break
        if tok == "never":
            quantifier = "absolute-never"
            break
        if tok in qualifieds:
            quantifier = "qualified"
            break

    value_slot = None
    value_index = None
    for i in range(len(tokens) - 1, -1, -1):
        if _is_numeric_or_time(tokens[i]):
            value_slot = tokens[i]
            value_index = i
            break
    if value_slot is None and any(t in _COPULAS for t in tokens):
        content = [
            (i, t)
            for i, t in enumerate(tokens)
            if t not in _ARTICLES and t not in negations and t not in absolutes and t not in qualifieds
        ]
        if content:
            last_index, last_token = content[-1]
            if last_token in categories:
                value_slot = last_token
                value_index = last_index

    subject = []
    for i, tok in enumerate(tokens):
        if i == value_index:
            continue
        if tok in _ARTICLES or tok in negations or tok in absolutes or tok in qualifieds:
            continue
        subject.append(tok)

    return FactAnalysis(
        subject_key=tuple(subject),
        polarity=polarity,
        quantifier=quantifier,
        value_slot=value_slot,
        raw=sentence.strip(),
    )
