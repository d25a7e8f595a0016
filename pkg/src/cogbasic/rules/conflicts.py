"""Pairwise contradiction rules and template-based reconciliation.

Three rules fire between facts whose subject keys match exactly:

1. absolute-qualified: one side makes an absolute frequency claim and the
   other hedges it or claims the opposite absolute.
2. negation: the sides have opposite polarity and the same value-slot status.
3. numeric-categorical: same polarity but two different non-empty values.

When several rules fire on one pair, the lowest-numbered rule names the
category.
"""

from __future__ import annotations

import re

from ..errors import EmptyInputError
from ..memory import ConflictPair
from .analysis import FactAnalysis, analyze_fact, normalize_value

_QUANTIFIER_WORDS = ("always", "never", "sometimes", "usually", "often", "rarely")


def _rule_absolute_qualified(fa: FactAnalysis, fb: FactAnalysis) -> bool:
    qa, qb = fa.quantifier, fb.quantifier
    absolutes = ("absolute-always", "absolute-never")
    if qa in absolutes:
        return qb == "qualified" or (qb in absolutes and qb != qa)
    if qb in absolutes:
        return qa == "qualified"
    return False


def _rule_negation(fa: FactAnalysis, fb: FactAnalysis) -> bool:
    same_status = (fa.value_slot is None) == (fb.value_slot is None)
    return fa.polarity != fb.polarity and same_status


def _rule_numeric_categorical(fa: FactAnalysis, fb: FactAnalysis) -> bool:
    if fa.polarity != fb.polarity:
        return False
    if fa.value_slot is None or fb.value_slot is None:
        return False
    return normalize_value(fa.value_slot) != normalize_value(fb.value_slot)


def classify_pair(fa: FactAnalysis, fb: FactAnalysis) -> str | None:
    """Category for one analyzed pair, or None when no rule fires."""
    if fa.subject_key != fb.subject_key or not fa.subject_key:
        return None
    if _rule_absolute_qualified(fa, fb):
        return "absolute-qualified"
    if _rule_negation(fa, fb):
        return "negation"
    if _rule_numeric_categorical(fa, fb):
        return "numeric-categorical"
    return None


def detect_conflicts(facts: list[str]) -> list[ConflictPair]:
    """All contradictory pairs, ordered by the first member's position."""
    analyses = [analyze_fact(f) for f in facts]
    pairs: list[ConflictPair] = []
    for i in range(len(facts)):
        for j in range(i + 1, len(facts)):
            category = classify_pair(analyses[i], analyses[j])
            if category is not None:
                pairs.append(ConflictPair(facts[i].strip(), facts[j].strip(), category))
    return pairs


# --- resolution --------------------------------------------------------------


def _strip_final_punct(sentence: str) -> str:
    return sentence.rstrip().rstrip(".!?")


def _lower_first(sentence: str) -> str:
    return sentence[:1].lower() + sentence[1:] if sentence else sentence


def _remove_token(sentence: str, token: str) -> str:
    pattern = re.compile(rf"\s*\b{re.escape(token)}\b", re.IGNORECASE)
    matches = list(pattern.finditer(sentence))
    if not matches:
        return sentence
    last = matches[-1]
    return (sentence[: last.start()] + sentence[last.end() :]).strip()


def _replace_quantifier(sentence: str, replacement: str) -> str:
    for word in _QUANTIFIER_WORDS:
        pattern = re.compile(rf"\b{word}\b", re.IGNORECASE)
        if pattern.search(sentence):
            return pattern.sub(replacement, sentence, count=1)
    return f"{replacement} {_lower_first(sentence)}"


def merge_pair(pair: ConflictPair) -> str:
    """One hedged statement reconciling both sides of a pair."""
    fa, fb = analyze_fact(pair.a), analyze_fact(pair.b)
    if pair.category == "absolute-qualified":
        side = pair.a if fa.quantifier.startswith("absolute") else pair.b
        base = _strip_final_punct(_replace_quantifier(side, "usually"))
        return f"{base}, but sometimes not."
    if pair.category == "negation":
        positive = pair.a if fa.polarity == "positive" else pair.b
        clause = _lower_first(_strip_final_punct(positive))
        return f"It is uncertain whether {clause}."
    if pair.category == "numeric-categorical":
        v1 = fa.value_slot or ""
        v2 = fb.value_slot or ""
        base = _strip_final_punct(_remove_token(pair.a, v1)) if v1 else _strip_final_punct(pair.a)
        return f"{base} uncertain between {v1} and {v2}."
    return f"Sources disagree: {pair.a} / {pair.b}"


def resolve_conflicts(pairs: list[ConflictPair]) -> tuple[list[tuple[ConflictPair, str]], str]:
    """Merged statement per pair plus the joined summary."""
    if not pairs:
        raise EmptyInputError("no conflict pairs to resolve")
    reconciled = [(pair, merge_pair(pair)) for pair in pairs]
    summary = "; ".join(merged for _, merged in reconciled)
    return reconciled, summary
