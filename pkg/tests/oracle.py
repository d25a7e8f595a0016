"""Independent brute-force conflict detector used only as a test reference.

Deliberately separate from the package implementation: its own tokenizer,
its own feature dictionaries, and a flat per-pair rule check. Any divergence
from the package's detector on the benchmark vocabulary is a bug in one of
the two.
"""

from __future__ import annotations

import re

NEGATIONS = {"not", "never", "no"}
ABSOLUTES = {"always", "never"}
QUALIFIEDS = {"sometimes", "usually", "often", "rarely"}
ARTICLES = {"the", "a", "an"}
COPULAS = {"is", "are", "was", "were"}
CATEGORY_WORDS = {
    "red", "green", "blue", "yellow", "orange", "purple", "black", "white",
    "grey", "gray", "brown", "pink",
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday",
    "january", "february", "march", "april", "may", "june", "july", "august",
    "september", "october", "november", "december",
}
IRREGULAR = {"won't": "will", "can't": "can", "shan't": "shall", "ain't": "is"}

_WORDS = re.compile(r"[a-z0-9:']+")
_CLOCK = re.compile(r"^(\d{1,2}):(\d{2})(am|pm)?$")
_PLAIN = re.compile(r"^(\d+)(am|pm)?$")


def _tokens(sentence):
    out = []
    for word in _WORDS.findall(sentence.lower()):
        word = word.strip(":'")
        if not word:
            continue
        if word == "cannot":
            out += ["can", "not"]
        elif word.endswith("n't"):
            out += [IRREGULAR.get(word, word[:-3]), "not"]
        else:
            out.append(word)
    return out


def _value_key(token):
    clock = _CLOCK.match(token)
    if clock:
        hour, minute, half = int(clock.group(1)), int(clock.group(2)), clock.group(3)
        return ("time", _minutes(hour, minute, half))
    plain = _PLAIN.match(token)
    if plain:
        number, half = int(plain.group(1)), plain.group(2)
        if half and 1 <= number <= 12:
            return ("time", _minutes(number, 0, half))
        if not half and number <= 23:
            return ("time", number * 60)
        return ("number", number)
    return ("word", token)


def _minutes(hour, minute, half):
    if half == "am" and hour == 12:
        hour = 0
    if half == "pm" and hour != 12:
        hour += 12
    return hour * 60 + minute


def _features(sentence):
    toks = _tokens(sentence)
    feat = {
        "negative": any(t in NEGATIONS for t in toks),
        "quant": None,
        "value": None,
    }
    for t in toks:
        if t in ABSOLUTES:
            feat["quant"] = ("abs", t)
            break
        if t in QUALIFIEDS:
            feat["quant"] = ("qual", t)
            break
    value_pos = None
    for i in range(len(toks) - 1, -1, -1):
        if _CLOCK.match(toks[i]) or _PLAIN.match(toks[i]):
            feat["value"], value_pos = toks[i], i
            break
    if feat["value"] is None and any(t in COPULAS for t in toks):
        content = [
            (i, t)
            for i, t in enumerate(toks)
            if t not in ARTICLES | NEGATIONS | ABSOLUTES | QUALIFIEDS
        ]
        if content and content[-1][1] in CATEGORY_WORDS:
            value_pos, feat["value"] = content[-1]
    feat["subject"] = tuple(
        t
        for i, t in enumerate(toks)
        if i != value_pos and t not in ARTICLES | NEGATIONS | ABSOLUTES | QUALIFIEDS
    )
    return feat


def _pair_category(f1, f2):
    if not f1["subject"] or f1["subject"] != f2["subject"]:
        return None
    q1, q2 = f1["quant"], f2["quant"]
    one_abs_vs_other = (
        (q1 and q1[0] == "abs" and q2 and (q2[0] == "qual" or q2[1] != q1[1]))
        or (q2 and q2[0] == "abs" and q1 and q1[0] == "qual")
    )
    if one_abs_vs_other:
        return "absolute-qualified"
    if f1["negative"] != f2["negative"] and (f1["value"] is None) == (f2["value"] is None):
        return "negation"
    if (
        f1["negative"] == f2["negative"]
        and f1["value"] is not None
        and f2["value"] is not None
        and _value_key(f1["value"]) != _value_key(f2["value"])
    ):
        return "numeric-categorical"
    return None


def brute_force_conflicts(facts):
    """Every unordered pair, checked independently; output as (a, b, category)."""
    feats = [_features(f) for f in facts]
    found = []
    for i in range(len(facts)):
        for j in range(i + 1, len(facts)):
            category = _pair_category(feats[i], feats[j])
            if category:
                found.append((facts[i].strip(), facts[j].strip(), category))
    return found


SENTENCE_POOL = [
    "The sky is clear.",
    "The sky is not clear.",
    "The shop opens at 9.",
    "The shop opens at 10.",
    "The alarm always rings.",
    "The alarm sometimes rings.",
    "The alarm never rings.",
    "The train departs at 9am.",
    "The train departs at 10am.",
    "The museum is open.",
    "The museum is not open.",
    "The library always closes at 5pm.",
    "The library closes at 6pm.",
    "The door is red.",
    "The door is green.",
    "Cats purr.",
    "Dogs bark.",
    "The office usually opens early.",
    "The office never opens early.",
    "Water is wet.",
]
