"""Loading of the word-list data files (one token per line, # comments)."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources


def load_wordlist(name: str) -> frozenset[str]:
    return _load(name)


@lru_cache(maxsize=None)
def _load(name: str) -> frozenset[str]:
    path = resources.files(__package__) / "lexicons" / name
    words = set()
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


def imperative_verbs() -> frozenset[str]:
    return load_wordlist("imperative_verbs.txt")


def negation_markers() -> frozenset[str]:
    return load_wordlist("negation_markers.txt")


def absolute_quantifiers() -> frozenset[str]:
    return load_wordlist("quantifiers_absolute.txt")


def qualified_quantifiers() -> frozenset[str]:
    return load_wordlist("quantifiers_qualified.txt")


def category_values() -> frozenset[str]:
    return load_wordlist("category_values.txt")


def abbreviations() -> frozenset[str]:
    return load_wordlist("abbreviations.txt")
