"""Rule-based cognitive operations and the provider interface."""

from .analysis import FactAnalysis, analyze_fact, normalize_value
from .base import CognitiveOpsProvider, Resolution
from .conflicts import classify_pair, detect_conflicts, merge_pair, resolve_conflicts
from .provider import RuleBasedProvider
from .text import classify_sentence, extract_declarative, extract_procedural, segment_sentences

__all__ = [
    "CognitiveOpsProvider",
    "FactAnalysis",
    "Resolution",
    "RuleBasedProvider",
    "analyze_fact",
    "classify_pair",
    "classify_sentence",
    "detect_conflicts",
    "extract_declarative",
    "extract_procedural",
    "merge_pair",
    "normalize_value",
    "resolve_conflicts",
    "segment_sentences",
]
