"""Per-operation provider: each cognitive builtin becomes one model call."""

from __future__ import annotations

import logging

from ..errors import PairFormatError
from ..memory import ConflictPair, parse_pair, serialize_pair
from ..rules.base import Resolution
from .client import EndpointConfig, OutputFormatError, llm_call

logger = logging.getLogger(__name__)

_SYSTEM = (
    "You are a careful knowledge-extraction engine. Follow the output format "
    "exactly; never add commentary, headers, or code fences."
)

_EXTRACT_DECLARATIVE = (
    "From the text below, list the declarative facts: statements about what is "
    "true. Skip instructions, procedures, and how-to steps.\n"
    "Output format: one fact per line, each line starting with '- '. "
    "If there are none, output exactly NONE.\n\nTEXT:\n{text}"
)

_EXTRACT_PROCEDURAL = (
    "From the text below, list the procedural knowledge: rules, instructions, "
    "or action sequences describing how to act. Skip plain facts.\n"
    "Output format: one rule per line, each line starting with '- '. "
    "If there are none, output exactly NONE.\n\nTEXT:\n{text}"
)

_DETECT = (
    "Below is a list of stored facts. Identify every pair of facts that "
    "contradict each other: absolute versus qualified claims (always/sometimes/"
    "never), direct negations, or numeric/categorical disagreements.\n"
    "Output format: one pair per line, written exactly as\n"
    "first fact || second fact\n"
    "using the fact texts verbatim. If there are no contradictions, output "
    "exactly NONE.\n\nFACTS:\n{facts}"
)

_RESOLVE = (
    "The fact pairs below contradict each other. Reconcile them into hedged, "
    "qualified statements (for example 'usually true but sometimes false' or "
    "'uncertain between 9am and 10am').\n"
    "Output format: a single short paragraph summarizing the reconciliation, "
    "with no list markers and no blank lines.\n\nCONFLICTS:\n{pairs}"
)

_REFORMAT = (
    "Your previous reply did not follow the required output format.\n"
    "Previous reply:\n{reply}\n\n"
    "Repeat the answer to the original request, this time following the "
    "format exactly.\n\nOriginal request:\n{prompt}"
)


def _parse_bullets(reply: str) -> list[str]:
    """Strict bullet list: every non-blank line must be '- item'."""
    stripped = reply.strip()
    if not stripped or stripped == "NONE":
        return []
    items = []
    for line in stripped.splitlines():
        line = line.strip()
        if not line:
            continue
        if not line.startswith("- "):
            raise ValueError(f"not a bullet line: {line!r}")
        item = line[2:].strip()
        if item:
            items.append(item)
    return items


def _parse_pairs(reply: str) -> list[ConflictPair]:
    stripped = reply.strip()
    if not stripped or stripped == "NONE":
        return []
    pairs = []
    for line in stripped.splitlines():
        line = line.strip().removeprefix("- ").strip()
        if not line:
            continue
        try:
            pairs.append(parse_pair(line))
        except PairFormatError as exc:
            raise ValueError(str(exc)) from exc
    return pairs


def _parse_paragraph(reply: str) -> str:
    stripped = reply.strip()
    if not stripped:
        raise ValueError("empty reply where a paragraph was required")
    if any(line.strip().startswith(("- ", "* ")) for line in stripped.splitlines()):
        raise ValueError("list markers in a paragraph-only reply")
    return " ".join(stripped.split())


class LlmProvider:
    """CognitiveOpsProvider backed by one model call per operation.

    A reply violating the demanded shape triggers exactly one reformat retry
    before OutputFormatError is raised with the raw reply attached.
    """

    def __init__(self, config: EndpointConfig):
        self.config = config
        self.label = config.model

    def _ask(self, prompt: str, parse):
        reply = llm_call(self.config, _SYSTEM, prompt)
        try:
            return parse(reply)
        except ValueError as first:
            logger.debug("malformed reply (%s); retrying once", first)
            retry_prompt = _REFORMAT.format(reply=reply, prompt=prompt)
            second_reply = llm_call(self.config, _SYSTEM, retry_prompt)
            try:
                return parse(second_reply)
            except ValueError as second:
                raise OutputFormatError(str(second), raw=second_reply) from second

    def extract_declarative(self, text: str) -> list[str]:
        return self._ask(_EXTRACT_DECLARATIVE.format(text=text), _parse_bullets)

    def extract_procedural(self, text: str) -> list[str]:
        return self._ask(_EXTRACT_PROCEDURAL.format(text=text), _parse_bullets)

    def detect_conflicts(self, facts: list[str]) -> list[ConflictPair]:
        listing = "\n".join(f"- {f}" for f in facts) or "(no facts)"
        return self._ask(_DETECT.format(facts=listing), _parse_pairs)

    def resolve_conflicts(self, pairs: list[ConflictPair]) -> Resolution:
        listing = "\n".join(serialize_pair(p) for p in pairs)
        summary = self._ask(_RESOLVE.format(pairs=listing), _parse_paragraph)
        # One completion covers all pairs; the paragraph stands in for each
        # pair's merged statement.
        return Resolution(tuple((p, summary) for p in pairs), summary)
