"""Five-field cognitive memory, conflict pairs, and the memory block format.

The memory block grammar is a stable external interface: other components
(trace rendering, trace parsing, conformance checking) rely on it byte for
byte. List entries and single-line values escape embedded newlines as the
two-character sequence ``\\n``; entries whose text already contains that
literal sequence will not round-trip, a documented limit of the encoding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from .errors import MemoryFormatError, PairFormatError, TypeMismatchError

CONFLICT_CATEGORIES = (
    "absolute-qualified",
    "negation",
    "numeric-categorical",
    "unclassified",
)

PAIR_SEPARATOR = " || "

_WS_RE = re.compile(r"\s+")


def normalize_ws(text: str) -> str:
    """Collapse whitespace runs and trim; used for duplicate detection."""
    return _WS_RE.sub(" ", text).strip()


@dataclass(frozen=True)
class ConflictPair:
    """An ordered pair of contradictory fact strings."""

    a: str
    b: str
    category: str = "unclassified"

    def __post_init__(self) -> None:
        if not self.a.strip() or not self.b.strip():
            raise PairFormatError("conflict pair sides must be non-empty")
        if self.a == self.b:
            raise PairFormatError("conflict pair sides must be distinct")
        if "||" in self.a or "||" in self.b:
            raise PairFormatError("conflict pair sides may not contain '||'")
        if self.category not in CONFLICT_CATEGORIES:
            raise PairFormatError(f"unknown conflict category {self.category!r}")


def serialize_pair(pair: ConflictPair) -> str:
    return f"{pair.a}{PAIR_SEPARATOR}{pair.b}"


def parse_pair(text: str) -> ConflictPair:
    """Parse ``a || b``; the category defaults to unclassified."""
    parts = text.split("||")
    if len(parts) != 2:
        raise PairFormatError(
            f"expected exactly one '||' separator, found {len(parts) - 1}: {text!r}"
        )
    a, b = parts[0].strip(), parts[1].strip()
    if not a or not b:
        raise PairFormatError(f"conflict pair side is empty: {text!r}")
    return ConflictPair(a, b)


@dataclass
class MemoryState:
    """The five memory fields every instruction reads and writes."""

    working: str = ""
    declarative: list[str] = field(default_factory=list)
    procedural: list[str] = field(default_factory=list)
    conflicts: list[ConflictPair] = field(default_factory=list)
    resolution: str = ""

    def copy(self) -> "MemoryState":
        return replace(
            self,
            declarative=list(self.declarative),
            procedural=list(self.procedural),
            conflicts=list(self.conflicts),
        )


def new_memory() -> MemoryState:
    return MemoryState()


def conflicts_count(memory: MemoryState) -> int:
    return len(memory.conflicts)


def _merge_unique(existing: list, values: list, keyfunc) -> tuple[int, int]:
    """Append values not already present (by key); returns (added, skipped)."""
    seen = {keyfunc(v) for v in existing}
    added = skipped = 0
    for value in values:
        key = keyfunc(value)
        if not key or key in seen:
            skipped += 1
            continue
        seen.add(key)
        existing.append(value)
        added += 1
    return added, skipped


def add_to_field(memory: MemoryState, field_name: str, values: list) -> MemoryState:
    """Append values to a list field, skipping duplicates and empties.

    Duplicate detection is whitespace-normalized exact string match; for
    conflicts it compares the serialized pair form.
    """
    if field_name in ("declarative", "procedural"):
        if not all(isinstance(v, str) for v in values):
            raise TypeMismatchError(f"{field_name} accepts only strings")
        target = memory.declarative if field_name == "declarative" else memory.procedural
        _merge_unique(target, [v.strip() for v in values], normalize_ws)
    elif field_name == "conflicts":
        if not all(isinstance(v, ConflictPair) for v in values):
            raise TypeMismatchError("conflicts accepts only conflict pairs")
        _merge_unique(
            memory.conflicts, values, lambda p: normalize_ws(serialize_pair(p))
        )
    else:
        raise TypeMismatchError(f"cannot ADD to field {field_name!r}")
    return memory


@dataclass
class Environment:
    """Ordinary variable bindings; memory field names are off limits here."""

    bindings: dict = field(default_factory=dict)

    _RESERVED = ("working", "declarative", "procedural", "conflicts", "resolution")

    def bind(self, name: str, value) -> None:
        if name in self._RESERVED:
            raise TypeMismatchError(f"{name!r} is a memory field, not a plain variable")
        self.bindings[name] = value

    def lookup(self, name: str):
        return self.bindings[name]

    def __contains__(self, name: str) -> bool:
        return name in self.bindings


# --- memory block rendering and parsing -------------------------------------

_FIELD_ORDER = ("working", "declarative", "procedural", "conflicts", "resolution")


def _escape(text: str) -> str:
    return text.replace("\n", "\\n")


def _unescape(text: str) -> str:
    return text.replace("\\n", "\n")


def render_memory_fields(memory: MemoryState) -> list[str]:
    """The five field lines/blocks, in fixed order, without any header."""
    lines = []
    lines.append("working:" + (f" {_escape(memory.working)}" if memory.working else ""))
    lines.append("declarative:")
    lines.extend(f"- {_escape(fact)}" for fact in memory.declarative)
    lines.append("procedural:")
    lines.extend(f"- {_escape(rule)}" for rule in memory.procedural)
    lines.append("conflicts:")
    lines.extend(f"- {_escape(serialize_pair(p))}" for p in memory.conflicts)
    lines.append(
        "resolution:" + (f" {_escape(memory.resolution)}" if memory.resolution else "")
    )
    return lines


FINAL_MEMORY_HEADER = "FINAL MEMORY"


def render_final_memory(memory: MemoryState) -> str:
    return "\n".join([FINAL_MEMORY_HEADER, *render_memory_fields(memory)])


def _scalar_value(line: str, name: str) -> str:
    rest = line[len(name) + 1 :]
    if rest.startswith(" "):
        rest = rest[1:]
    return _unescape(rest)


def parse_memory_fields(lines: list[str], start: int = 0) -> tuple[MemoryState, int]:
    """Parse the five-field block starting at ``lines[start]``.

    Returns the state and the index of the first line after the block.
    """
    idx = start
    memory = MemoryState()

    def expect_header(name: str) -> str:
        nonlocal idx
        if idx >= len(lines):
            raise MemoryFormatError(f"memory block ended before field {name!r}")
        line = lines[idx].rstrip()
        if not line.startswith(f"{name}:"):
            raise MemoryFormatError(f"expected field {name!r}, found {line!r}")
        idx += 1
        return line

    def collect_items() -> list[str]:
        nonlocal idx
        items = []
        while idx < len(lines):
            line = lines[idx].rstrip()
            if not line.startswith("- "):
                break
            items.append(_unescape(line[2:]))
            idx += 1
        return items

    memory.working = _scalar_value(expect_header("working"), "working")
    expect_header("declarative")
    memory.declarative = collect_items()
    expect_header("procedural")
    memory.procedural = collect_items()
    expect_header("conflicts")
    for item in collect_items():
        try:
            memory.conflicts.append(parse_pair(item))
        except PairFormatError as exc:
            raise MemoryFormatError(f"bad conflict entry: {exc}") from exc
    memory.resolution = _scalar_value(expect_header("resolution"), "resolution")
    return memory, idx


def parse_final_memory(text: str) -> MemoryState:
    """Locate and parse the labeled terminal memory block in ``text``."""
    lines = text.splitlines()
    for i, line in enumerate(lines):
        if line.strip() == FINAL_MEMORY_HEADER:
            memory, _ = parse_memory_fields(lines, i + 1)
            return memory
    raise MemoryFormatError("no FINAL MEMORY block found")
