"""Program representation: expressions, statements, and the line map."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Union

# Builtin call names and their required argument counts.
BUILTIN_ARITY = {
    "INPUT": 0,
    "EXTRACT_DECLARATIVE": 1,
    "EXTRACT_PROCEDURAL": 1,
    "DETECT_CONFLICTS": 0,
    "CONFLICTS_COUNT": 0,
    "RESOLVE_CONFLICTS": 0,
}

# Builtins that may also stand alone as a statement.
STATEMENT_BUILTINS = ("DETECT_CONFLICTS", "RESOLVE_CONFLICTS")

MEMORY_FIELDS = ("working", "declarative", "procedural", "conflicts", "resolution")
ADD_TARGETS = ("declarative", "procedural", "conflicts")

COMPARISON_OPS = (">", "<", ">=", "<=", "==", "!=")


@dataclass(frozen=True)
class VariableRef:
    name: str


@dataclass(frozen=True)
class IntLiteral:
    value: int


@dataclass(frozen=True)
class StringLiteral:
    value: str


@dataclass(frozen=True)
class BuiltinCall:
    name: str
    args: tuple["Expression", ...] = ()


Expression = Union[VariableRef, IntLiteral, StringLiteral, BuiltinCall]


@dataclass(frozen=True)
class Comparison:
    left: Expression
    op: str
    right: Expression


@dataclass(frozen=True)
class Rem:
    text: str


@dataclass(frozen=True)
class Assign:
    target: str
    value: Expression
    # Source form only (LET vs bare); irrelevant to program identity.
    let_kw: bool = field(default=True, compare=False)


@dataclass(frozen=True)
class Add:
    dest: str
    source: str


@dataclass(frozen=True)
class Print:
    value: Expression


@dataclass(frozen=True)
class If:
    cond: Comparison
    target: int


@dataclass(frozen=True)
class Goto:
    target: int


@dataclass(frozen=True)
class CallStmt:
    call: BuiltinCall


@dataclass(frozen=True)
class End:
    pass


Statement = Union[Rem, Assign, Add, Print, If, Goto, CallStmt, End]


@dataclass
class Program:
    """Statements keyed by line number, iterated in ascending order."""

    lines: dict[int, Statement]

    def __post_init__(self) -> None:
        self.lines = dict(sorted(self.lines.items()))

    def line_numbers(self) -> list[int]:
        return list(self.lines)

    def first_line(self) -> int:
        if not self.lines:
            raise ValueError("program has no lines")
        return next(iter(self.lines))

    def successor(self, line: int) -> int | None:
        """Smallest line number strictly greater than ``line``, if any."""
        numbers = self.line_numbers()
        idx = bisect_right(numbers, line)
        return numbers[idx] if idx < len(numbers) else None

    def __iter__(self):
        return iter(self.lines.items())

    def __len__(self) -> int:
        return len(self.lines)
