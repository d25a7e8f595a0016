"""Replay a claimed trace against the program's control-flow skeleton.

Violation codes:

- a: an executed or referenced line does not exist in the program
- b: wrong successor (including breaks in the entry chain)
- c: an IF successor contradicts the conflict count the trace itself claims
- d: a memory field shrank at a step that cannot shrink it
- e: conflicts survived to final memory although a resolve step was claimed
- f: the trace does not finish with END
"""

from __future__ import annotations

from dataclasses import dataclass

from ..syntax import (
    Assign,
    BuiltinCall,
    CallStmt,
    Comparison,
    End,
    Goto,
    If,
    IntLiteral,
    Program,
    Statement,
)
from .inmodel import ModelTrace, ModelTraceEntry

_SHRINKABLE = ("declarative", "procedural", "conflicts")


@dataclass(frozen=True)
class Violation:
    code: str  # "a".."f"
    line: int | None
    detail: str

    def __str__(self) -> str:
        where = f"line {self.line}: " if self.line is not None else ""
        return f"[{self.code}] {where}{self.detail}"


def _is_resolve_stmt(stmt: Statement) -> bool:
    if isinstance(stmt, CallStmt):
        return stmt.call.name == "RESOLVE_CONFLICTS"
    if isinstance(stmt, Assign) and isinstance(stmt.value, BuiltinCall):
        return stmt.value.name == "RESOLVE_CONFLICTS"
    return False


def _count_comparison(cond: Comparison) -> bool:
    """True when the condition is CONFLICTS_COUNT against an integer literal."""
    sides = (cond.left, cond.right)
    has_count = any(
        isinstance(s, BuiltinCall) and s.name == "CONFLICTS_COUNT" for s in sides
    )
    others = [s for s in sides if not (isinstance(s, BuiltinCall) and s.name == "CONFLICTS_COUNT")]
    return has_count and all(isinstance(s, IntLiteral) for s in others)


def _eval_count_comparison(cond: Comparison, count: int) -> bool:
    def side(expr) -> int:
        if isinstance(expr, BuiltinCall) and expr.name == "CONFLICTS_COUNT":
            return count
        assert isinstance(expr, IntLiteral)
        return expr.value

    left, right = side(cond.left), side(cond.right)
    return {
        ">": left > right,
        "<": left < right,
        ">=": left >= right,
        "<=": left <= right,
        "==": left == right,
        "!=": left != right,
    }[cond.op]


def check_conformance(program: Program, trace: ModelTrace) -> list[Violation]:
    """All control-flow and memory-update violations; empty means conformant."""
    violations: list[Violation] = []
    entries = trace.entries
    claimed_resolve = False

    if not entries:
        violations.append(Violation("f", None, "trace has no executed lines"))

    previous: ModelTraceEntry | None = None
    for pos, entry in enumerate(entries):
        if entry.line not in program.lines:
            violations.append(Violation("a", entry.line, "executed line not in program"))
            previous = entry
            continue
        stmt = program.lines[entry.line]
        if _is_resolve_stmt(stmt):
            claimed_resolve = True

        expected = _expected_successors(program, stmt, entry)
        if expected is not None:
            kind, allowed = expected
            if entry.next not in allowed:
                shown = ", ".join(str(x) for x in sorted(allowed, key=str))
                violations.append(
                    Violation(
                        kind,
                        entry.line,
                        f"claimed next {entry.next!r}, expected one of: {shown}",
                    )
                )
        if isinstance(entry.next, int) and entry.next not in program.lines:
            violations.append(
                Violation("a", entry.line, f"next points to missing line {entry.next}")
            )

        if pos + 1 < len(entries):
            follower = entries[pos + 1]
            if entry.next == "END":
                violations.append(
                    Violation("b", entry.line, "trace continues after a claimed END")
                )
            elif isinstance(entry.next, int) and follower.line != entry.next:
                violations.append(
                    Violation(
                        "b",
                        entry.line,
                        f"claimed next {entry.next} but trace continues at {follower.line}",
                    )
                )

        if previous is not None:
            _check_shrink(violations, previous, entry, stmt)
        previous = entry

    if entries:
        last = entries[-1]
        last_stmt = program.lines.get(last.line)
        if last.next != "END" or not isinstance(last_stmt, End):
            violations.append(Violation("f", last.line, "trace does not finish at END"))

    if claimed_resolve and trace.final_memory.conflicts:
        violations.append(
            Violation(
                "e",
                None,
                f"{len(trace.final_memory.conflicts)} conflict(s) remain in final "
                "memory after a claimed resolve step",
            )
        )
    return violations


def _expected_successors(program: Program, stmt: Statement, entry: ModelTraceEntry):
    """(code, allowed-next-values) for the statement, or None when unchecked."""
    if isinstance(stmt, End):
        return "b", {"END"}
    if isinstance(stmt, Goto):
        return "b", {stmt.target}
    if isinstance(stmt, If):
        fall = program.successor(entry.line)
        both = {stmt.target} | ({fall} if fall is not None else set())
        if _count_comparison(stmt.cond) and entry.memory is not None:
            truth = _eval_count_comparison(stmt.cond, len(entry.memory.conflicts))
            expected = stmt.target if truth else fall
            if expected is None:
                return "b", both
            return "c", {expected}
        return "b", both
    succ = program.successor(entry.line)
    return "b", {succ} if succ is not None else {"END"}


def _check_shrink(
    violations: list[Violation],
    previous: ModelTraceEntry,
    entry: ModelTraceEntry,
    stmt: Statement,
) -> None:
    if previous.memory is None or entry.memory is None:
        return
    if _is_resolve_stmt(stmt):
        return
    for field_name in _SHRINKABLE:
        before = len(getattr(previous.memory, field_name))
        after = len(getattr(entry.memory, field_name))
        if after < before:
            violations.append(
                Violation(
                    "d",
                    entry.line,
                    f"{field_name} shrank from {before} to {after} at a non-resolve step",
                )
            )
