"""Deterministic execution engine with per-step trace logging.

Execution starts at the lowest line number and proceeds in ascending order
unless redirected by a branch. Every executed statement appends exactly one
trace entry whose memory snapshot reflects the state after the statement's
effect. A step limit bounds every run, so looping programs always terminate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (
    ExecutionError,
    MissingLineError,
    TypeMismatchError,
    UnboundVariableError,
)
from .memory import (
    ConflictPair,
    Environment,
    MemoryState,
    add_to_field,
    new_memory,
    normalize_ws,
    render_final_memory,
    render_memory_fields,
    serialize_pair,
)
from .syntax import (
    Add,
    Assign,
    BuiltinCall,
    CallStmt,
    Comparison,
    End,
    Expression,
    Goto,
    If,
    IntLiteral,
    Print,
    Program,
    Rem,
    StringLiteral,
    VariableRef,
)
from .syntax.formatter import format_comparison, format_expression, format_statement

DEFAULT_STEP_LIMIT = 1000

# Memory fields that may be assigned directly (the list-valued fields only
# grow through ADD, which keeps memory growth auditable).
_ASSIGNABLE_FIELDS = ("working", "resolution")
_LIST_FIELDS = ("declarative", "procedural", "conflicts")


@dataclass
class ExecutionState:
    program: Program
    scenario_text: str
    memory: MemoryState = field(default_factory=new_memory)
    env: Environment = field(default_factory=Environment)
    current_line: int = 0
    steps_taken: int = 0
    status: str = "running"  # "running" | "ended" | "failed"
    failure_reason: str | None = None


@dataclass
class TraceEntry:
    line: int
    instruction: str
    rationale: str
    memory: MemoryState
    next: int | None  # None marks END
    print_text: str | None = None


@dataclass
class RunResult:
    final_memory: MemoryState
    trace: list[TraceEntry]
    print_output: list[str]
    outcome: str  # "completed" | "step-limit-exceeded" | "runtime-error"
    error: str | None = None

    @property
    def outcome_text(self) -> str:
        if self.outcome == "runtime-error" and self.error:
            return f"runtime-error: {self.error}"
        return self.outcome


def new_state(program: Program, scenario_text: str) -> ExecutionState:
    return ExecutionState(
        program=program, scenario_text=scenario_text, current_line=program.first_line()
    )


def _display(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, list):
        parts = [serialize_pair(v) if isinstance(v, ConflictPair) else _display(v) for v in value]
        return "[" + ", ".join(parts) + "]"
    raise TypeMismatchError(f"cannot display value of type {type(value).__name__}")


def _call_provider(fn, line: int, *args):
    try:
        return fn(*args)
    except ExecutionError:
        raise
    except Exception as exc:
        raise ExecutionError(f"provider error: {exc}", line=line) from exc


def _lookup(state: ExecutionState, name: str, line: int):
    memory = state.memory
    if name == "working":
        return memory.working
    if name == "declarative":
        return list(memory.declarative)
    if name == "procedural":
        return list(memory.procedural)
    if name == "conflicts":
        return list(memory.conflicts)
    if name == "resolution":
        return memory.resolution
    if name in state.env:
        return state.env.lookup(name)
    raise UnboundVariableError(name, line=line)


def _apply_resolution(state: ExecutionState, provider, line: int) -> tuple[str, int]:
    """Run the provider's resolution and merge it into declarative memory.

    Each pair's first member is replaced in place by the merged statement and
    the second member is dropped; the conflict list is cleared and the summary
    written to resolution. Returns (summary, pairs resolved).
    """
    memory = state.memory
    pairs = list(memory.conflicts)
    if not pairs:
        return "", 0
    resolution = _call_provider(provider.resolve_conflicts, line, pairs)
    for pair, merged in resolution.reconciled:
        _replace_resolved(memory, pair, merged)
    memory.conflicts.clear()
    memory.resolution = resolution.summary
    return resolution.summary, len(pairs)


def _replace_resolved(memory: MemoryState, pair: ConflictPair, merged: str) -> None:
    decl = memory.declarative
    merged = merged.strip()
    na, nb, nm = normalize_ws(pair.a), normalize_ws(pair.b), normalize_ws(merged)
    already_present = any(normalize_ws(x) == nm for x in decl)
    idx_a = next((i for i, x in enumerate(decl) if normalize_ws(x) == na), None)
    if idx_a is not None:
        if already_present and nm != na:
            del decl[idx_a]
        else:
            decl[idx_a] = merged
    elif merged and not already_present:
        decl.append(merged)
    idx_b = next((i for i, x in enumerate(decl) if normalize_ws(x) == nb), None)
    if idx_b is not None:
        del decl[idx_b]


class _Evaluator:
    """Evaluates expressions against one execution state."""

    def __init__(self, state: ExecutionState, provider):
        self.state = state
        self.provider = provider

    def eval(self, expr: Expression):
        line = self.state.current_line
        if isinstance(expr, IntLiteral):
            return expr.value
        if isinstance(expr, StringLiteral):
            return expr.value
        if isinstance(expr, VariableRef):
            return _lookup(self.state, expr.name, line)
        if isinstance(expr, BuiltinCall):
            return self.eval_call(expr)
        raise TypeMismatchError(f"cannot evaluate {expr!r}", line=line)

    def eval_call(self, call: BuiltinCall):
        state, line = self.state, self.state.current_line
        name = call.name
        if name == "INPUT":
            return state.scenario_text
        if name == "CONFLICTS_COUNT":
            return len(state.memory.conflicts)
        if name in ("EXTRACT_DECLARATIVE", "EXTRACT_PROCEDURAL"):
            source = self.eval(call.args[0])
            if not isinstance(source, str):
                raise TypeMismatchError(
                    f"{name} needs a text value, got {type(source).__name__}", line=line
                )
            fn = (
                self.provider.extract_declarative
                if name == "EXTRACT_DECLARATIVE"
                else self.provider.extract_procedural
            )
            items = _call_provider(fn, line, source)
            return [s.strip() for s in items if isinstance(s, str) and s.strip()]
        if name == "DETECT_CONFLICTS":
            pairs = _call_provider(
                self.provider.detect_conflicts, line, list(state.memory.declarative)
            )
            return list(pairs)
        if name == "RESOLVE_CONFLICTS":
            summary, _ = _apply_resolution(state, self.provider, line)
            return summary
        raise ExecutionError(f"unknown builtin {name!r}", line=line)


def eval_expression(expr: Expression, state: ExecutionState, provider):
    """Evaluate one expression in the given state (builtins may mutate memory)."""
    return _Evaluator(state, provider).eval(expr)


def execute_call_statement(call: BuiltinCall, state: ExecutionState, provider) -> ExecutionState:
    """Statement-position DETECT_CONFLICTS / RESOLVE_CONFLICTS."""
    line = state.current_line
    if call.name == "DETECT_CONFLICTS":
        pairs = _call_provider(provider.detect_conflicts, line, list(state.memory.declarative))
        add_to_field(state.memory, "conflicts", list(pairs))
        return state
    if call.name == "RESOLVE_CONFLICTS":
        _apply_resolution(state, provider, line)
        return state
    raise ExecutionError(f"{call.name} cannot be used as a statement", line=line)


def _assign_rationale(target: str, expr: Expression, value) -> str:
    if isinstance(expr, BuiltinCall):
        name = expr.name
        if name == "INPUT":
            return f"Loaded scenario text into {target}."
        if name == "EXTRACT_DECLARATIVE":
            return f"Extracted {len(value)} declarative fact(s) into {target}."
        if name == "EXTRACT_PROCEDURAL":
            return f"Extracted {len(value)} procedural rule(s) into {target}."
        if name == "DETECT_CONFLICTS":
            return f"Detected {len(value)} conflict pair(s); stored in {target}."
        if name == "CONFLICTS_COUNT":
            return f"Stored conflict count {value} in {target}."
        if name == "RESOLVE_CONFLICTS":
            if value:
                return "Resolved conflicts; declarative reconciled and conflict list cleared."
            return "No conflicts to resolve; resolution left unchanged."
    return f"Assigned {format_expression(expr)} to {target}."


def step(state: ExecutionState, provider) -> TraceEntry:
    """Execute exactly the statement at the current line.

    Mutates the state in place and returns the trace entry for the step.
    Raises ExecutionError (or a subclass) when the statement fails; a failed
    statement does not count as a taken step.
    """
    if state.status != "running":
        raise ExecutionError("execution has already finished")
    line = state.current_line
    stmt = state.program.lines[line]
    instruction = format_statement(stmt)
    evaluator = _Evaluator(state, provider)
    print_text: str | None = None
    next_line: int | None

    def sequential() -> int:
        succ = state.program.successor(line)
        if succ is None:
            raise ExecutionError("no line follows and END was not reached", line=line)
        return succ

    if isinstance(stmt, Rem):
        rationale = "Comment; no state change."
        next_line = sequential()
    elif isinstance(stmt, Assign):
        value = evaluator.eval(stmt.value)
        _store(state, stmt.target, value, line)
        rationale = _assign_rationale(stmt.target, stmt.value, value)
        next_line = sequential()
    elif isinstance(stmt, Add):
        values = _lookup(state, stmt.source, line)
        if not isinstance(values, list):
            raise TypeMismatchError(
                f"ADD needs a list value in {stmt.source!r}, got {type(values).__name__}",
                line=line,
            )
        target_list = getattr(state.memory, stmt.dest)
        before = len(target_list)
        add_to_field(state.memory, stmt.dest, values)
        added = len(getattr(state.memory, stmt.dest)) - before
        skipped = len(values) - added
        rationale = f"Appended {added} entr{'y' if added == 1 else 'ies'} to {stmt.dest}."
        if skipped:
            rationale += f" Skipped {skipped} duplicate or empty value(s)."
        next_line = sequential()
    elif isinstance(stmt, Print):
        value = evaluator.eval(stmt.value)
        print_text = _display(value)
        rationale = f"Printed value of {format_expression(stmt.value)}."
        next_line = sequential()
    elif isinstance(stmt, If):
        truth = _eval_comparison(stmt.cond, evaluator, line)
        if truth:
            if stmt.target not in state.program.lines:
                raise MissingLineError(stmt.target, line=line)
            next_line = stmt.target
            rationale = (
                f"Condition {format_comparison(stmt.cond)} is true; jumping to line {stmt.target}."
            )
        else:
            next_line = sequential()
            rationale = (
                f"Condition {format_comparison(stmt.cond)} is false; continuing at line {next_line}."
            )
    elif isinstance(stmt, Goto):
        if stmt.target not in state.program.lines:
            raise MissingLineError(stmt.target, line=line)
        next_line = stmt.target
        rationale = f"Jumping to line {stmt.target}."
    elif isinstance(stmt, CallStmt):
        if stmt.call.name == "DETECT_CONFLICTS":
            before = len(state.memory.conflicts)
            execute_call_statement(stmt.call, state, provider)
            added = len(state.memory.conflicts) - before
            rationale = (
                f"Detected {added} new conflict pair(s); {len(state.memory.conflicts)} recorded."
            )
        else:
            _, resolved = _apply_resolution(state, provider, line)
            if resolved:
                rationale = "Resolved conflicts; declarative reconciled and conflict list cleared."
            else:
                rationale = "No conflicts to resolve; memory unchanged."
        next_line = sequential()
    elif isinstance(stmt, End):
        state.status = "ended"
        rationale = "Execution terminated; final memory follows."
        next_line = None
    else:
        raise ExecutionError(f"unsupported statement {stmt!r}", line=line)

    state.steps_taken += 1
    if next_line is not None:
        state.current_line = next_line
    return TraceEntry(line, instruction, rationale, state.memory.copy(), next_line, print_text)


def _store(state: ExecutionState, target: str, value, line: int) -> None:
    if target in _ASSIGNABLE_FIELDS:
        if not isinstance(value, str):
            raise TypeMismatchError(
                f"memory field {target!r} holds text, got {type(value).__name__}", line=line
            )
        setattr(state.memory, target, value)
    elif target in _LIST_FIELDS:
        raise TypeMismatchError(
            f"cannot assign to {target!r}; use ADD {target} FROM <variable>", line=line
        )
    else:
        state.env.bind(target, value)


def _eval_comparison(cond: Comparison, evaluator: _Evaluator, line: int) -> bool:
    left = evaluator.eval(cond.left)
    right = evaluator.eval(cond.right)
    if not isinstance(left, int) or not isinstance(right, int):
        raise TypeMismatchError(
            f"comparison operands must be integers, got "
            f"{type(left).__name__} and {type(right).__name__}",
            line=line,
        )
    ops = {
        ">": left > right,
        "<": left < right,
        ">=": left >= right,
        "<=": left <= right,
        "==": left == right,
        "!=": left != right,
    }
    return ops[cond.op]


def run(
    program: Program,
    scenario_text: str,
    provider,
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> RunResult:
    """Execute the whole program on one scenario text."""
    if step_limit < 1:
        raise ValueError("step_limit must be at least 1")
    if not program.lines:
        return RunResult(new_memory(), [], [], "runtime-error", "program has no lines")

    state = new_state(program, scenario_text)
    trace: list[TraceEntry] = []
    prints: list[str] = []
    outcome = "completed"
    error: str | None = None

    while True:
        if state.status != "running":
            break
        if state.steps_taken >= step_limit:
            outcome = "step-limit-exceeded"
            break
        try:
            entry = step(state, provider)
        except ExecutionError as exc:
            outcome = "runtime-error"
            error = str(exc)
            state.status = "failed"
            state.failure_reason = error
            break
        trace.append(entry)
        if entry.print_text is not None:
            prints.append(entry.print_text)

    return RunResult(state.memory, trace, prints, outcome, error)


# --- trace rendering ---------------------------------------------------------


def render_entry(entry: TraceEntry) -> str:
    lines = [f"LINE {entry.line}: {entry.instruction}", f"RATIONALE: {entry.rationale}"]
    if entry.print_text is not None:
        lines.append("PRINT: " + entry.print_text.replace("\n", "\\n"))
    lines.append("MEMORY:")
    lines.extend(render_memory_fields(entry.memory))
    lines.append(f"NEXT: {entry.next if entry.next is not None else 'END'}")
    return "\n".join(lines)


def render_trace(result: RunResult) -> str:
    """Human-readable log: one block per step, then the final memory block."""
    blocks = [render_entry(e) for e in result.trace]
    tail = render_final_memory(result.final_memory)
    if result.outcome != "completed":
        tail = f"OUTCOME: {result.outcome_text}\n\n{tail}"
    if not blocks:
        return tail
    return "\n\n".join(blocks) + "\n\n" + tail


def memory_to_dict(memory: MemoryState) -> dict:
    return {
        "working": memory.working,
        "declarative": list(memory.declarative),
        "procedural": list(memory.procedural),
        "conflicts": [serialize_pair(p) for p in memory.conflicts],
        "resolution": memory.resolution,
    }


def machine_trace_records(result: RunResult) -> list[dict]:
    """One record per step plus a terminal record with final memory/outcome."""
    records = [
        {
            "line": e.line,
            "instruction": e.instruction,
            "rationale": e.rationale,
            "memory": memory_to_dict(e.memory),
            "next": e.next if e.next is not None else "END",
        }
        for e in result.trace
    ]
    records.append(
        {"memory": memory_to_dict(result.final_memory), "outcome": result.outcome_text}
    )
    return records


def render_machine_trace(result: RunResult) -> str:
    return "\n".join(json.dumps(r, ensure_ascii=False) for r in machine_trace_records(result)) + "\n"
