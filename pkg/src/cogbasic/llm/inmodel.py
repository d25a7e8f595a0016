"""Whole-program execution inside the model, plus the reply parser."""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from ..errors import MemoryFormatError
from ..memory import FINAL_MEMORY_HEADER, MemoryState, parse_memory_fields
from ..syntax import Program, format_program
from .client import EndpointConfig, TraceParseError, llm_call

_LINE_RE = re.compile(r"^LINE\s+(\d+):\s*(.*)$")
_NEXT_RE = re.compile(r"^NEXT:\s*(END|\d+)\s*$")


@dataclass(frozen=True)
class InterpreterFile:
    """Natural-language manual sent to the model in whole-program mode."""

    text: str


def default_interpreter_file() -> InterpreterFile:
    path = resources.files(__package__) / "interpreter_file.md"
    return InterpreterFile(path.read_text(encoding="utf-8"))


@dataclass
class ModelTraceEntry:
    line: int
    instruction: str = ""
    memory: MemoryState | None = None
    next: int | str | None = None  # line number or "END"


@dataclass
class ModelTrace:
    entries: list[ModelTraceEntry]
    final_memory: MemoryState
    raw: str


def parse_model_trace(text: str) -> ModelTrace:
    """Parse a claimed execution log into entries plus the final memory.

    Tolerant of noise between blocks; raises TraceParseError only when no
    final memory block can be found (partial entries stay in ``raw``).
    """
    lines = text.splitlines()
    entries: list[ModelTraceEntry] = []
    idx = 0
    final_memory: MemoryState | None = None

    while idx < len(lines):
        stripped = lines[idx].strip()
        if stripped == FINAL_MEMORY_HEADER:
            try:
                final_memory, idx = parse_memory_fields(lines, idx + 1)
            except MemoryFormatError:
                idx += 1
            continue
        m = _LINE_RE.match(stripped)
        if not m:
            idx += 1
            continue
        entry = ModelTraceEntry(line=int(m.group(1)), instruction=m.group(2).strip())
        idx += 1
        while idx < len(lines):
            inner = lines[idx].strip()
            if _LINE_RE.match(inner) or inner == FINAL_MEMORY_HEADER:
                break
            nm = _NEXT_RE.match(inner)
            if nm:
                entry.next = nm.group(1) if nm.group(1) == "END" else int(nm.group(1))
                idx += 1
                break
            if inner == "MEMORY:":
                try:
                    entry.memory, idx = parse_memory_fields(lines, idx + 1)
                except MemoryFormatError:
                    idx += 1
                continue
            idx += 1
        entries.append(entry)

    if final_memory is None:
        raise TraceParseError("no FINAL MEMORY block found in model reply", raw=text)
    return ModelTrace(entries=entries, final_memory=final_memory, raw=text)


def build_run_prompt(program: Program, scenario_text: str) -> str:
    return (
        "PROGRAM:\n"
        f"{format_program(program)}\n\n"
        "SCENARIO:\n"
        f"{scenario_text}\n\n"
        "Execute the program on this scenario now, printing one log block per "
        "executed line and the FINAL MEMORY block at END."
    )


def run_in_model(
    config: EndpointConfig,
    interpreter_file: InterpreterFile,
    program: Program,
    scenario_text: str,
) -> ModelTrace:
    """One completion simulating the whole program; parsed into a ModelTrace."""
    reply = llm_call(config, interpreter_file.text, build_run_prompt(program, scenario_text))
    return parse_model_trace(reply)
