"""Cognitive BASIC: a numbered-line reasoning language with a five-field
cognitive memory, a deterministic interpreter, pluggable cognitive-operation
providers, and a benchmark harness."""

from .interpreter import RunResult, TraceEntry, render_trace, run
from .memory import ConflictPair, MemoryState, new_memory
from .rules import RuleBasedProvider
from .syntax import Program, format_program, parse_program, parse_program_file

__version__ = "0.1.0"

__all__ = [
    "ConflictPair",
    "MemoryState",
    "Program",
    "RuleBasedProvider",
    "RunResult",
    "TraceEntry",
    "format_program",
    "new_memory",
    "parse_program",
    "parse_program_file",
    "render_trace",
    "run",
    "__version__",
]
