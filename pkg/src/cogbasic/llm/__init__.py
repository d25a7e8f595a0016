"""Model-backed execution: endpoint client, per-op provider, whole-program
mode, and conformance checking of claimed traces."""

from .client import (
    ApiError,
    EndpointConfig,
    EndpointTimeoutError,
    LlmError,
    OutputFormatError,
    TraceParseError,
    TransportError,
    llm_call,
)
from .conformance import Violation, check_conformance
from .inmodel import (
    InterpreterFile,
    ModelTrace,
    ModelTraceEntry,
    default_interpreter_file,
    parse_model_trace,
    run_in_model,
)
from .provider import LlmProvider

__all__ = [
    "ApiError",
    "EndpointConfig",
    "EndpointTimeoutError",
    "InterpreterFile",
    "LlmError",
    "LlmProvider",
    "ModelTrace",
    "ModelTraceEntry",
    "OutputFormatError",
    "TraceParseError",
    "TransportError",
    "Violation",
    "check_conformance",
    "default_interpreter_file",
    "llm_call",
    "parse_model_trace",
    "run_in_model",
]
