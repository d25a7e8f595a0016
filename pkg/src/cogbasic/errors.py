"""Exception types shared across the package."""

from __future__ import annotations


class CogBasicError(Exception):
    """Base class for every error this package raises on purpose."""


class LexError(CogBasicError):
    """A source line could not be tokenized."""

    def __init__(self, message: str, line_text: str = "", column: int = 0):
        super().__init__(f"{message} at column {column}: {line_text!r}")
        self.message = message
        self.line_text = line_text
        self.column = column


class ParseError(CogBasicError):
    """A statement or program could not be parsed.

    When raised by whole-program parsing, ``errors`` carries one entry per
    offending source line.
    """

    def __init__(
        self,
        message: str,
        line_number: int | None = None,
        expected: str | None = None,
        errors: list["ParseError"] | None = None,
    ):
        detail = message
        if expected:
            detail += f" (expected {expected})"
        if line_number is not None:
            detail = f"line {line_number}: {detail}"
        if errors:
            detail += "\n" + "\n".join(f"  - {e}" for e in errors)
        super().__init__(detail)
        self.message = message
        self.line_number = line_number
        self.expected = expected
        self.errors = errors or []


class DuplicateLineError(ParseError):
    """The same line number appears more than once in a program."""

    def __init__(self, line_number: int):
        super().__init__("duplicate line number", line_number=line_number)


class PairFormatError(CogBasicError):
    """A conflict pair or its ``a || b`` encoding is malformed."""


class MemoryFormatError(CogBasicError):
    """A rendered memory block does not follow the field grammar."""


class ExecutionError(CogBasicError):
    """A statement failed at run time; ``line`` names the offending line."""

    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.message = message
        self.line = line


class TypeMismatchError(ExecutionError):
    """A value had the wrong type for the requested operation."""


class UnboundVariableError(ExecutionError):
    def __init__(self, name: str, line: int | None = None):
        super().__init__(f"variable '{name}' is not bound", line=line)
        self.name = name


class MissingLineError(ExecutionError):
    def __init__(self, target: int, line: int | None = None):
        super().__init__(f"branch target line {target} does not exist", line=line)
        self.target = target


class EmptyInputError(CogBasicError):
    """An operation that needs at least one input got none."""
