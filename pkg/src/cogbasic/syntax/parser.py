"""Recursive-descent parser from token lists to statements and programs."""

from __future__ import annotations

from ..errors import DuplicateLineError, LexError, ParseError
from . import lexer
from .ast import (
    ADD_TARGETS,
    BUILTIN_ARITY,
    COMPARISON_OPS,
    STATEMENT_BUILTINS,
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
    Statement,
    StringLiteral,
    VariableRef,
)
from .lexer import Token


class _Cursor:
    """Token stream with one-token lookahead."""

    def __init__(self, tokens: list[Token], line_number: int | None = None):
        self.tokens = tokens
        self.pos = 0
        self.line_number = line_number

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token | None:
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def expect(self, kind: str, expected: str) -> Token:
        tok = self.next()
        if tok is None or tok.kind != kind:
            found = tok.text if tok else "end of line"
            raise ParseError(
                f"unexpected {found!r}", line_number=self.line_number, expected=expected
            )
        return tok

    def expect_keyword(self, word: str) -> Token:
        tok = self.next()
        if tok is None or tok.kind != lexer.KEYWORD or tok.text != word:
            found = tok.text if tok else "end of line"
            raise ParseError(
                f"unexpected {found!r}", line_number=self.line_number, expected=word
            )
        return tok

    def error(self, message: str, expected: str | None = None) -> ParseError:
        return ParseError(message, line_number=self.line_number, expected=expected)


def _parse_call(cur: _Cursor, name_tok: Token) -> BuiltinCall:
    name = name_tok.text
    if name not in BUILTIN_ARITY:
        raise cur.error(f"unknown builtin {name!r}", expected="a builtin call name")
    cur.expect(lexer.LPAREN, "'('")
    args: list[Expression] = []
    if cur.peek() is not None and cur.peek().kind != lexer.RPAREN:
        args.append(_parse_expression(cur))
        while cur.peek() is not None and cur.peek().kind == lexer.COMMA:
            cur.next()
            args.append(_parse_expression(cur))
    cur.expect(lexer.RPAREN, "')'")
    arity = BUILTIN_ARITY[name]
    if len(args) != arity:
        raise cur.error(
            f"{name} takes {arity} argument(s), got {len(args)}", expected=f"{arity} argument(s)"
        )
    return BuiltinCall(name, tuple(args))


def _parse_expression(cur: _Cursor) -> Expression:
    tok = cur.next()
    if tok is None:
        raise cur.error("missing expression", expected="an expression")
    if tok.kind == lexer.NUMBER:
        return IntLiteral(tok.int_value)
    if tok.kind == lexer.STRING:
        return StringLiteral(tok.text)
    if tok.kind == lexer.IDENT:
        return VariableRef(tok.text)
    if tok.kind == lexer.KEYWORD:
        return _parse_call(cur, tok)
    raise cur.error(f"unexpected {tok.text!r} in expression", expected="an expression")


def _parse_comparison(cur: _Cursor) -> Comparison:
    left = _parse_expression(cur)
    op_tok = cur.expect(lexer.OP, "a comparison operator")
    if op_tok.text not in COMPARISON_OPS:
        raise cur.error(
            f"invalid comparison operator {op_tok.text!r}",
            expected="one of " + ", ".join(COMPARISON_OPS),
        )
    right = _parse_expression(cur)
    return Comparison(left, op_tok.text, right)


def _parse_line_target(cur: _Cursor) -> int:
    tok = cur.expect(lexer.NUMBER, "a target line number")
    target = tok.int_value
    if target <= 0:
        raise cur.error("target line number must be positive")
    return target


def parse_statement(tokens: list[Token]) -> tuple[int, Statement]:
    """Parse one tokenized line into its line number and statement."""
    if not tokens:
        raise ParseError("empty statement")
    cur = _Cursor(tokens)
    num_tok = cur.expect(lexer.NUMBER, "a line number")
    line_number = num_tok.int_value
    if line_number <= 0:
        raise ParseError("line number must be positive")
    cur.line_number = line_number

    stmt = _parse_statement_body(cur)
    if cur.peek() is not None:
        raise cur.error(
            f"unexpected trailing {cur.peek().text!r}", expected="end of line"
        )
    return line_number, stmt


def _parse_statement_body(cur: _Cursor) -> Statement:
    tok = cur.next()
    if tok is None:
        raise cur.error("missing statement", expected="a command")

    if tok.kind == lexer.IDENT:
        # Bare assignment: x = expr
        eq = cur.expect(lexer.OP, "'='")
        if eq.text != "=":
            raise cur.error("assignment requires '='", expected="'='")
        return Assign(tok.text, _parse_expression(cur), let_kw=False)

    if tok.kind != lexer.KEYWORD:
        raise cur.error(f"unexpected {tok.text!r}", expected="a command keyword")

    word = tok.text
    if word == "REM":
        body = cur.next()
        text = body.text if body is not None and body.kind == lexer.REMTEXT else ""
        return Rem(text)
    if word == "LET":
        target = cur.expect(lexer.IDENT, "a lowercase variable name")
        eq = cur.expect(lexer.OP, "'='")
        if eq.text != "=":
            raise cur.error("assignment requires '='", expected="'='")
        return Assign(target.text, _parse_expression(cur), let_kw=True)
    if word == "ADD":
        dest = cur.expect(lexer.IDENT, "a memory field name")
        if dest.text not in ADD_TARGETS:
            raise cur.error(
                f"invalid ADD target {dest.text!r}",
                expected="one of " + ", ".join(ADD_TARGETS),
            )
        cur.expect_keyword("FROM")
        source = cur.expect(lexer.IDENT, "a source variable name")
        return Add(dest.text, source.text)
    if word == "PRINT":
        return Print(_parse_expression(cur))
    if word == "IF":
        cond = _parse_comparison(cur)
        cur.expect_keyword("THEN")
        return If(cond, _parse_line_target(cur))
    if word == "GOTO":
        return Goto(_parse_line_target(cur))
    if word == "END":
        return End()
    if word in BUILTIN_ARITY:
        call = _parse_call(cur, tok)
        if call.name not in STATEMENT_BUILTINS:
            raise cur.error(
                f"{call.name} cannot stand alone as a statement",
                expected="an assignment or PRINT around the call",
            )
        return CallStmt(call)
    raise cur.error(f"unrecognized command {word!r}", expected="a command keyword")


def parse_program_file(path) -> Program:
    """Parse a ``.cb`` program file (UTF-8, LF or CRLF line endings)."""
    from pathlib import Path

    return parse_program(Path(path).read_text(encoding="utf-8"))


def parse_program(source: str) -> Program:
    """Parse full source text; blank lines are skipped.

    Raises DuplicateLineError on a repeated line number, otherwise a
    ParseError aggregating every offending line.
    """
    lines: dict[int, Statement] = {}
    errors: list[ParseError] = []
    duplicate: int | None = None

    for physical, raw in enumerate(source.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            tokens = lexer.tokenize(raw)
            number, stmt = parse_statement(tokens)
        except LexError as exc:
            errors.append(ParseError(str(exc), line_number=physical))
            continue
        except ParseError as exc:
            errors.append(exc)
            continue
        if number in lines and duplicate is None:
            duplicate = number
        lines[number] = stmt

    if duplicate is not None:
        raise DuplicateLineError(duplicate)
    if errors:
        raise ParseError(f"{len(errors)} line(s) failed to parse", errors=errors)
    return Program(lines)
