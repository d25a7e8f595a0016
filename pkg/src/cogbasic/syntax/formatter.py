"""Canonical pretty-printer; inverse of the parser."""

from __future__ import annotations

from .ast import (
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


def format_expression(expr: Expression) -> str:
    if isinstance(expr, VariableRef):
        return expr.name
    if isinstance(expr, IntLiteral):
        return str(expr.value)
    if isinstance(expr, StringLiteral):
        return f'"{expr.value}"'
    if isinstance(expr, BuiltinCall):
        return f"{expr.name}({', '.join(format_expression(a) for a in expr.args)})"
    raise TypeError(f"not an expression: {expr!r}")


def format_comparison(cond: Comparison) -> str:
    return f"{format_expression(cond.left)} {cond.op} {format_expression(cond.right)}"


def format_statement(stmt: Statement) -> str:
    """Statement body without its line number."""
    if isinstance(stmt, Rem):
        return f"REM {stmt.text}" if stmt.text else "REM"
    if isinstance(stmt, Assign):
        head = f"LET {stmt.target}" if stmt.let_kw else stmt.target
        return f"{head} = {format_expression(stmt.value)}"
    if isinstance(stmt, Add):
        return f"ADD {stmt.dest} FROM {stmt.source}"
    if isinstance(stmt, Print):
        return f"PRINT {format_expression(stmt.value)}"
    if isinstance(stmt, If):
        return f"IF {format_comparison(stmt.cond)} THEN {stmt.target}"
    if isinstance(stmt, Goto):
        return f"GOTO {stmt.target}"
    if isinstance(stmt, CallStmt):
        return format_expression(stmt.call)
    if isinstance(stmt, End):
        return "END"
    raise TypeError(f"not a statement: {stmt!r}")


def format_line(number: int, stmt: Statement) -> str:
    return f"{number} {format_statement(stmt)}"


def format_program(program: Program) -> str:
    """One statement per line, ascending line numbers, LF separators."""
    return "\n".join(format_line(n, s) for n, s in program)
