"""Source text handling: lexer, parser, AST, and canonical formatter."""

from .ast import (
    ADD_TARGETS,
    BUILTIN_ARITY,
    COMPARISON_OPS,
    MEMORY_FIELDS,
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
from .formatter import format_expression, format_line, format_program, format_statement
from .lexer import Token, tokenize
from .parser import parse_program, parse_program_file, parse_statement

__all__ = [
    "ADD_TARGETS",
    "BUILTIN_ARITY",
    "COMPARISON_OPS",
    "MEMORY_FIELDS",
    "STATEMENT_BUILTINS",
    "Add",
    "Assign",
    "BuiltinCall",
    "CallStmt",
    "Comparison",
    "End",
    "Expression",
    "Goto",
    "If",
    "IntLiteral",
    "Print",
    "Program",
    "Rem",
    "Statement",
    "StringLiteral",
    "Token",
    "VariableRef",
    "format_expression",
    "format_line",
    "format_program",
    "format_statement",
    "parse_program",
    "parse_program_file",
    "parse_statement",
    "tokenize",
]
