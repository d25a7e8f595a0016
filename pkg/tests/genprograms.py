"""Seeded random program and scenario generators for property-style tests."""

from __future__ import annotations

import random

from cogbasic.syntax import (
    Add,
    Assign,
    BuiltinCall,
    CallStmt,
    Comparison,
    End,
    Goto,
    If,
    IntLiteral,
    Print,
    Program,
    Rem,
    StringLiteral,
    VariableRef,
)

_VARS = ("facts", "rules", "tmp", "note", "x")
_REM_WORDS = ("extract", "check", "memory", "loop", "done", "conflicts", "step")
_SENTENCE_POOL = (
    "The sky is clear.",
    "The sky is not clear.",
    "The shop opens at 9.",
    "The shop opens at 10.",
    "The alarm always rings.",
    "The alarm sometimes rings.",
    "Water boils when heated.",
    "Ice is cold.",
    "First, mix the ingredients.",
    "Then lock the door.",
    "The door is red.",
    "The door is green.",
)


def gen_scenario(rng: random.Random) -> str:
    count = rng.randint(1, 5)
    return " ".join(rng.choice(_SENTENCE_POOL) for _ in range(count))


def _gen_expression(rng: random.Random):
    roll = rng.random()
    if roll < 0.15:
        return IntLiteral(rng.randint(0, 99))
    if roll < 0.3:
        return StringLiteral(" ".join(rng.sample(_REM_WORDS, rng.randint(1, 3))))
    if roll < 0.45:
        return VariableRef(rng.choice(_VARS + ("working",)))
    name = rng.choice(
        ("INPUT", "EXTRACT_DECLARATIVE", "EXTRACT_PROCEDURAL", "DETECT_CONFLICTS", "CONFLICTS_COUNT")
    )
    if name in ("EXTRACT_DECLARATIVE", "EXTRACT_PROCEDURAL"):
        return BuiltinCall(name, (VariableRef("working"),))
    return BuiltinCall(name)


def _gen_comparison(rng: random.Random) -> Comparison:
    op = rng.choice((">", "<", ">=", "<=", "==", "!="))
    if rng.random() < 0.7:
        return Comparison(BuiltinCall("CONFLICTS_COUNT"), op, IntLiteral(rng.randint(0, 3)))
    return Comparison(IntLiteral(rng.randint(0, 5)), op, IntLiteral(rng.randint(0, 5)))


def gen_program(rng: random.Random, max_lines: int = 20) -> Program:
    """A syntactically valid program covering the whole command set.

    Branch targets always point at real lines, so generated control flow can
    loop but never dangles; the interpreter's step limit ends any loops.
    """
    count = rng.randint(1, max_lines)
    numbers = [10 * (i + 1) for i in range(count)]
    lines = {}
    for number in numbers:
        kind = rng.choices(
            ("rem", "assign", "add", "print", "if", "goto", "call", "end"),
            weights=(2, 5, 3, 2, 3, 2, 2, 2),
        )[0]
        if kind == "rem":
            lines[number] = Rem(" ".join(rng.sample(_REM_WORDS, rng.randint(0, 3))).strip())
        elif kind == "assign":
            target = rng.choice(_VARS + ("working", "resolution"))
            expr = _gen_expression(rng)
            if target in ("working", "resolution"):
                expr = rng.choice(
                    (BuiltinCall("INPUT"), StringLiteral("note"), BuiltinCall("RESOLVE_CONFLICTS"))
                )
            lines[number] = Assign(target, expr, let_kw=rng.random() < 0.5)
        elif kind == "add":
            lines[number] = Add(
                rng.choice(("declarative", "procedural", "conflicts")), rng.choice(_VARS)
            )
        elif kind == "print":
            lines[number] = Print(_gen_expression(rng))
        elif kind == "if":
            lines[number] = If(_gen_comparison(rng), rng.choice(numbers))
        elif kind == "goto":
            lines[number] = Goto(rng.choice(numbers))
        elif kind == "call":
            lines[number] = CallStmt(
                BuiltinCall(rng.choice(("DETECT_CONFLICTS", "RESOLVE_CONFLICTS")))
            )
        else:
            lines[number] = End()
    # Guarantee a reachable END at the bottom so straight-line runs terminate.
    lines[numbers[-1]] = End()
    return Program(lines)


def gen_runnable_program(rng: random.Random, max_lines: int = 12) -> Program:
    """Biased toward the extraction pipeline so runs touch memory often."""
    prologue = {
        10: Assign("working", BuiltinCall("INPUT")),
        20: Assign("facts", BuiltinCall("EXTRACT_DECLARATIVE", (VariableRef("working"),))),
        30: Assign("rules", BuiltinCall("EXTRACT_PROCEDURAL", (VariableRef("working"),))),
        40: Add("declarative", "facts"),
        50: Add("procedural", "rules"),
        60: Assign("tmp", BuiltinCall("DETECT_CONFLICTS")),
        70: Add("conflicts", "tmp"),
    }
    rest = gen_program(rng, max_lines)
    lines = dict(prologue)
    offset = 70
    for i, (_, stmt) in enumerate(rest):
        lines[offset + 10 * (i + 1)] = stmt
    # Remap branch targets into the merged number space.
    numbers = sorted(lines)
    remapped = {}
    for number, stmt in lines.items():
        if isinstance(stmt, If) and stmt.target not in lines:
            stmt = If(stmt.cond, rng.choice(numbers))
        elif isinstance(stmt, Goto) and stmt.target not in lines:
            stmt = Goto(rng.choice(numbers))
        remapped[number] = stmt
    remapped[max(numbers)] = End()
    return Program(remapped)
