"""Line tokenizer for the numbered-statement source format."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import LexError

# Token kinds
NUMBER = "NUMBER"
KEYWORD = "KEYWORD"  # all-caps words: commands and builtin names
IDENT = "IDENT"  # lowercase identifiers
STRING = "STRING"
OP = "OP"
LPAREN = "LPAREN"
RPAREN = "RPAREN"
COMMA = "COMMA"
REMTEXT = "REMTEXT"  # verbatim comment body

_WORD_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER_RE = re.compile(r"[0-9]+")
_IDENT_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_KEYWORD_RE = re.compile(r"[A-Z][A-Z0-9_]*\Z")

# Longest first so ">=" wins over ">".
_OPERATORS = ("==", "!=", ">=", "<=", ">", "<", "=")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int

    @property
    def int_value(self) -> int:
        return int(self.text)


def tokenize(source_line: str) -> list[Token]:
    """Tokenize one physical line; blank lines yield an empty list.

    A comment keyword swallows the rest of the line into a single REMTEXT
    token (minus one separating space), so comment bodies survive verbatim.
    """
    line = source_line.rstrip("\r\n")
    tokens: list[Token] = []
    pos = 0
    length = len(line)

    while pos < length:
        ch = line[pos]
        if ch in " \t":
            pos += 1
            continue

        m = _NUMBER_RE.match(line, pos)
        if m:
            end = m.end()
            if end < length and (line[end].isalpha() or line[end] == "_"):
                raise LexError("malformed numeric literal", line, pos)
            tokens.append(Token(NUMBER, line[pos:end], pos))
            pos = end
            continue

        m = _WORD_RE.match(line, pos)
        if m:
            word = m.group(0)
            if _KEYWORD_RE.match(word):
                tokens.append(Token(KEYWORD, word, pos))
                pos = m.end()
                if word == "REM":
                    rest = line[pos:]
                    if rest.startswith(" "):
                        rest = rest[1:]
                    tokens.append(Token(REMTEXT, rest, pos))
                    pos = length
                continue
            if _IDENT_RE.match(word):
                tokens.append(Token(IDENT, word, pos))
                pos = m.end()
                continue
            raise LexError("malformed word (use UPPERCASE keywords or lowercase identifiers)", line, pos)

        if ch == '"':
            end = line.find('"', pos + 1)
            if end < 0:
                raise LexError("unterminated string literal", line, pos)
            tokens.append(Token(STRING, line[pos + 1 : end], pos))
            pos = end + 1
            continue

        if ch == "(":
            tokens.append(Token(LPAREN, "(", pos))
            pos += 1
            continue
        if ch == ")":
            tokens.append(Token(RPAREN, ")", pos))
            pos += 1
            continue
        if ch == ",":
            tokens.append(Token(COMMA, ",", pos))
            pos += 1
            continue

        for op in _OPERATORS:
            if line.startswith(op, pos):
                tokens.append(Token(OP, op, pos))
                pos += len(op)
                break
        else:
            raise LexError(f"unexpected character {ch!r}", line, pos)

    return tokens
