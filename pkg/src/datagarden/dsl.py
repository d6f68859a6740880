"""Shared tokenizer for the schema and mapping mini-languages.

Both languages use the same lexical layer: identifiers, signed decimal
numbers, a small set of punctuation (including the two-character arrow),
and '#' line comments. The tokenizer tracks 1-based line/column positions
so parse errors point at the offending spot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class ParseError(Exception):
    """Syntax or semantic error in a DSL document, with source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "number" | "punct" | "eof"
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<number>-?[0-9]+(\.[0-9]+)?)
  | (?P<punct>->|[:{}\[\],;<])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        kind = m.lastgroup
        chunk = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, chunk, line, m.start() - line_start + 1))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + chunk.rfind("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class TokenStream:
    """Cursor over a token list with expect/accept helpers."""

    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._i = 0

    @property
    def current(self) -> Token:
        return self._tokens[self._i]

    def at_end(self) -> bool:
        return self.current.kind == "eof"

    def advance(self) -> Token:
        tok = self.current
        if tok.kind != "eof":
            self._i += 1
        return tok

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        tok = self.current
        if tok.kind == kind and (text is None or tok.text == text):
            return self.advance()
        return None

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.accept(kind, text)
        if tok is None:
            want = repr(text) if text is not None else kind
            got = repr(self.current.text) if self.current.kind != "eof" else "end of input"
            raise ParseError(
                f"expected {want}, got {got}", self.current.line, self.current.column
            )
        return tok

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.current.line, self.current.column)
