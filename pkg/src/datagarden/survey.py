"""Questionnaire ingestion: schema DSL, CSV responses, record validation.

Schema documents declare questions:

    question role : categorical { student, faculty }
    question outlook : ordinal { gloomy < neutral < bright }
    question plastic_usage : numeric [0, 10]
    question note : text

Responses arrive as RFC-4180-style CSV with a header row. Empty cells
become the MISSING sentinel; an optional "id" column overrides the
default row-derived ids ("r0", "r1", ...).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .dsl import ParseError, TokenStream, tokenize


class _Missing:
    """Sentinel for a skipped answer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "MISSING"


MISSING = _Missing()

Value = str | float | _Missing


@dataclass(frozen=True)
class Question:
    name: str
    kind: str  # "categorical" | "ordinal" | "numeric" | "text"
    values: tuple[str, ...] = ()  # categorical categories / ordinal levels
    lo: float = 0.0
    hi: float = 0.0

    def is_groupable(self) -> bool:
        return self.kind in ("categorical", "ordinal")

    def ordinal_rank(self, level: str) -> int:
        return self.values.index(level)


@dataclass(frozen=True)
class SurveySchema:
    questions: tuple[Question, ...]

    def by_name(self, name: str) -> Question | None:
        for q in self.questions:
            if q.name == name:
                return q
        return None

    def names(self) -> list[str]:
        return [q.name for q in self.questions]


@dataclass(frozen=True)
class ResponseRecord:
    id: str
    values: dict[str, Value]
    line: int = 0  # source line in the CSV, 0 when constructed by hand


@dataclass(frozen=True)
class Diagnostic:
    record_id: str
    question: str
    reason: str
    line: int = 0

    def __str__(self):
        parts = [self.reason]
        if self.record_id:
            parts.append(f"record {self.record_id}")
        if self.question:
            parts.append(f"question {self.question}")
        return parts[0] + (f" ({', '.join(parts[1:])})" if parts[1:] else "")


def parse_schema(text: str) -> SurveySchema:
    """Parse a schema document; raises ParseError on any violation."""
    stream = TokenStream(tokenize(text))
    questions: list[Question] = []
    seen: set[str] = set()
    while not stream.at_end():
        stream.expect("ident", "question")
        name_tok = stream.expect("ident")
        if name_tok.text in seen:
            raise ParseError(
                f"duplicate question name {name_tok.text!r}",
                name_tok.line,
                name_tok.column,
            )
        seen.add(name_tok.text)
        stream.expect("punct", ":")
        questions.append(_parse_kind(stream, name_tok.text))
    if not questions:
        raise ParseError("no questions declared", 1, 1)
    return SurveySchema(tuple(questions))


def _parse_kind(stream: TokenStream, name: str) -> Question:
    kind_tok = stream.expect("ident")
    kind = kind_tok.text
    if kind == "categorical":
        values = _parse_value_list(stream, sep=",")
        return Question(name, "categorical", values=values)
    if kind == "ordinal":
        values = _parse_value_list(stream, sep="<")
        return Question(name, "ordinal", values=values)
    if kind == "numeric":
        stream.expect("punct", "[")
        lo = float(stream.expect("number").text)
        stream.expect("punct", ",")
        hi_tok = stream.expect("number")
        stream.expect("punct", "]")
        if float(hi_tok.text) <= lo:
            raise ParseError("numeric range inverted", hi_tok.line, hi_tok.column)
        return Question(name, "numeric", lo=lo, hi=float(hi_tok.text))
    if kind == "text":
        return Question(name, "text")
    raise ParseError(
        f"unknown question kind {kind!r}", kind_tok.line, kind_tok.column
    )


def _parse_value_list(stream: TokenStream, sep: str) -> tuple[str, ...]:
    open_tok = stream.expect("punct", "{")
    if stream.accept("punct", "}"):
        raise ParseError("empty value list", open_tok.line, open_tok.column)
    values = [stream.expect("ident").text]
    while stream.accept("punct", sep):
        tok = stream.expect("ident")
        if tok.text in values:
            raise ParseError(f"duplicate value {tok.text!r}", tok.line, tok.column)
        values.append(tok.text)
    stream.expect("punct", "}")
    return tuple(values)


class ResponseError(Exception):
    """Invalid cell or header in a response CSV."""

    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        loc = []
        if row is not None:
            loc.append(f"row {row}")
        if column is not None:
            loc.append(f"column {column!r}")
        suffix = f" ({', '.join(loc)})" if loc else ""
        super().__init__(message + suffix)
        self.message = message
        self.row = row
        self.column = column


def parse_responses(text: str, schema: SurveySchema) -> list[ResponseRecord]:
    """Parse a CSV document into typed records, one per data row."""
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows:
        return []
    header = rows[0]
    known = set(schema.names())
    for col in header:
        if col != "id" and col not in known:
            raise ResponseError(f"unknown column {col!r}")
    records: list[ResponseRecord] = []
    for i, row in enumerate(rows[1:]):
        if not row:
            continue
        values: dict[str, Value] = {}
        rec_id = f"r{i}"
        for col, cell in zip(header, row):
            if col == "id":
                if cell:
                    rec_id = cell
                continue
            question = schema.by_name(col)
            assert question is not None
            if cell == "":
                values[col] = MISSING
            else:
                values[col] = _parse_cell(cell, question, i)
        records.append(ResponseRecord(rec_id, values, line=i + 2))
    return records


def _parse_cell(cell: str, question: Question, row: int) -> Value:
    if question.kind in ("categorical", "ordinal"):
        if cell not in question.values:
            raise ResponseError(
                f"value {cell!r} not in declared set", row=row, column=question.name
            )
        return cell
    if question.kind == "numeric":
        try:
            value = float(cell)
        except ValueError:
            raise ResponseError(
                f"unparseable number {cell!r}", row=row, column=question.name
            ) from None
        if not (question.lo <= value <= question.hi):
            raise ResponseError(
                f"value {cell} outside [{question.lo}, {question.hi}]",
                row=row,
                column=question.name,
            )
        return value
    return cell  # text


def validate_records(
    records: list[ResponseRecord], schema: SurveySchema
) -> list[Diagnostic]:
    """Check ResponseRecord invariants; returns diagnostics, never raises."""
    diagnostics: list[Diagnostic] = []
    seen_ids: set[str] = set()
    for rec in records:
        if rec.id in seen_ids:
            diagnostics.append(Diagnostic(rec.id, "", "duplicate id", rec.line))
        seen_ids.add(rec.id)
        for name, value in rec.values.items():
            question = schema.by_name(name)
            if question is None:
                diagnostics.append(
                    Diagnostic(rec.id, name, f"unknown question {name}", rec.line)
                )
                continue
            if value is MISSING:
                continue
            if question.kind in ("categorical", "ordinal"):
                if not isinstance(value, str) or value not in question.values:
                    diagnostics.append(
                        Diagnostic(
                            rec.id, name, f"value {value!r} not in declared set", rec.line
                        )
                    )
            elif question.kind == "numeric":
                if not isinstance(value, (int, float)) or isinstance(value, bool):
                    diagnostics.append(
                        Diagnostic(rec.id, name, f"non-numeric value {value!r}", rec.line)
                    )
                elif not (question.lo <= value <= question.hi):
                    diagnostics.append(Diagnostic(rec.id, name, "out of range", rec.line))
            elif question.kind == "text":
                if not isinstance(value, str):
                    diagnostics.append(
                        Diagnostic(rec.id, name, f"non-text value {value!r}", rec.line)
                    )
    return diagnostics
