"""Visual-mapping DSL: parsing, validation against a schema, legend derivation.

Mapping documents bind survey questions to visual channels:

    map archetype by role { student -> flower ; faculty -> tree }
    map color by mbti palette distinct
    map satellites cloud by plastic_usage bins [2, 4, 6]
    map scale by outlook range [0.8, 1.4]

Channel identities are "archetype", "color", "scale", and
"satellites:<name>"; each may be bound at most once and exactly one
archetype binding is required.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsl import ParseError, TokenStream, tokenize
from .survey import Diagnostic, ResponseRecord, SurveySchema

DEFAULT_ARM = "default"


@dataclass(frozen=True)
class ChannelBinding:
    channel: str  # "archetype" | "color" | "scale" | "satellites"
    question: str
    satellite_name: str = ""  # satellites only
    arms: tuple[tuple[str, str], ...] = ()  # archetype: (input value | "default", model)
    thresholds: tuple[float, ...] = ()  # satellites: strictly ascending
    out_lo: float = 0.0  # scale output range
    out_hi: float = 0.0
    line: int = 0  # source line, for diagnostics; not part of equality

    def __eq__(self, other):
        if not isinstance(other, ChannelBinding):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (
            self.channel,
            self.question,
            self.satellite_name,
            self.arms,
            self.thresholds,
            self.out_lo,
            self.out_hi,
        )

    @property
    def identity(self) -> str:
        if self.channel == "satellites":
            return f"satellites:{self.satellite_name}"
        return self.channel

    def default_model(self) -> str | None:
        for value, model in self.arms:
            if value == DEFAULT_ARM:
                return model
        return None


@dataclass(frozen=True)
class MappingSpec:
    bindings: tuple[ChannelBinding, ...]

    def archetype(self) -> ChannelBinding:
        return next(b for b in self.bindings if b.channel == "archetype")

    def by_channel(self, channel: str) -> ChannelBinding | None:
        for b in self.bindings:
            if b.channel == channel:
                return b
        return None

    def satellite_bindings(self) -> list[ChannelBinding]:
        return [b for b in self.bindings if b.channel == "satellites"]


@dataclass(frozen=True)
class LegendEntry:
    channel: str  # channel identity, e.g. "color" or "satellites:cloud"
    question: str
    items: tuple[tuple[str, object], ...]  # input value/range -> visual description


@dataclass(frozen=True)
class Legend:
    entries: tuple[LegendEntry, ...]


def parse_mapping(text: str) -> MappingSpec:
    """Parse a mapping document; raises ParseError on any violation."""
    stream = TokenStream(tokenize(text))
    bindings: list[ChannelBinding] = []
    seen: set[str] = set()
    while not stream.at_end():
        map_tok = stream.expect("ident", "map")
        binding = _parse_binding(stream, map_tok.line)
        if binding.identity in seen:
            raise ParseError(
                f"duplicate channel {binding.identity}", map_tok.line, map_tok.column
            )
        seen.add(binding.identity)
        bindings.append(binding)
    if "archetype" not in seen:
        raise ParseError("missing archetype binding", 1, 1)
    return MappingSpec(tuple(bindings))


def _parse_binding(stream: TokenStream, line: int) -> ChannelBinding:
    chan_tok = stream.expect("ident")
    channel = chan_tok.text
    satellite_name = ""
    if channel == "satellites":
        satellite_name = stream.expect("ident").text
    elif channel not in ("archetype", "color", "scale"):
        raise ParseError(
            f"unknown channel {channel!r}", chan_tok.line, chan_tok.column
        )
    stream.expect("ident", "by")
    question = stream.expect("ident").text

    if channel == "archetype":
        arms = _parse_arms(stream)
        return ChannelBinding("archetype", question, arms=arms, line=line)
    if channel == "color":
        stream.expect("ident", "palette")
        stream.expect("ident", "distinct")
        return ChannelBinding("color", question, line=line)
    if channel == "satellites":
        stream.expect("ident", "bins")
        thresholds = _parse_number_list(stream)
        for a, b in zip(thresholds, thresholds[1:]):
            if b <= a:
                raise ParseError(
                    "thresholds not ascending", stream.current.line, stream.current.column
                )
        return ChannelBinding(
            "satellites",
            question,
            satellite_name=satellite_name,
            thresholds=thresholds,
            line=line,
        )
    # scale
    stream.expect("ident", "range")
    lo_line, lo_col = stream.current.line, stream.current.column
    pair = _parse_number_list(stream)
    if len(pair) != 2:
        raise ParseError("scale range needs exactly two numbers", lo_line, lo_col)
    if pair[1] <= pair[0]:
        raise ParseError("scale range inverted", lo_line, lo_col)
    return ChannelBinding("scale", question, out_lo=pair[0], out_hi=pair[1], line=line)


def _parse_arms(stream: TokenStream) -> tuple[tuple[str, str], ...]:
    stream.expect("punct", "{")
    arms: list[tuple[str, str]] = []
    seen_inputs: set[str] = set()
    while True:
        tok = stream.expect("ident")
        if tok.text in seen_inputs:
            what = "default arm" if tok.text == DEFAULT_ARM else f"arm {tok.text!r}"
            raise ParseError(f"duplicate {what}", tok.line, tok.column)
        seen_inputs.add(tok.text)
        stream.expect("punct", "->")
        model = stream.expect("ident").text
        arms.append((tok.text, model))
        if stream.accept("punct", ";"):
            if stream.accept("punct", "}"):
                break
            continue
        stream.expect("punct", "}")
        break
    return tuple(arms)


def _parse_number_list(stream: TokenStream) -> tuple[float, ...]:
    stream.expect("punct", "[")
    numbers = [float(stream.expect("number").text)]
    while stream.accept("punct", ","):
        numbers.append(float(stream.expect("number").text))
    stream.expect("punct", "]")
    return tuple(numbers)


def print_mapping(spec: MappingSpec) -> str:
    """Render a MappingSpec to canonical document text (parse round-trips)."""
    lines = []
    for b in spec.bindings:
        if b.channel == "archetype":
            arms = " ; ".join(f"{value} -> {model}" for value, model in b.arms)
            lines.append(f"map archetype by {b.question} {{ {arms} }}")
        elif b.channel == "color":
            lines.append(f"map color by {b.question} palette distinct")
        elif b.channel == "satellites":
            bins = ", ".join(_fmt_number(t) for t in b.thresholds)
            lines.append(
                f"map satellites {b.satellite_name} by {b.question} bins [{bins}]"
            )
        else:
            lines.append(
                f"map scale by {b.question} "
                f"range [{_fmt_number(b.out_lo)}, {_fmt_number(b.out_hi)}]"
            )
    return "\n".join(lines) + "\n"


def _fmt_number(x: float) -> str:
    return str(int(x)) if x == int(x) else repr(x)


_CHANNEL_INPUT_KINDS = {
    "archetype": ("categorical", "ordinal"),
    "color": ("categorical", "ordinal"),
    "satellites": ("numeric", "ordinal"),
    "scale": ("numeric", "ordinal"),
}


def validate_mapping(spec: MappingSpec, schema: SurveySchema) -> list[Diagnostic]:
    """Cross-check bindings against the schema; returns diagnostics."""
    diagnostics: list[Diagnostic] = []
    for b in spec.bindings:
        question = schema.by_name(b.question)
        if question is None:
            diagnostics.append(
                Diagnostic("", b.question, f"unknown question {b.question}", b.line)
            )
            continue
        if question.kind not in _CHANNEL_INPUT_KINDS[b.channel]:
            diagnostics.append(
                Diagnostic(
                    "",
                    b.question,
                    f"incompatible kind: {b.identity} cannot encode {question.kind}",
                    b.line,
                )
            )
            continue
        if b.channel == "archetype" and b.default_model() is None:
            covered = {value for value, _ in b.arms}
            for category in question.values:
                if category not in covered:
                    diagnostics.append(
                        Diagnostic(
                            "",
                            b.question,
                            f"archetype arms do not cover {category!r} "
                            "and no default arm",
                            b.line,
                        )
                    )
    return diagnostics


def binned_count(value: float, thresholds: tuple[float, ...]) -> int:
    """Number of thresholds <= value."""
    return sum(1 for t in thresholds if value >= t)


def question_input_range(question) -> tuple[float, float]:
    """Numeric input domain of a question on a count/size channel."""
    if question.kind == "numeric":
        return question.lo, question.hi
    return 0.0, float(len(question.values) - 1)  # ordinal ranks


def derive_legend(
    spec: MappingSpec, schema: SurveySchema, records: list[ResponseRecord]
) -> Legend:
    """Build one legend entry per binding (declared categories, not observed)."""
    from .encoder import palette_color  # palette rule lives with the encoder

    entries: list[LegendEntry] = []
    for b in spec.bindings:
        question = schema.by_name(b.question)
        assert question is not None
        if b.channel == "archetype":
            items = tuple((value, model) for value, model in b.arms)
        elif b.channel == "color":
            categories = sorted(question.values)
            items = tuple(
                (
                    category,
                    _hsl_dict(palette_color(category, categories)),
                )
                for category in question.values
            )
        elif b.channel == "satellites":
            items = tuple(_bin_ranges(b.thresholds))
        else:  # scale
            lo, hi = question_input_range(question)
            items = (
                (
                    f"[{_fmt_number(lo)}, {_fmt_number(hi)}]",
                    f"[{_fmt_number(b.out_lo)}, {_fmt_number(b.out_hi)}]",
                ),
            )
        entries.append(LegendEntry(b.identity, b.question, items))
    return Legend(tuple(entries))


def _hsl_dict(color) -> dict:
    return {"h": color.h, "s": color.s, "l": color.l}


def _bin_ranges(thresholds: tuple[float, ...]) -> list[tuple[str, int]]:
    items: list[tuple[str, int]] = []
    for count in range(len(thresholds) + 1):
        if count == 0:
            label = f"<{_fmt_number(thresholds[0])}"
        elif count == len(thresholds):
            label = f">={_fmt_number(thresholds[-1])}"
        else:
            label = f"[{_fmt_number(thresholds[count - 1])}, {_fmt_number(thresholds[count])})"
        items.append((label, count))
    return items
