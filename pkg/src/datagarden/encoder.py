"""Apply a validated mapping to records, producing unpositioned entities.

Channel rules:
  archetype  -- arm lookup; the default arm absorbs MISSING and unmatched values
  color      -- procedural HSL palette over the declared categories
  satellites -- count = number of thresholds <= value (MISSING -> 0)
  scale      -- clamped linear map from the question's domain onto the
                binding's output range (MISSING -> midpoint)
"""

from __future__ import annotations

from dataclasses import dataclass

from .mapping import MappingSpec, binned_count, question_input_range
from .survey import MISSING, ResponseRecord, SurveySchema


@dataclass(frozen=True)
class HSL:
    h: float  # degrees, [0, 360)
    s: float  # percent
    l: float  # percent


GRAY = HSL(0.0, 0.0, 50.0)  # fallback tint for a MISSING color answer


@dataclass(frozen=True)
class GardenEntity:
    id: str
    archetype: str
    color: HSL
    satellites: dict[str, int]
    scale: float
    tooltip: tuple[tuple[str, str], ...]


class EncodeError(Exception):
    def __init__(self, message: str, record_id: str, question: str):
        super().__init__(f"{message} (record {record_id}, question {question})")
        self.record_id = record_id
        self.question = question


def palette_color(category: str, all_categories: list[str]) -> HSL:
    """Evenly spaced hue over the sorted category set; fixed S/L."""
    if category not in all_categories:
        raise ValueError(f"category {category!r} not in palette set")
    index = all_categories.index(category)
    return HSL(360.0 * index / len(all_categories), 70.0, 50.0)


def encode(
    records: list[ResponseRecord], spec: MappingSpec, schema: SurveySchema
) -> list[GardenEntity]:
    """One entity per record, in input order. Preconditions: both validations empty."""
    return [_encode_one(rec, spec, schema) for rec in records]


def _encode_one(
    rec: ResponseRecord, spec: MappingSpec, schema: SurveySchema
) -> GardenEntity:
    arch_binding = spec.archetype()
    archetype = _resolve_archetype(rec, arch_binding)

    color = GRAY
    color_binding = spec.by_channel("color")
    if color_binding is not None:
        value = rec.values.get(color_binding.question, MISSING)
        if value is not MISSING:
            question = schema.by_name(color_binding.question)
            color = palette_color(str(value), sorted(question.values))

    satellites: dict[str, int] = {}
    for binding in spec.satellite_bindings():
        value = rec.values.get(binding.question, MISSING)
        if value is MISSING:
            satellites[binding.satellite_name] = 0
        else:
            question = schema.by_name(binding.question)
            satellites[binding.satellite_name] = binned_count(
                _as_number(value, question), binding.thresholds
            )

    scale = 1.0
    scale_binding = spec.by_channel("scale")
    if scale_binding is not None:
        value = rec.values.get(scale_binding.question, MISSING)
        if value is MISSING:
            scale = (scale_binding.out_lo + scale_binding.out_hi) / 2.0
        else:
            question = schema.by_name(scale_binding.question)
            scale = _linear_scale(
                _as_number(value, question),
                question_input_range(question),
                (scale_binding.out_lo, scale_binding.out_hi),
            )

    return GardenEntity(
        id=rec.id,
        archetype=archetype,
        color=color,
        satellites=satellites,
        scale=scale,
        tooltip=_tooltip(rec, schema),
    )


def _resolve_archetype(rec: ResponseRecord, binding) -> str:
    value = rec.values.get(binding.question, MISSING)
    if value is not MISSING:
        for arm_value, model in binding.arms:
            if arm_value == str(value):
                return model
    default = binding.default_model()
    if default is not None:
        return default
    if value is MISSING:
        raise EncodeError("missing answer with no default arm", rec.id, binding.question)
    raise EncodeError(
        f"unmatched value {value!r} with no default arm", rec.id, binding.question
    )


def _as_number(value, question) -> float:
    if question.kind == "ordinal":
        return float(question.ordinal_rank(str(value)))
    return float(value)


def _linear_scale(
    value: float, domain: tuple[float, float], out: tuple[float, float]
) -> float:
    lo, hi = domain
    a, b = out
    if hi == lo:
        return (a + b) / 2.0
    t = (value - lo) / (hi - lo)
    t = min(1.0, max(0.0, t))
    return a + t * (b - a)


def _tooltip(rec: ResponseRecord, schema: SurveySchema) -> tuple[tuple[str, str], ...]:
    pairs: list[tuple[str, str]] = []
    for question in schema.questions:
        value = rec.values.get(question.name, MISSING)
        if value is MISSING:
            continue
        pairs.append((question.name, _display(value)))
    return tuple(pairs)


def _display(value) -> str:
    if isinstance(value, float):
        # up to 3 decimals, trailing zeros trimmed
        text = f"{value:.3f}".rstrip("0").rstrip(".")
        return text if text else "0"
    return str(value)


def tooltip_payload(
    entity_id: str, records: list[ResponseRecord], schema: SurveySchema
) -> tuple[tuple[str, str], ...]:
    """Tooltip pairs for one record, in schema question order."""
    for rec in records:
        if rec.id == entity_id:
            return _tooltip(rec, schema)
    raise KeyError(f"no such entity {entity_id!r}")
