"""Versioned scene document with canonical JSON serialization.

Canonical form: object keys sorted lexicographically at every nesting
level, no insignificant whitespace, floats in Python's shortest
round-trip repr. serialize(parse(serialize(d))) == serialize(d)
byte-for-byte, which makes golden-file tests possible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .encoder import HSL, GardenEntity
from .layout import Bounds, LayoutResult, Position
from .mapping import Legend, LegendEntry

SCENE_VERSION = "datagarden-scene/1"


@dataclass(frozen=True)
class SceneMeta:
    title: str
    entity_count: int
    generated_from: tuple[str, ...]


@dataclass(frozen=True)
class PlacedEntity:
    entity: GardenEntity
    position: Position


@dataclass(frozen=True)
class SceneDocument:
    version: str
    bounds: Bounds
    entities: tuple[PlacedEntity, ...]
    legend: Legend
    meta: SceneMeta


class SceneError(Exception):
    pass


def assemble_scene(
    entities: list[GardenEntity],
    layout: LayoutResult,
    legend: Legend,
    bounds: Bounds,
    title: str,
    generated_from: list[str] = (),
) -> SceneDocument:
    seen: set[str] = set()
    placed: list[PlacedEntity] = []
    for entity in entities:
        if entity.id in seen:
            raise SceneError(f"duplicate entity id {entity.id!r}")
        seen.add(entity.id)
        if entity.id not in layout.positions:
            raise SceneError(f"entity {entity.id!r} has no position in the layout")
        placed.append(PlacedEntity(entity, layout.positions[entity.id]))
    placed.sort(key=lambda p: p.entity.id)
    meta = SceneMeta(title, len(placed), tuple(generated_from))
    return SceneDocument(SCENE_VERSION, bounds, tuple(placed), legend, meta)


def serialize_scene(doc: SceneDocument) -> str:
    return json.dumps(
        _to_jsonable(doc), sort_keys=True, separators=(",", ":"), ensure_ascii=False
    )


def _to_jsonable(doc: SceneDocument) -> dict:
    # Numeric leaves are coerced to float so canonical text is stable
    # across parse/serialize cycles (json keeps int/float distinct).
    return {
        "version": doc.version,
        "bounds": {"width": float(doc.bounds.width), "depth": float(doc.bounds.depth)},
        "entities": [
            {
                "id": p.entity.id,
                "archetype": p.entity.archetype,
                "position": [float(c) for c in p.position],
                "color": {
                    "h": float(p.entity.color.h),
                    "s": float(p.entity.color.s),
                    "l": float(p.entity.color.l),
                },
                "satellites": {k: int(v) for k, v in p.entity.satellites.items()},
                "scale": float(p.entity.scale),
                "tooltip": [[q, v] for q, v in p.entity.tooltip],
            }
            for p in doc.entities
        ],
        "legend": legend_to_jsonable(doc.legend),
        "meta": {
            "title": doc.meta.title,
            "entity_count": doc.meta.entity_count,
            "generated_from": list(doc.meta.generated_from),
        },
    }


def legend_to_jsonable(legend: Legend) -> dict:
    return {
        "entries": [
            {
                "channel": e.channel,
                "question": e.question,
                "items": [[key, value] for key, value in e.items],
            }
            for e in legend.entries
        ]
    }


def parse_scene(text: str) -> SceneDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(f"malformed JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise SceneError("top level is not an object")
    version = raw.get("version")
    if version != SCENE_VERSION:
        raise SceneError(f"unsupported version {version!r}")
    try:
        bounds = Bounds(float(raw["bounds"]["width"]), float(raw["bounds"]["depth"]))
        entities = tuple(_entity_from_jsonable(e) for e in raw["entities"])
        legend = legend_from_jsonable(raw["legend"])
        meta = SceneMeta(
            str(raw["meta"]["title"]),
            int(raw["meta"]["entity_count"]),
            tuple(str(s) for s in raw["meta"]["generated_from"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SceneError(f"malformed scene document: {exc}") from None
    ids = [p.entity.id for p in entities]
    if len(set(ids)) != len(ids):
        raise SceneError("duplicate entity ids")
    if meta.entity_count != len(entities):
        raise SceneError(
            f"count mismatch: meta says {meta.entity_count}, found {len(entities)}"
        )
    return SceneDocument(SCENE_VERSION, bounds, entities, legend, meta)


def _entity_from_jsonable(e: dict) -> PlacedEntity:
    position = e["position"]
    if len(position) != 3:
        raise ValueError("position is not a 3-vector")
    color = e["color"]
    entity = GardenEntity(
        id=str(e["id"]),
        archetype=str(e["archetype"]),
        color=HSL(color["h"], color["s"], color["l"]),
        satellites={str(k): int(v) for k, v in e["satellites"].items()},
        scale=e["scale"],
        tooltip=tuple((str(q), str(v)) for q, v in e["tooltip"]),
    )
    return PlacedEntity(entity, tuple(position))


def legend_from_jsonable(raw: dict) -> Legend:
    entries = tuple(
        LegendEntry(
            channel=str(e["channel"]),
            question=str(e["question"]),
            items=tuple((key, value) for key, value in e["items"]),
        )
        for e in raw["entries"]
    )
    return Legend(entries)


def scene_positions(doc: SceneDocument) -> LayoutResult:
    """The document's positions as a layout, for transition planning."""
    return LayoutResult({p.entity.id: p.position for p in doc.entities})
