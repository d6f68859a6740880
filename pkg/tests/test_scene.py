import json
import random

import pytest

from datagarden.encoder import GRAY, GardenEntity, encode
from datagarden.layout import Bounds, LayoutResult, organic_layout
from datagarden.mapping import Legend, derive_legend
from datagarden.scene import (
    SceneError,
    assemble_scene,
    parse_scene,
    serialize_scene,
)
from scene_gen import random_scene


def make_entity(eid):
    return GardenEntity(eid, "flower", GRAY, {"cloud": 1}, 1.0, (("q", "v"),))


def full_layout(entities):
    return LayoutResult({e.id: (1.0, 0.0, 2.0) for e in entities})


def test_assemble_counts():
    entities = [make_entity(f"r{i}") for i in range(3)]
    doc = assemble_scene(
        entities, full_layout(entities), Legend(()), Bounds(10, 10), "t"
    )
    assert doc.meta.entity_count == 3
    assert doc.version == "datagarden-scene/1"


def test_assemble_sorts_by_id():
    entities = [make_entity("b"), make_entity("a")]
    doc = assemble_scene(
        entities, full_layout(entities), Legend(()), Bounds(10, 10), "t"
    )
    assert [p.entity.id for p in doc.entities] == ["a", "b"]


def test_assemble_missing_position():
    entities = [make_entity("r0"), make_entity("r2")]
    layout = LayoutResult({"r0": (0.0, 0.0, 0.0)})
    with pytest.raises(SceneError, match="r2"):
        assemble_scene(entities, layout, Legend(()), Bounds(10, 10), "t")


def test_assemble_duplicate_ids():
    entities = [make_entity("x"), make_entity("x")]
    with pytest.raises(SceneError, match="duplicate"):
        assemble_scene(entities, full_layout(entities), Legend(()), Bounds(10, 10), "t")


def test_assemble_empty():
    doc = assemble_scene([], LayoutResult({}), Legend(()), Bounds(10, 10), "t")
    assert doc.meta.entity_count == 0
    assert '"entity_count":0' in serialize_scene(doc)


def test_entity_keys_lexicographic():
    entities = [make_entity("r0")]
    doc = assemble_scene(
        entities, full_layout(entities), Legend(()), Bounds(10, 10), "t"
    )
    text = serialize_scene(doc)
    entity_obj = json.loads(text)["entities"][0]
    assert list(entity_obj) == sorted(entity_obj)
    # raw text has the keys in order too (json.loads preserves order)
    assert text.index('"archetype"') < text.index('"color"') < text.index('"id"')


def test_round_trip_identity():
    rng = random.Random(7)
    doc = random_scene(rng)
    text = serialize_scene(doc)
    again = parse_scene(text)
    assert again == doc
    assert serialize_scene(again) == text


def test_many_random_round_trips():
    rng = random.Random(1234)
    for _ in range(200):
        doc = random_scene(rng)
        text = serialize_scene(doc)
        assert parse_scene(text) == doc
        assert serialize_scene(parse_scene(text)) == text


def test_version_gate():
    rng = random.Random(7)
    text = serialize_scene(random_scene(rng))
    bad = text.replace("datagarden-scene/1", "datagarden-scene/99")
    with pytest.raises(SceneError, match="unsupported version"):
        parse_scene(bad)


def test_count_mismatch():
    rng = random.Random(8)
    doc = random_scene(rng)
    raw = json.loads(serialize_scene(doc))
    raw["meta"]["entity_count"] = len(raw["entities"]) + 1
    with pytest.raises(SceneError, match="count mismatch"):
        parse_scene(json.dumps(raw))


def test_duplicate_entity_ids_rejected():
    entities = [make_entity("x")]
    doc = assemble_scene(
        entities, full_layout(entities), Legend(()), Bounds(10, 10), "t"
    )
    raw = json.loads(serialize_scene(doc))
    raw["entities"].append(raw["entities"][0])
    raw["meta"]["entity_count"] = 2
    with pytest.raises(SceneError, match="duplicate"):
        parse_scene(json.dumps(raw))


def test_malformed_json():
    with pytest.raises(SceneError, match="malformed JSON"):
        parse_scene("{not json")


def test_pipeline_scene_round_trips(sample_records, sample_mapping, sample_schema):
    entities = encode(sample_records, sample_mapping, sample_schema)
    layout = organic_layout([e.id for e in entities], Bounds(40, 40), 1.5, seed=42)
    legend = derive_legend(sample_mapping, sample_schema, sample_records)
    doc = assemble_scene(entities, layout, legend, Bounds(40, 40), "sample")
    text = serialize_scene(doc)
    assert parse_scene(text) == doc
    assert serialize_scene(parse_scene(text)) == text
