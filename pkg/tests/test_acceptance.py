"""End-to-end acceptance checks, one test per criterion.

Each test prints a single PASS/FAIL line (run with -s to see them on
success). Expected values come from independent brute-force oracles, not
from the code paths under test.
"""

import json
import math
import random
import time
from contextlib import contextmanager
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from datagarden.cli import main as cli_main
from datagarden.encoder import encode, palette_color
from datagarden.layout import Bounds, grouped_layout, organic_layout
from datagarden.mapping import derive_legend
from datagarden.scene import parse_scene, serialize_scene
from datagarden.server import create_app
from datagarden.survey import MISSING
from scene_gen import random_scene

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

SAMPLE_ARGS = [
    "--schema", str(DATA_DIR / "sample_schema.dgs"),
    "--mapping", str(DATA_DIR / "sample_mapping.dgm"),
    "--data", str(DATA_DIR / "sample_responses.csv"),
]


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"FAIL {name}")
        raise
    print(f"PASS {name}")


def bins_oracle(value, thresholds):
    return sum(1 for t in thresholds if value >= t)


def test_paper_mapping_fidelity(sample_records, sample_mapping, sample_schema):
    with criterion("paper-mapping fidelity"):
        started = time.monotonic()
        assert len(sample_records) >= 24
        entities = encode(sample_records, sample_mapping, sample_schema)

        for rec, entity in zip(sample_records, entities):
            if rec.values["role"] == "student":
                assert entity.archetype == "flower"
            elif rec.values["role"] == "faculty":
                assert entity.archetype == "tree"
            value = rec.values["plastic_usage"]
            expected = 0 if value is MISSING else bins_oracle(value, (2, 4, 6))
            assert entity.satellites["cloud"] == expected

        mbti = sample_schema.by_name("mbti").values
        assert len(mbti) == 16
        hues = {palette_color(m, sorted(mbti)).h for m in mbti}
        assert len(hues) == 16
        assert time.monotonic() - started < 1.0


def test_organic_layout_invariants():
    with criterion("organic layout invariants (N=500)"):
        started = time.monotonic()
        ids = [f"r{i}" for i in range(500)]
        result = organic_layout(ids, Bounds(40, 40), 1.0, seed=42)
        points = list(result.positions.values())
        assert len(points) == 500
        for i in range(500):
            xi, yi, zi = points[i]
            assert yi == 0.0
            assert 0 <= xi <= 40 and 0 <= zi <= 40
            for j in range(i + 1, 500):
                assert math.dist(points[i], points[j]) >= 1.0
        again = organic_layout(ids, Bounds(40, 40), 1.0, seed=42)
        serialized = json.dumps({k: list(v) for k, v in result.positions.items()})
        reserialized = json.dumps({k: list(v) for k, v in again.positions.items()})
        assert serialized == reserialized
        assert time.monotonic() - started < 5.0


def test_grouped_layout_oracle(sample_schema, sample_mapping):
    with criterion("grouped layout oracle (N=100, 4 groups)"):
        from datagarden.mapping import parse_mapping
        from datagarden.survey import parse_responses, parse_schema

        schema = parse_schema(
            "question house : categorical { north, east, south, west }"
        )
        spec = parse_mapping("map archetype by house { default -> flower }")
        values = ["north", "east", "south", "west"]
        rows = ["id,house"] + [
            f"e{i:03d},{values[i % 4]}" for i in range(100)
        ]
        records = parse_responses("\n".join(rows) + "\n", schema)
        entities = encode(records, spec, schema)
        spacing = 2.0
        result = grouped_layout(entities, "house", schema, spacing)

        # (b) all positions pairwise distinct
        assert len(set(result.positions.values())) == 100

        # (a) same-group iff same block, (c) closed-form grid positions
        value_of = {r.id: r.values["house"] for r in records}
        x_offset = 0.0
        blocks = {}
        for value in values:
            members = sorted(eid for eid, v in value_of.items() if v == value)
            cols = math.ceil(math.sqrt(len(members)))
            for m, eid in enumerate(members):
                expected = (
                    x_offset + (m % cols) * spacing,
                    0.0,
                    (m // cols) * spacing,
                )
                assert result.positions[eid] == expected
            blocks[value] = (x_offset, x_offset + (cols - 1) * spacing)
            x_offset += (cols - 1) * spacing + 2 * spacing
        for a in records:
            for b in records:
                xa = result.positions[a.id][0]
                lo, hi = blocks[value_of[b.id]]
                in_block = lo <= xa <= hi
                same_group = value_of[a.id] == value_of[b.id]
                assert in_block == same_group


def test_serialization_round_trips():
    with criterion("serialization round trips (1000 random documents)"):
        rng = random.Random(20240817)
        for _ in range(1000):
            doc = random_scene(rng)
            text = serialize_scene(doc)
            parsed = parse_scene(text)
            assert parsed == doc  # structural identity
            assert serialize_scene(parsed) == text  # byte identity


def test_service_contract(tmp_path, sample_schema, sample_records, sample_mapping):
    with criterion("service contract"):
        scene_path = tmp_path / "scene.json"
        status = cli_main(
            ["build", *SAMPLE_ARGS, "--out", str(scene_path),
             "--bounds", "40x40", "--min-sep", "1.5", "--seed", "42"]
        )
        assert status == 0
        built_bytes = scene_path.read_bytes()
        doc = parse_scene(built_bytes.decode("utf-8"))
        client = TestClient(create_app(doc, sample_schema))

        # /api/scene is byte-identical to the built file
        assert client.get("/api/scene").content == built_bytes

        # /api/entity/{id} matches the encoder for 10 sampled ids
        entities = encode(sample_records, sample_mapping, sample_schema)
        sampled = random.Random(7).sample(entities, 10)
        for entity in sampled:
            resp = client.get(f"/api/entity/{entity.id}")
            assert resp.status_code == 200
            assert resp.json() == [[q, v] for q, v in entity.tooltip]

        # grouped layout covers exactly the scene's id set
        resp = client.post("/api/layout", json={"mode": "grouped", "group_by": "mbti"})
        assert resp.status_code == 200
        ids = {p.entity.id for p in doc.entities}
        assert set(resp.json()["transition"]["steps"]) == ids
        assert set(resp.json()["positions"]) == ids

        # grouping by a numeric question is semantically invalid
        assert (
            client.post(
                "/api/layout", json={"mode": "grouped", "group_by": "plastic_usage"}
            ).status_code
            == 422
        )

        assert client.get("/api/entity/unknown").status_code == 404


MALFORMED_SCHEMAS = {
    "inverted_range.dgs": ("question age : numeric [30, 18]\n", "numeric range inverted"),
    "empty.dgs": ("", "no questions declared"),
    "dup_name.dgs": (
        "question a : categorical { x }\nquestion a : categorical { y }\n",
        "duplicate question name",
    ),
    "empty_values.dgs": ("question a : categorical { }\n", "empty value list"),
}

MALFORMED_MAPPINGS = {
    "unknown_question.dgm": (
        "map archetype by role { student -> flower ; faculty -> tree }\n"
        "map color by zodiac palette distinct\n",
        "unknown question zodiac",
    ),
    "incompatible.dgm": (
        "map archetype by role { student -> flower ; faculty -> tree }\n"
        "map satellites cloud by mbti bins [1]\n",
        "incompatible kind",
    ),
    "bins_not_ascending.dgm": (
        "map archetype by role { student -> flower ; faculty -> tree }\n"
        "map satellites cloud by plastic_usage bins [4, 2]\n",
        "thresholds not ascending",
    ),
    "no_archetype.dgm": (
        "map color by mbti palette distinct\n",
        "missing archetype binding",
    ),
    "uncovered.dgm": (
        "map archetype by role { student -> flower }\n",
        "do not cover 'faculty'",
    ),
}

MALFORMED_DATA = {
    "bad_category.csv": ("role,mbti\njanitor,INTJ\n", "not in declared set"),
    "out_of_range.csv": ("role,plastic_usage\nstudent,11\n", "outside"),
    "unparseable.csv": ("role,plastic_usage\nstudent,lots\n", "unparseable"),
    "unknown_column.csv": ("role,zodiac\nstudent,leo\n", "unknown column"),
}


def test_validation_diagnostics(tmp_path, capsys):
    with criterion("validation diagnostics corpus"):
        corpus = (
            [("--schema", n, c, e) for n, (c, e) in MALFORMED_SCHEMAS.items()]
            + [("--mapping", n, c, e) for n, (c, e) in MALFORMED_MAPPINGS.items()]
            + [("--data", n, c, e) for n, (c, e) in MALFORMED_DATA.items()]
        )
        assert len(corpus) >= 10
        for flag, name, content, expected in corpus:
            bad = tmp_path / name
            bad.write_text(content)
            argv = ["validate", *SAMPLE_ARGS]
            argv[argv.index(flag) + 1] = str(bad)
            status = cli_main(argv)
            out = capsys.readouterr().out
            assert status == 1, name
            assert expected in out, name
            assert out.splitlines()[0].startswith("ERROR "), name
