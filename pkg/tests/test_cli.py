import json
from pathlib import Path

import pytest

from datagarden.cli import main

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

SAMPLE = [
    "--schema", str(DATA_DIR / "sample_schema.dgs"),
    "--mapping", str(DATA_DIR / "sample_mapping.dgm"),
    "--data", str(DATA_DIR / "sample_responses.csv"),
]


def run(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


def test_validate_sample_ok(capsys):
    assert run(["validate", *SAMPLE]) == 0
    assert capsys.readouterr().out == ""


def test_validate_missing_file():
    assert run(["validate", *SAMPLE[:4], "--data", "/nonexistent.csv"]) == 2


def test_validate_unknown_question(tmp_path, capsys):
    mapping = tmp_path / "bad.dgm"
    mapping.write_text(
        "map archetype by role { student -> flower ; faculty -> tree }\n"
        "map color by zodiac palette distinct\n"
    )
    argv = ["validate", *SAMPLE]
    argv[4] = str(mapping)
    assert run(argv) == 1
    out = capsys.readouterr().out
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 1
    assert lines[0].startswith("ERROR")
    assert "unknown question zodiac" in lines[0]
    assert f"{mapping}:" in lines[0]


def test_validate_syntax_error_reports_line(tmp_path, capsys):
    schema = tmp_path / "bad.dgs"
    schema.write_text("question role : categorical { student,, }\n")
    argv = ["validate", *SAMPLE]
    argv[2] = str(schema)
    assert run(argv) == 1
    assert f"ERROR {schema}:1 " in capsys.readouterr().out


def test_build_writes_scene(tmp_path):
    out = tmp_path / "scene.json"
    argv = ["build", *SAMPLE, "--out", str(out), "--bounds", "40x40",
            "--min-sep", "1.5", "--seed", "42"]
    assert run(argv) == 0
    doc = json.loads(out.read_text())
    assert doc["version"] == "datagarden-scene/1"
    csv_rows = (DATA_DIR / "sample_responses.csv").read_text().strip().splitlines()
    assert doc["meta"]["entity_count"] == len(csv_rows) - 1
    assert doc["meta"]["generated_from"] == [
        "sample_schema.dgs", "sample_mapping.dgm", "sample_responses.csv"
    ]


def test_build_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    base = ["build", *SAMPLE, "--bounds", "40x40", "--min-sep", "1.5", "--seed", "42"]
    assert run(base + ["--out", str(a)]) == 0
    assert run(base + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_build_capacity_error(tmp_path, capsys):
    out = tmp_path / "scene.json"
    argv = ["build", *SAMPLE, "--out", str(out), "--bounds", "40x40",
            "--min-sep", "30", "--seed", "42"]
    assert run(argv) == 1
    assert "placed" in capsys.readouterr().out
    assert not out.exists()


@pytest.mark.parametrize(
    "name,content,expected",
    [
        ("inverted.dgs", "question age : numeric [30, 18]\n", "numeric range inverted"),
        ("empty.dgs", "", "no questions declared"),
        ("dup.dgs",
         "question a : categorical { x }\nquestion a : categorical { y }\n",
         "duplicate question name"),
        ("emptyvals.dgs", "question a : categorical { }\n", "empty value list"),
    ],
)
def test_validate_schema_corpus(tmp_path, capsys, name, content, expected):
    schema = tmp_path / name
    schema.write_text(content)
    argv = ["validate", *SAMPLE]
    argv[2] = str(schema)
    assert run(argv) == 1
    assert expected in capsys.readouterr().out


@pytest.mark.parametrize(
    "content,expected",
    [
        ("map archetype by role { student -> flower ; faculty -> tree }\n"
         "map satellites cloud by plastic_usage bins [4, 2]\n",
         "thresholds not ascending"),
        ("map color by mbti palette distinct\n", "missing archetype binding"),
        ("map archetype by role { student -> flower ; faculty -> tree }\n"
         "map satellites cloud by mbti bins [1]\n",
         "incompatible kind"),
        ("map archetype by role { student -> flower }\n",
         "do not cover 'faculty'"),
    ],
)
def test_validate_mapping_corpus(tmp_path, capsys, content, expected):
    mapping = tmp_path / "m.dgm"
    mapping.write_text(content)
    argv = ["validate", *SAMPLE]
    argv[4] = str(mapping)
    assert run(argv) == 1
    assert expected in capsys.readouterr().out


@pytest.mark.parametrize(
    "content,expected",
    [
        ("role,mbti\njanitor,INTJ\n", "not in declared set"),
        ("role,plastic_usage\nstudent,11\n", "outside"),
        ("role,plastic_usage\nstudent,lots\n", "unparseable"),
        ("role,zodiac\nstudent,leo\n", "unknown column"),
    ],
)
def test_validate_data_corpus(tmp_path, capsys, content, expected):
    data = tmp_path / "d.csv"
    data.write_text(content)
    argv = ["validate", *SAMPLE]
    argv[6] = str(data)
    assert run(argv) == 1
    assert expected in capsys.readouterr().out
