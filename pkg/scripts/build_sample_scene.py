#!/usr/bin/env python3
"""Build the bundled sample scene and print a short summary."""

import json
import sys
from collections import Counter
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from datagarden.cli import main  # noqa: E402

OUT = ROOT / "data" / "sample_scene.json"


def run():
    status = main(
        [
            "build",
            "--schema", str(ROOT / "data" / "sample_schema.dgs"),
            "--mapping", str(ROOT / "data" / "sample_mapping.dgm"),
            "--data", str(ROOT / "data" / "sample_responses.csv"),
            "--out", str(OUT),
            "--bounds", "40x40",
            "--min-sep", "1.5",
            "--seed", "42",
            "--title", "sample community garden",
        ]
    )
    if status != 0:
        return status
    doc = json.loads(OUT.read_text())
    archetypes = Counter(e["archetype"] for e in doc["entities"])
    clouds = Counter(e["satellites"].get("cloud", 0) for e in doc["entities"])
    print(f"wrote {OUT}")
    print(f"entities: {doc['meta']['entity_count']}")
    print(f"archetypes: {dict(archetypes)}")
    print(f"cloud counts: {dict(sorted(clouds.items()))}")
    return 0


if __name__ == "__main__":
    sys.exit(run())
