"""Seeded random SceneDocument generator for round-trip tests."""

import random
import string

from datagarden.encoder import HSL, GardenEntity
from datagarden.layout import Bounds, LayoutResult
from datagarden.mapping import Legend, LegendEntry
from datagarden.scene import SceneDocument, assemble_scene


def _word(rng):
    return "".join(rng.choices(string.ascii_lowercase, k=rng.randint(1, 8)))


def random_scene(rng: random.Random) -> SceneDocument:
    n = rng.randint(0, 12)
    bounds = Bounds(rng.uniform(1, 100), rng.uniform(1, 100))
    entities = []
    positions = {}
    for i in range(n):
        eid = f"{_word(rng)}{i}"
        satellites = {_word(rng): rng.randint(0, 5) for _ in range(rng.randint(0, 3))}
        tooltip = tuple(
            (_word(rng), _word(rng)) for _ in range(rng.randint(0, 4))
        )
        entities.append(
            GardenEntity(
                id=eid,
                archetype=rng.choice(["flower", "tree", "shrub"]),
                color=HSL(rng.uniform(0, 360), 70.0, 50.0),
                satellites=satellites,
                scale=rng.uniform(0.5, 2.0),
                tooltip=tooltip,
            )
        )
        positions[eid] = (
            rng.uniform(0, bounds.width),
            0.0,
            rng.uniform(0, bounds.depth),
        )
    legend = Legend(
        tuple(
            LegendEntry(
                channel=rng.choice(["archetype", "color", "scale", "satellites:x"]),
                question=_word(rng),
                items=tuple((_word(rng), _word(rng)) for _ in range(rng.randint(0, 5))),
            )
            for _ in range(rng.randint(0, 4))
        )
    )
    return assemble_scene(
        entities,
        LayoutResult(positions),
        legend,
        bounds,
        title=_word(rng),
        generated_from=[_word(rng) + ".csv"],
    )
