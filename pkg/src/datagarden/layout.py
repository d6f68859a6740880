"""Ground-plane layouts and transitions.

Two arrangements: a seeded organic scatter with a guaranteed minimum
inter-entity distance (dart throwing over a spatial hash grid), and an
axis-aligned grouped grid keyed on a categorical/ordinal question.
Transitions between layouts interpolate per entity with smoothstep easing
and a lexicographic-rank stagger.

Positions are (x, y, z) with y always 0; the garden plane is flat.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .encoder import GardenEntity
from .survey import SurveySchema

Position = tuple[float, float, float]


@dataclass(frozen=True)
class Bounds:
    width: float
    depth: float

    def __post_init__(self):
        if self.width <= 0 or self.depth <= 0:
            raise ValueError("bounds must be positive")


@dataclass(frozen=True)
class LayoutResult:
    positions: dict[str, Position]


@dataclass(frozen=True)
class TransitionStep:
    start: Position
    end: Position
    delay: float
    duration: float


@dataclass(frozen=True)
class TransitionPlan:
    steps: dict[str, TransitionStep]

    def position_at(self, entity_id: str, t: float) -> Position:
        step = self.steps[entity_id]
        if t <= step.delay:
            return step.start
        u = (t - step.delay) / step.duration
        if u >= 1.0:
            return step.end
        s = smoothstep(u)
        return tuple(a + s * (b - a) for a, b in zip(step.start, step.end))


def smoothstep(t: float) -> float:
    """Easing polynomial 3t^2 - 2t^3 on [0, 1]."""
    return 3.0 * t * t - 2.0 * t * t * t


class CapacityError(Exception):
    """Organic placement could not fit all entities at the requested spacing."""

    def __init__(self, requested: int, achieved: int):
        super().__init__(
            f"placed {achieved} of {requested} entities before exhausting retries"
        )
        self.requested = requested
        self.achieved = achieved


# Consecutive rejected darts before giving up.
_MAX_REJECTIONS = 1000


def organic_layout(
    entity_ids: list[str], bounds: Bounds, min_sep: float, seed: int
) -> LayoutResult:
    """Seeded dart throwing: uniform candidates, rejected within min_sep of
    any accepted point. Deterministic in (ids, bounds, min_sep, seed); the
    PRNG is Python's Mersenne Twister seeded with the given integer.
    """
    if min_sep <= 0:
        raise ValueError("min_sep must be positive")
    rng = random.Random(seed)
    cell = min_sep / math.sqrt(2.0)
    grid: dict[tuple[int, int], list[tuple[float, float]]] = {}
    accepted: list[tuple[float, float]] = []

    def fits(x: float, z: float) -> bool:
        ci, cj = int(x / cell), int(z / cell)
        for di in range(-2, 3):
            for dj in range(-2, 3):
                for nx, nz in grid.get((ci + di, cj + dj), ()):
                    dx, dz = x - nx, z - nz
                    if dx * dx + dz * dz < min_sep * min_sep:
                        return False
        return True

    for _ in entity_ids:
        rejections = 0
        while True:
            x = rng.uniform(0.0, bounds.width)
            z = rng.uniform(0.0, bounds.depth)
            if fits(x, z):
                grid.setdefault((int(x / cell), int(z / cell)), []).append((x, z))
                accepted.append((x, z))
                break
            rejections += 1
            if rejections >= _MAX_REJECTIONS:
                raise CapacityError(len(entity_ids), len(accepted))

    return LayoutResult(
        {eid: (x, 0.0, z) for eid, (x, z) in zip(entity_ids, accepted)}
    )


class GroupingError(Exception):
    pass


def grouped_layout(
    entities: list[GardenEntity],
    group_question: str,
    schema: SurveySchema,
    spacing: float,
) -> LayoutResult:
    """Axis-aligned blocks, one per declared value, in declaration order
    along x. Within a block, members sorted by id fill a ceil(sqrt(n))-wide
    grid column-first. Entities without an answer form a trailing block.
    """
    if spacing <= 0:
        raise ValueError("spacing must be positive")
    question = schema.by_name(group_question)
    if question is None:
        raise GroupingError(f"unknown question {group_question!r}")
    if not question.is_groupable():
        raise GroupingError(f"question {group_question!r} is not groupable")

    by_value: dict[str, list[GardenEntity]] = {v: [] for v in question.values}
    unanswered: list[GardenEntity] = []
    for entity in entities:
        value = dict(entity.tooltip).get(group_question)
        if value in by_value:
            by_value[value].append(entity)
        else:
            unanswered.append(entity)

    groups = [by_value[v] for v in question.values]
    if unanswered:
        groups.append(unanswered)

    positions: dict[str, Position] = {}
    x_offset = 0.0
    first = True
    for members in groups:
        n = len(members)
        if n == 0:
            continue
        if not first:
            x_offset += 2.0 * spacing
        first = False
        cols = math.ceil(math.sqrt(n))
        for m, entity in enumerate(sorted(members, key=lambda e: e.id)):
            col, row = m % cols, m // cols
            positions[entity.id] = (x_offset + col * spacing, 0.0, row * spacing)
        x_offset += (cols - 1) * spacing
    return LayoutResult(positions)


def plan_transition(
    from_layout: LayoutResult,
    to_layout: LayoutResult,
    duration: float,
    stagger: float,
) -> TransitionPlan:
    """Per-entity delay = stagger * rank with ids in lexicographic order."""
    if set(from_layout.positions) != set(to_layout.positions):
        raise ValueError("transition endpoints cover different entity sets")
    if duration <= 0:
        raise ValueError("duration must be positive")
    if stagger < 0:
        raise ValueError("stagger must be non-negative")
    steps = {}
    for rank, eid in enumerate(sorted(from_layout.positions)):
        steps[eid] = TransitionStep(
            start=from_layout.positions[eid],
            end=to_layout.positions[eid],
            delay=stagger * rank,
            duration=duration,
        )
    return TransitionPlan(steps)
