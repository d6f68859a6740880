"""HTTP service over an immutable scene document.

The scene is loaded once at startup and never mutated; re-layouts are
computed per request from the scene's contents, so every handler is
stateless and safe under concurrency. /api/scene returns the canonical
serialized bytes, byte-identical to the scene file on disk.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import FileResponse, JSONResponse

from .layout import (
    GroupingError,
    grouped_layout,
    organic_layout,
    plan_transition,
)
from .scene import (
    SceneDocument,
    legend_to_jsonable,
    scene_positions,
    serialize_scene,
)
from .survey import SurveySchema


@dataclass(frozen=True)
class LayoutRequest:
    mode: str  # "organic" | "grouped"
    group_by: str | None = None
    spacing: float = 2.0
    seed: int = 42
    duration: float = 1.5
    stagger: float = 0.01


class BadRequest(Exception):
    """Structurally malformed layout request (HTTP 400)."""


def parse_layout_request(raw: object) -> LayoutRequest:
    if not isinstance(raw, dict):
        raise BadRequest("request body must be a JSON object")
    mode = raw.get("mode")
    if mode not in ("organic", "grouped"):
        raise BadRequest(f"mode must be 'organic' or 'grouped', got {mode!r}")
    if mode == "grouped" and not isinstance(raw.get("group_by"), str):
        raise BadRequest("grouped mode requires a 'group_by' question name")
    def number(key, default):
        value = raw.get(key, default)
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise BadRequest(f"{key} must be a number")
        return value
    seed = raw.get("seed", 42)
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise BadRequest("seed must be an integer")
    req = LayoutRequest(
        mode=mode,
        group_by=raw.get("group_by"),
        spacing=float(number("spacing", 2.0)),
        seed=seed,
        duration=float(number("duration", 1.5)),
        stagger=float(number("stagger", 0.01)),
    )
    if req.spacing <= 0:
        raise BadRequest("spacing must be positive")
    if req.duration <= 0:
        raise BadRequest("duration must be positive")
    if req.stagger < 0:
        raise BadRequest("stagger must be non-negative")
    return req


def create_app(
    doc: SceneDocument, schema: SurveySchema, static_dir: str | None = None
) -> FastAPI:
    app = FastAPI(title="datagarden")
    scene_bytes = serialize_scene(doc).encode("utf-8")
    tooltips = {p.entity.id: p.entity.tooltip for p in doc.entities}
    entity_ids = [p.entity.id for p in doc.entities]
    entities = [p.entity for p in doc.entities]
    current = scene_positions(doc)

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.get("/api/scene")
    def api_scene():
        return Response(content=scene_bytes, media_type="application/json")

    @app.get("/api/legend")
    def api_legend():
        return legend_to_jsonable(doc.legend)

    @app.get("/api/entity/{entity_id}")
    def api_entity(entity_id: str):
        pairs = tooltips.get(entity_id)
        if pairs is None:
            return JSONResponse(
                {"error": f"no such entity {entity_id!r}"}, status_code=404
            )
        return [[q, v] for q, v in pairs]

    @app.post("/api/layout")
    async def api_layout(request: Request):
        try:
            raw = json.loads(await request.body())
        except (json.JSONDecodeError, UnicodeDecodeError):
            return JSONResponse({"error": "malformed JSON body"}, status_code=400)
        try:
            req = parse_layout_request(raw)
        except BadRequest as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        try:
            if req.mode == "grouped":
                target = grouped_layout(entities, req.group_by, schema, req.spacing)
            else:
                target = organic_layout(entity_ids, doc.bounds, req.spacing, req.seed)
        except GroupingError as exc:
            return JSONResponse({"error": str(exc)}, status_code=422)
        plan = plan_transition(current, target, req.duration, req.stagger)
        return {
            "positions": {eid: list(pos) for eid, pos in target.positions.items()},
            "transition": {
                "easing": "smoothstep",
                "steps": {
                    eid: {
                        "start": list(step.start),
                        "end": list(step.end),
                        "delay": step.delay,
                        "duration": step.duration,
                    }
                    for eid, step in plan.steps.items()
                },
            },
        }

    if static_dir is not None:
        root = Path(static_dir)

        @app.get("/{path:path}")
        def static_file(path: str):
            target = (root / (path or "index.html")).resolve()
            if root.resolve() not in target.parents and target != root.resolve():
                return JSONResponse({"error": "not found"}, status_code=404)
            if target.is_dir():
                target = target / "index.html"
            if not target.is_file():
                return JSONResponse({"error": "not found"}, status_code=404)
            return FileResponse(target)

    return app
