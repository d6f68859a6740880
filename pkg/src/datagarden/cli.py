"""Command line entry points: validate, build, serve.

    datagarden validate --schema s.dgs --mapping m.dgm --data d.csv
    datagarden build    --schema s.dgs --mapping m.dgm --data d.csv \
                        --out scene.json --bounds 40x40 --min-sep 1.5 --seed 42
    datagarden serve    --scene scene.json --schema s.dgs --port 8080 [--static dir]

Exit codes: 0 success, 1 validation/layout failure, 2 unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dsl import ParseError
from .encoder import EncodeError, encode
from .layout import Bounds, CapacityError, organic_layout
from .mapping import derive_legend, parse_mapping, validate_mapping
from .scene import assemble_scene, serialize_scene
from .survey import ResponseError, parse_responses, parse_schema, validate_records


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="datagarden")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check schema, mapping, and data")
    _add_input_flags(p_validate)

    p_build = sub.add_parser("build", help="build a scene file")
    _add_input_flags(p_build)
    p_build.add_argument("--out", required=True)
    p_build.add_argument("--bounds", default="40x40", help="ground plane, WxD")
    p_build.add_argument("--min-sep", type=float, default=1.5)
    p_build.add_argument("--seed", type=int, default=42)
    p_build.add_argument("--title", default="datagarden")

    p_serve = sub.add_parser("serve", help="serve a built scene over HTTP")
    p_serve.add_argument("--scene", required=True)
    p_serve.add_argument("--schema", required=True)
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--static", default=None)

    args = parser.parse_args(argv)
    if args.command == "validate":
        return _cmd_validate(args)
    if args.command == "build":
        return _cmd_build(args)
    return _cmd_serve(args)


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--schema", required=True)
    p.add_argument("--mapping", required=True)
    p.add_argument("--data", required=True)


class _Invalid(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"ERROR {path}:0 unreadable file: {exc}", file=sys.stderr)
        raise SystemExit(2) from None


def _load_validated(args):
    """Parse and cross-validate the three inputs, printing diagnostics.

    Raises _Invalid if anything is wrong; SystemExit(2) on unreadable files.
    """
    schema_text = _read(args.schema)
    mapping_text = _read(args.mapping)
    data_text = _read(args.data)

    try:
        schema = parse_schema(schema_text)
    except ParseError as exc:
        print(f"ERROR {args.schema}:{exc.line} {exc.message}")
        raise _Invalid from None
    try:
        mapping = parse_mapping(mapping_text)
    except ParseError as exc:
        print(f"ERROR {args.mapping}:{exc.line} {exc.message}")
        raise _Invalid from None
    try:
        records = parse_responses(data_text, schema)
    except ResponseError as exc:
        line = (exc.row + 2) if exc.row is not None else 1
        print(f"ERROR {args.data}:{line} {exc}")
        raise _Invalid from None

    failed = False
    for diag in validate_mapping(mapping, schema):
        print(f"ERROR {args.mapping}:{diag.line or 1} {diag}")
        failed = True
    for diag in validate_records(records, schema):
        print(f"ERROR {args.data}:{diag.line or 1} {diag}")
        failed = True
    if failed:
        raise _Invalid
    return schema, mapping, records


def _cmd_validate(args) -> int:
    try:
        _load_validated(args)
    except _Invalid:
        return 1
    return 0


def _cmd_build(args) -> int:
    try:
        schema, mapping, records = _load_validated(args)
    except _Invalid:
        return 1
    try:
        width, depth = (float(part) for part in args.bounds.lower().split("x"))
    except ValueError:
        print(f"ERROR bounds:0 malformed bounds {args.bounds!r}, expected WxD")
        return 1
    bounds = Bounds(width, depth)
    try:
        entities = encode(records, mapping, schema)
    except EncodeError as exc:
        print(f"ERROR {args.data}:1 {exc}")
        return 1
    try:
        layout = organic_layout([e.id for e in entities], bounds, args.min_sep, args.seed)
    except CapacityError as exc:
        print(f"ERROR layout:0 {exc}")
        return 1
    legend = derive_legend(mapping, schema, records)
    sources = [Path(p).name for p in (args.schema, args.mapping, args.data)]
    doc = assemble_scene(entities, layout, legend, bounds, args.title, sources)
    Path(args.out).write_text(serialize_scene(doc), encoding="utf-8")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .scene import parse_scene
    from .server import create_app

    doc = parse_scene(_read(args.scene))
    schema = parse_schema(_read(args.schema))
    app = create_app(doc, schema, static_dir=args.static)
    uvicorn.run(app, host="127.0.0.1", port=args.port, log_level="warning")
    return 0


if __name__ == "__main__":
    sys.exit(main())
