"""JSON reading and writing for graphs, drawings and obstacles."""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any

from .drawing import Drawing
from .graph import EmbeddedGraph, Graph, GraphError, build_graph


class InputError(ValueError):
    """A malformed input document."""


def graph_to_json(g: Graph, embedded: EmbeddedGraph | None = None) -> dict:
    out: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if embedded is not None:
        out["rotation"] = [list(r) for r in embedded.rotation]
        u, v = embedded.outer_dart
        out["outer_face_edge"] = [u, v, "left"]
    return out


def graph_from_json(data: Any) -> tuple[Graph, EmbeddedGraph | None]:
    """Parse Graph JSON; ``outer_face_edge`` is ``[u, v, side]`` with side ``left`` or ``right`` of ``u -> v``."""
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise InputError("graph JSON needs 'n' and 'edges'")
    try:
        n = int(data["n"])
        g = build_graph(n, [tuple(e) for e in data["edges"]])
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad graph: {exc}") from exc
    rotation = data.get("rotation")
    if rotation is None:
        return g, None
    ofe = data.get("outer_face_edge")
    if ofe is None or len(ofe) != 3 or ofe[2] not in ("left", "right"):
        raise InputError("a rotation needs 'outer_face_edge': [u, v, 'left'|'right']")
    u, v, side = ofe
    dart = (u, v) if side == "left" else (v, u)
    try:
        emb = EmbeddedGraph(g, tuple(tuple(r) for r in rotation), dart)
    except (GraphError, ValueError, TypeError) as exc:
        raise InputError(f"bad rotation: {exc}") from exc
    return g, emb


def read_json(path: str | Path | None) -> Any:
    """Read JSON from ``path`` (``-`` or ``None`` means stdin)."""
    try:
        if path in (None, "-"):
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def write_text(path: str | Path | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(path).write_text(text if text.endswith("\n") else text + "\n")


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=1, sort_keys=False)


def load_graph(path) -> tuple[Graph, EmbeddedGraph | None]:
    return graph_from_json(read_json(path))


def load_drawing(path) -> Drawing:
    data = read_json(path)
    if not isinstance(data, dict) or "points" not in data or "edges" not in data:
        raise InputError("drawing JSON needs 'points' and 'edges'")
    try:
        return Drawing.from_json(data)
    except (GraphError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad drawing: {exc}") from exc
