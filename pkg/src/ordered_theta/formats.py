"""Points files, graph JSON and trace JSON."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from .builder import OrderedThetaGraph
from .engine import Trace
from .geometry import Point, PointLike


class FormatError(ValueError):
    pass


def format_points(points: Sequence[PointLike], k: int) -> str:
    lines = [f"{k} {len(points)}"]
    lines += [f"{float(p[0])!r} {float(p[1])!r}" for p in points]
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> tuple[int, list[Point]]:
    """Parse ``k n`` followed by ``n`` lines of ``x y``; blank lines are ignored."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise FormatError("empty points file")
    try:
        k, n = int(rows[0][0]), int(rows[0][1])
        pts = [Point(float(r[0]), float(r[1])) for r in rows[1:]]
    except (IndexError, ValueError) as exc:
        raise FormatError(f"malformed points file: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]) or len(rows[0]) != 2:
        raise FormatError("every line must hold exactly two numbers")
    if len(pts) != n:
        raise FormatError(f"header announces {n} points, found {len(pts)}")
    return k, pts


def read_points(path: str | Path) -> tuple[int, list[Point]]:
    return parse_points(Path(path).read_text(encoding="utf-8"))


def write_points(path: str | Path, points: Sequence[PointLike], k: int) -> None:
    Path(path).write_text(format_points(points, k), encoding="utf-8")


def graph_to_dict(graph: OrderedThetaGraph) -> dict:
    return {
        "k": graph.k,
        "vertices": [{"id": i, "x": p.x, "y": p.y} for i, p in enumerate(graph.points, start=1)],
        "edges": [[a, b] for a, b in graph.edges()],
    }


def graph_to_json(graph: OrderedThetaGraph) -> str:
    return json.dumps(graph_to_dict(graph), sort_keys=True, indent=1) + "\n"


def graph_from_dict(data: dict) -> OrderedThetaGraph:
    try:
        verts = sorted(data["vertices"], key=lambda v: int(v["id"]))
        if [int(v["id"]) for v in verts] != list(range(1, len(verts) + 1)):
            raise FormatError("vertex ids must be exactly 1..n")
        pts = [Point(float(v["x"]), float(v["y"])) for v in verts]
        edges = [(int(a), int(b)) for a, b in data["edges"]]
        return OrderedThetaGraph.from_edges(int(data["k"]), pts, edges)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed graph JSON: {exc!r}") from None


def read_graph(path: str | Path) -> OrderedThetaGraph:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from None
    return graph_from_dict(data)


def write_graph(path: str | Path, graph: OrderedThetaGraph) -> None:
    Path(path).write_text(graph_to_json(graph), encoding="utf-8")


def read_trace(path: str | Path) -> Trace:
    try:
        return Trace.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise FormatError(f"{path}: malformed trace ({exc})") from None


def write_trace(path: str | Path, trace: Trace) -> None:
    Path(path).write_text(trace.to_json(), encoding="utf-8")
