"""SVG rendering of a graph and, optionally, a routing trace."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Optional

from .builder import OrderedThetaGraph
from .engine import Trace

VIEW = 1000.0
MARGIN = 0.05 * VIEW


def _transform(graph: OrderedThetaGraph):
    xs = [p.x for p in graph.points] or [0.0]
    ys = [p.y for p in graph.points] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (VIEW - 2 * MARGIN) / span
    x0, y0 = min(xs), min(ys)

    def to_screen(p):
        # screen y grows downwards
        return MARGIN + (p.x - x0) * scale, VIEW - MARGIN - (p.y - y0) * scale

    return to_screen


def render_svg(graph: OrderedThetaGraph, trace: Optional[Trace] = None) -> str:
    """One ``<line>`` per edge, one ``<circle>`` per vertex; the trace becomes a ``<polyline>``."""
    to_screen = _transform(graph)
    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        viewBox=f"0 0 {VIEW:g} {VIEW:g}",
        width=f"{VIEW:g}",
        height=f"{VIEW:g}",
    )
    edges = ET.SubElement(svg, "g", {"class": "edges", "stroke": "#777", "stroke-width": "1.5"})
    for a, b in graph.edges():
        (x1, y1), (x2, y2) = to_screen(graph.point(a)), to_screen(graph.point(b))
        ET.SubElement(edges, "line", x1=f"{x1:.3f}", y1=f"{y1:.3f}", x2=f"{x2:.3f}", y2=f"{y2:.3f}")
    if trace is not None and trace.hops:
        coords = " ".join(
            "{:.3f},{:.3f}".format(*to_screen(graph.point(v))) for v in trace.vertices()
        )
        ET.SubElement(
            svg, "polyline",
            {"class": "trace", "points": coords, "fill": "none",
             "stroke": "#d62728", "stroke-width": "4", "stroke-opacity": "0.7"},
        )
    verts = ET.SubElement(svg, "g", {"class": "vertices", "fill": "#1f77b4"})
    for vid, p in enumerate(graph.points, start=1):
        cx, cy = to_screen(p)
        c = ET.SubElement(verts, "circle", cx=f"{cx:.3f}", cy=f"{cy:.3f}", r="5")
        ET.SubElement(c, "title").text = f"v{vid}"
    return ET.tostring(svg, encoding="unicode") + "\n"
