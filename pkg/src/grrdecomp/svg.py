"""Deterministic SVG rendering of drawings, polygons, and overlays.

Output is plain SVG 1.1 text built from sorted inputs with fixed
"%.4f" coordinate formatting, so identical scenes render to identical
bytes. The y axis is flipped once here; nothing else in the package
touches floats.
"""
from __future__ import annotations

from typing import Optional

from .analysis import ConflictWitness, GreedyTrace
from .drawing import Drawing
from .geometry import Point, Polygon
from .polydecomp import PolygonDecomposition, TriangulatedPolygon
from .treedecomp import Partition

PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def _fmt(x) -> str:
    out = "%.4f" % float(x)
    if out == "-0.0000":
        return "0.0000"
    return out


def _xy(p: Point) -> tuple[str, str]:
    return _fmt(p.x), _fmt(-p.y)


def _collect_points(scene, overlay) -> list[Point]:
    pts: list[Point] = []
    if isinstance(scene, Drawing):
        pts += [scene.points[v] for v in scene.vertex_ids]
    elif isinstance(scene, TriangulatedPolygon):
        pts += list(scene.polygon.points)
    elif isinstance(scene, Polygon):
        pts += list(scene.points)
    if isinstance(overlay, GreedyTrace):
        pts += list(overlay.waypoints)
        if overlay.failure_at is not None:
            pts.append(overlay.failure_at)
    if isinstance(overlay, ConflictWitness):
        pts += [overlay.p, overlay.hit]
    if isinstance(overlay, (list, tuple)):
        for w in overlay:
            if isinstance(w, ConflictWitness):
                pts += [w.p, w.hit]
    return pts


def _poly_points_attr(points) -> str:
    return " ".join("%s,%s" % _xy(p) for p in points)


def render_svg(scene, overlay=None) -> str:
    """Render a Drawing, Polygon, or TriangulatedPolygon plus one overlay.

    Overlays: Partition (colors drawing edges), PolygonDecomposition
    (colors triangles by piece), GreedyTrace (waypoint polyline, failure
    marker), a ConflictWitness or list of them (dashed normals).
    """
    pts = _collect_points(scene, overlay)
    if not pts:
        raise ValueError("nothing to render")
    xs = sorted(float(p.x) for p in pts)
    ys = sorted(float(-p.y) for p in pts)
    w = xs[-1] - xs[0]
    h = ys[-1] - ys[0]
    margin = 0.05 * max(w, h, 1.0)
    vb = (xs[0] - margin, ys[0] - margin, w + 2 * margin, h + 2 * margin)
    stroke_w = _fmt(max(w, h, 1.0) / 200.0)
    marker_r = _fmt(max(w, h, 1.0) / 80.0)

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="%s %s %s %s">'
        % tuple(_fmt(v) for v in vb)
    ]

    if isinstance(scene, TriangulatedPolygon):
        piece_of = {}
        if isinstance(overlay, PolygonDecomposition):
            for ci, piece in enumerate(overlay.pieces):
                for t in piece:
                    piece_of[t] = ci
        for ti, tri in enumerate(scene.triangles):
            color = (PALETTE[piece_of[ti] % len(PALETTE)]
                     if ti in piece_of else "#dddddd")
            tri_pts = [scene.polygon.points[v] for v in tri]
            parts.append(
                '<polygon points="%s" fill="%s" fill-opacity="0.55" '
                'stroke="none"/>' % (_poly_points_attr(tri_pts), color))
        for a, b in scene.diagonals:
            (x1, y1), (x2, y2) = (_xy(scene.polygon.points[a]),
                                  _xy(scene.polygon.points[b]))
            parts.append(
                '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="#999999" '
                'stroke-width="%s" stroke-dasharray="2,2"/>'
                % (x1, y1, x2, y2, stroke_w))
        parts.append(
            '<polygon points="%s" fill="none" stroke="#333333" '
            'stroke-width="%s"/>'
            % (_poly_points_attr(scene.polygon.points), stroke_w))
    elif isinstance(scene, Polygon):
        parts.append(
            '<polygon points="%s" fill="#eeeeee" stroke="#333333" '
            'stroke-width="%s"/>'
            % (_poly_points_attr(scene.points), stroke_w))
    elif isinstance(scene, Drawing):
        owner = {}
        if isinstance(overlay, Partition):
            for ci, comp in enumerate(overlay.components):
                for e in comp:
                    owner[e] = ci
        for eidx, (u, v) in enumerate(scene.edges):
            color = (PALETTE[owner[eidx] % len(PALETTE)]
                     if eidx in owner else "#333333")
            (x1, y1), (x2, y2) = _xy(scene.points[u]), _xy(scene.points[v])
            parts.append(
                '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="%s" '
                'stroke-width="%s"/>' % (x1, y1, x2, y2, color, stroke_w))
        for vid in scene.vertex_ids:
            cx, cy = _xy(scene.points[vid])
            parts.append(
                '<circle cx="%s" cy="%s" r="%s" fill="#333333"/>'
                % (cx, cy, marker_r))
    else:
        raise TypeError(f"cannot render {type(scene).__name__}")

    witnesses = []
    if isinstance(overlay, ConflictWitness):
        witnesses = [overlay]
    elif isinstance(overlay, (list, tuple)):
        witnesses = [w for w in overlay if isinstance(w, ConflictWitness)]
    for wit in witnesses:
        (x1, y1), (x2, y2) = _xy(wit.p), _xy(wit.hit)
        parts.append(
            '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="#d62728" '
            'stroke-width="%s" stroke-dasharray="4,3"/>'
            % (x1, y1, x2, y2, stroke_w))
        parts.append('<circle cx="%s" cy="%s" r="%s" fill="#d62728"/>'
                     % (x2, y2, marker_r))

    if isinstance(overlay, GreedyTrace):
        parts.append(
            '<polyline points="%s" fill="none" stroke="#1f77b4" '
            'stroke-width="%s"/>'
            % (_poly_points_attr(overlay.waypoints), stroke_w))
        sx, sy = _xy(overlay.waypoints[0])
        parts.append('<circle cx="%s" cy="%s" r="%s" fill="#2ca02c"/>'
                     % (sx, sy, marker_r))
        if overlay.failure_at is not None:
            fx, fy = _xy(overlay.failure_at)
            parts.append(
                '<circle cx="%s" cy="%s" r="%s" fill="none" '
                'stroke="#d62728" stroke-width="%s"/>'
                % (fx, fy, marker_r, stroke_w))

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
