"""Conflict detection, the increasing-chord predicates built on it, and
greedy path tracing inside simple polygons.

An edge e conflicts with an edge f when some normal line (for drawings)
or outward normal ray (for polygon boundaries) erected at an interior
point of e meets f. Conflicts are exactly what destroys greedy
routability, so everything in this package reduces to them.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .drawing import Drawing, clockwise_order
from .errors import (
    DegeneratePathError,
    GRRError,
    InputError,
    InvalidPathFamilyError,
    PointOutsidePolygonError,
    SameTriangleError,
    UnknownEdgeError,
    UnknownTriangleError,
)
from .geometry import (
    ParamInterval,
    Point,
    Polygon,
    Segment,
    dot,
    halfstrip,
    halfstrip_reaches_triangle_interior,
    hp,
    in_hp,
    on_segment,
    point_in_polygon,
    segment_intersection,
)


@dataclass(frozen=True)
class ConflictWitness:
    """Certificate that edge e conflicts with edge f.

    p is the foot on e, hit the struck point of f; the segment p-hit is
    perpendicular to e, p is strictly interior to e, and no point of e
    inside the slab is closer to hit than p is.
    """
    e: int
    f: int
    p: Point
    hit: Point


def _slab_witness(ea: Point, eb: Point, seg: Segment,
                  outward: Optional[Point]) -> Optional[tuple[Point, Point]]:
    """Shared core of the two conflict tests.

    Intersects seg with the open slab of edge ea-eb (and, when outward is
    given, the open outward halfplane); returns (foot, hit) or None.
    """
    de = eb - ea
    dd = dot(de, de)
    fdir = seg.direction()
    iv = ParamInterval()
    s0 = dot(seg.a - ea, de)
    iv.cut(dot(fdir, de), s0, strict=True)
    iv.cut(-dot(fdir, de), dd - s0, strict=True)
    if outward is not None:
        iv.cut(dot(fdir, outward), dot(seg.a - ea, outward), strict=True)
    if not iv.feasible:
        return None
    hit = seg.at(iv.witness())
    foot = ea + de * (dot(hit - ea, de) / dd)
    return foot, hit


def drawing_edges_conflict(d: Drawing, e: int, f: int) -> Optional[ConflictWitness]:
    """Does a normal line at an interior point of edge e meet edge f?"""
    m = d.n_edges
    for idx in (e, f):
        if not 0 <= idx < m:
            raise UnknownEdgeError(f"edge index {idx} out of range")
    if e == f:
        raise ValueError("conflict test needs two distinct edges")
    se = d.segment(e)
    res = _slab_witness(se.a, se.b, d.segment(f), None)
    if res is None:
        return None
    return ConflictWitness(e, f, res[0], res[1])


def conflicting_pairs(d: Drawing) -> tuple[tuple[int, int], ...]:
    """Unordered edge pairs that conflict in at least one direction."""
    out = []
    for i in range(d.n_edges):
        for j in range(i + 1, d.n_edges):
            if (drawing_edges_conflict(d, i, j)
                    or drawing_edges_conflict(d, j, i)):
                out.append((i, j))
    return tuple(out)


def polygon_edges_conflict(poly: Polygon, e: int, f: int
                           ) -> Optional[ConflictWitness]:
    """Does an outward normal ray at an interior point of boundary edge e
    meet boundary edge f?"""
    for idx in (e, f):
        if not 0 <= idx < poly.n:
            raise UnknownEdgeError(f"boundary edge index {idx} out of range")
    if e == f:
        raise ValueError("conflict test needs two distinct edges")
    se = poly.edge(e)
    dirv = se.direction()
    outward = Point(dirv.y, -dirv.x)  # right of a ccw boundary edge
    res = _slab_witness(se.a, se.b, poly.edge(f), outward)
    if res is None:
        return None
    return ConflictWitness(e, f, res[0], res[1])


def polygon_is_grr(poly: Polygon) -> Optional[ConflictWitness]:
    """None when the polygon is greedily routable, else the first witness
    in boundary-index order."""
    for i in range(poly.n):
        for j in range(poly.n):
            if i == j:
                continue
            w = polygon_edges_conflict(poly, i, j)
            if w is not None:
                return w
    return None


def polygon_conflicting_edge_pairs(poly: Polygon) -> tuple[tuple[int, int], ...]:
    out = []
    for i in range(poly.n):
        for j in range(i + 1, poly.n):
            if (polygon_edges_conflict(poly, i, j)
                    or polygon_edges_conflict(poly, j, i)):
                out.append((i, j))
    return tuple(out)


def _dual_step_toward(tp, i: int, j: int) -> int:
    """First triangle after i on the unique dual-tree path to j."""
    prev = {i: None}
    queue = deque([i])
    while queue:
        x = queue.popleft()
        if x == j:
            break
        for y in tp.dual_adjacency[x]:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    if j not in prev:
        raise GRRError("dual graph is not connected")
    x = j
    while prev[x] != i:
        x = prev[x]
    return x


def _strips_reach(tp, i: int, j: int) -> bool:
    # strips leave tau_i through its two edges that are not the diagonal
    # crossed by the dual path toward tau_j
    nxt = _dual_step_toward(tp, i, j)
    shared = set(tp.triangles[i]) & set(tp.triangles[nxt])
    (third,) = set(tp.triangles[i]) - shared
    a, b = sorted(shared)
    pts = tp.polygon.points
    pa, pb, pc = pts[a], pts[b], pts[third]
    tri_j = tuple(pts[v] for v in tp.triangles[j])
    return (halfstrip_reaches_triangle_interior(halfstrip(pb, pc, pa), tri_j)
            or halfstrip_reaches_triangle_interior(halfstrip(pa, pc, pb),
                                                   tri_j))


def triangles_conflict(tp, i: int, j: int) -> bool:
    """Do triangles i and j of a triangulated polygon conflict?

    The strips swept from the far edges of either triangle, away from
    the diagonal it shows to the other one, must cover an interior
    point of that other triangle. Symmetric by construction.
    """
    nt = len(tp.triangles)
    for k in (i, j):
        if not (isinstance(k, int) and 0 <= k < nt):
            raise UnknownTriangleError(f"no triangle {k!r}")
    if i == j:
        raise SameTriangleError("a triangle does not conflict with itself")
    return _strips_reach(tp, i, j) or _strips_reach(tp, j, i)


# -- increasing-chord predicates ----------------------------------------------

def _check_polyline(points: Sequence[Point]) -> tuple[Point, ...]:
    pts = tuple(points)
    if len(pts) < 2:
        raise DegeneratePathError("polyline needs at least two points")
    for a, b in zip(pts, pts[1:]):
        if a == b:
            raise DegeneratePathError("polyline repeats consecutive points")
    return pts


def _self_approaching(pts: Sequence[Point]) -> bool:
    # distance to every later point is non-increasing along each segment,
    # which reduces to: later vertices lie in hp(prev, cur) for every edge
    n = len(pts)
    for i in range(1, n):
        h = hp(pts[i - 1], pts[i])
        for j in range(i + 1, n):
            if not in_hp(h, pts[j]):
                return False
    return True


def path_increasing_chord(points: Sequence[Point]) -> bool:
    """Is the polyline self-approaching in both directions?"""
    pts = _check_polyline(points)
    return _self_approaching(pts) and _self_approaching(pts[::-1])


def tree_increasing_chord(d: Drawing, edge_subset) -> bool:
    """Is the sub-drawing an increasing-chord tree?

    True iff the subset is connected, acyclic, and free of conflicting
    ordered edge pairs.
    """
    subset = sorted(set(edge_subset))
    if not subset:
        raise ValueError("edge subset must be nonempty")
    for idx in subset:
        if not 0 <= idx < d.n_edges:
            raise UnknownEdgeError(f"edge index {idx} out of range")
    verts = set()
    for idx in subset:
        verts.update(d.edges[idx])
    if len(subset) != len(verts) - 1:
        return False
    sset = set(subset)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for idx in d.adjacency[v]:
            if idx in sset:
                w = d.other_endpoint(idx, v)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    if seen != verts:
        return False
    for i in subset:
        for j in subset:
            if i != j and drawing_edges_conflict(d, i, j):
                return False
    return True


# -- path families around a shared origin --------------------------------------

def _union_paths(paths: Sequence[Sequence[Point]]) -> tuple[Drawing, int]:
    """Union polylines from a common origin into a validated tree drawing."""
    from .drawing import validate_drawing

    cleaned = []
    for path in paths:
        try:
            cleaned.append(_check_polyline(path))
        except DegeneratePathError as exc:
            raise InvalidPathFamilyError(str(exc)) from exc
    origin = cleaned[0][0]
    if any(p[0] != origin for p in cleaned):
        raise InvalidPathFamilyError("paths do not share an origin")
    ids: dict[Point, int] = {}
    for path in cleaned:
        for q in path:
            if q not in ids:
                ids[q] = len(ids)
    edges = []
    seen = set()
    for path in cleaned:
        for a, b in zip(path, path[1:]):
            key = frozenset((ids[a], ids[b]))
            if key not in seen:
                seen.add(key)
                edges.append((ids[a], ids[b]))
    try:
        d = validate_drawing(sorted((vid, q) for q, vid in ids.items()), edges)
    except InputError as exc:
        raise InvalidPathFamilyError(f"paths do not union cleanly: {exc}") from exc
    if len(edges) != len(ids) - 1:
        raise InvalidPathFamilyError("path union contains a cycle")
    return d, ids[origin]


def _outer_face_walk(d: Drawing, origin: int) -> list[int]:
    """Vertices visited by the clockwise boundary walk, one full period."""
    e = clockwise_order(d, origin)[0]
    v = origin
    seq = [origin]
    for _ in range(2 * d.n_edges):
        w = d.other_endpoint(e, v)
        seq.append(w)
        cwo = clockwise_order(d, w)
        e = cwo[(cwo.index(e) + 1) % len(cwo)]
        v = w
    if seq[-1] != origin:
        raise GRRError("outer face walk failed to close")
    return seq[:-1]


def clockwise_between(path1: Sequence[Point], path2: Sequence[Point],
                      path3: Sequence[Point]) -> bool:
    """Does the clockwise boundary walk of the union meet the three path
    endpoints in the order path1, path2, path3?"""
    paths = [tuple(path1), tuple(path2), tuple(path3)]
    d, origin = _union_paths(paths)
    walk = _outer_face_walk(d, origin)
    period = len(walk)
    doubled = walk + walk
    id_of = {d.points[vid]: vid for vid in d.vertex_ids}
    t1, t2, t3 = (id_of[p[-1]] for p in paths)
    for i1 in range(period):
        if doubled[i1] != t1:
            continue
        limit = i1 + period
        i2 = next((k for k in range(i1, limit) if doubled[k] == t2), None)
        if i2 is None:
            continue
        i3 = next((k for k in range(i2, limit) if doubled[k] == t3), None)
        if i3 is not None:
            return True
    return False


def four_path_union_ic(path1, path2, path3, path4) -> bool:
    """Is the union of four origin-sharing paths an increasing-chord tree?"""
    d, _ = _union_paths([path1, path2, path3, path4])
    return tree_increasing_chord(d, range(d.n_edges))


# -- greedy tracing -------------------------------------------------------------

@dataclass(frozen=True)
class GreedyTrace:
    waypoints: tuple[Point, ...]
    reached: bool
    failure_at: Optional[Point]


def _segment_param(seg: Segment, q: Point) -> Fraction:
    d = seg.direction()
    if d.x != 0:
        return (q.x - seg.a.x) / d.x
    return (q.y - seg.a.y) / d.y


def _first_exit(poly: Polygon, p: Point, t: Point) -> Optional[Fraction]:
    """Parameter on segment p-t where it first leaves the polygon, or None.

    Grazing contacts do not stop the advance; only a cell of the segment
    whose interior lies outside counts as leaving.
    """
    seg = Segment(p, t)
    lams = {Fraction(0), Fraction(1)}
    for i in range(poly.n):
        inter = segment_intersection(seg, poly.edge(i))
        if inter is None:
            continue
        if isinstance(inter, Segment):
            lams.add(_segment_param(seg, inter.a))
            lams.add(_segment_param(seg, inter.b))
        else:
            lams.add(_segment_param(seg, inter))
    cells = sorted(lams)
    for a, b in zip(cells, cells[1:]):
        mid = seg.at((a + b) / 2)
        if point_in_polygon(poly, mid) == "outside":
            return a
    return None


def _boundary_candidates(poly: Polygon, x: Point) -> tuple[Point, Point]:
    for i, q in enumerate(poly.points):
        if q == x:
            return (poly.points[i - 1], poly.points[(i + 1) % poly.n])
    for i in range(poly.n):
        seg = poly.edge(i)
        if on_segment(x, seg):
            return (seg.a, seg.b)
    raise GRRError(f"exit point {x} is not on the boundary")


def _angle_less(ua: Point, ub: Point, w: Point) -> bool:
    """Is angle(ua, w) strictly smaller than angle(ub, w)? Exact."""
    a, b = dot(ua, w), dot(ub, w)
    if a >= 0 and b < 0:
        return True
    if a < 0 and b >= 0:
        return False
    lhs = a * a * dot(ub, ub)
    rhs = b * b * dot(ua, ua)
    if a >= 0:
        return lhs > rhs
    return lhs < rhs


def trace_greedy_path(poly: Polygon, s: Point, t: Point) -> GreedyTrace:
    """Trace the greedy s-t path: advance straight toward t while possible,
    otherwise slide along the boundary edge whose direction makes the
    smallest angle with the target direction. Fails at a local minimum.
    """
    for q in (s, t):
        if point_in_polygon(poly, q) == "outside":
            raise PointOutsidePolygonError(f"point {q} lies outside the polygon")
    if s == t:
        return GreedyTrace((s,), True, None)
    waypoints = [s]
    p = s
    for _ in range(8 * (poly.n + 2)):
        if p == t:
            return GreedyTrace(tuple(waypoints), True, None)
        lam = _first_exit(poly, p, t)
        if lam is None:
            waypoints.append(t)
            return GreedyTrace(tuple(waypoints), True, None)
        x = Segment(p, t).at(lam)
        if x != p:
            waypoints.append(x)
        cands = sorted(_boundary_candidates(poly, x), key=Point.sort_key)
        v = cands[0]
        for cand in cands[1:]:
            if _angle_less(cand - x, v - x, t - x):
                v = cand
        if dot(t - v, v - x) < 0:
            return GreedyTrace(tuple(waypoints), False, x)
        waypoints.append(v)
        p = v
    raise GRRError("greedy trace exceeded its step budget")
