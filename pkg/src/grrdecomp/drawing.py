"""Plane straight-line drawings: validation, rotation orders, rooted trees,
and the normal-line subdivision used by split-allowing decompositions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    CrossingEdgesError,
    DuplicateEdgeError,
    DuplicateVertexError,
    NotATreeError,
    OverlappingEdgesError,
    RootNotDegreeOneError,
    UnknownVertexError,
    ZeroLengthEdgeError,
)
from .geometry import Point, Segment, cross, dot, segment_intersection


class Drawing:
    """A validated straight-line drawing.

    Construct through validate_drawing; the raw constructor trusts its
    input and only builds the derived lookup tables.
    """

    __slots__ = ("vertex_ids", "points", "edges", "adjacency")

    def __init__(self, vertices: Sequence[tuple[int, Point]],
                 edges: Sequence[tuple[int, int]]):
        self.vertex_ids: tuple[int, ...] = tuple(vid for vid, _ in vertices)
        self.points: dict[int, Point] = {vid: p for vid, p in vertices}
        self.edges: tuple[tuple[int, int], ...] = tuple(
            (int(u), int(v)) for u, v in edges)
        adjacency: dict[int, list[int]] = {vid: [] for vid in self.vertex_ids}
        for idx, (u, v) in enumerate(self.edges):
            adjacency[u].append(idx)
            adjacency[v].append(idx)
        self.adjacency = {vid: tuple(lst) for vid, lst in adjacency.items()}

    def point(self, vid: int) -> Point:
        return self.points[vid]

    def segment(self, edge_idx: int) -> Segment:
        u, v = self.edges[edge_idx]
        return Segment(self.points[u], self.points[v])

    def other_endpoint(self, edge_idx: int, vid: int) -> int:
        u, v = self.edges[edge_idx]
        return v if vid == u else u

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_ids)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Drawing)
                and self.vertex_ids == other.vertex_ids
                and self.points == other.points
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.vertex_ids, self.edges))


def validate_drawing(vertices: Iterable[tuple[int, Point]],
                     edges: Iterable[tuple[int, int]]) -> Drawing:
    """Check a vertex/edge list and return the Drawing it describes.

    Rejects duplicate ids and coordinates, unknown endpoints, zero-length
    and duplicate edges, and any pair of edges that meets outside a shared
    endpoint (crossing) or in more than a point (overlap).
    """
    vlist = [(int(vid), p) for vid, p in vertices]
    seen_ids: set[int] = set()
    seen_pts: dict[Point, int] = {}
    for vid, p in vlist:
        if vid in seen_ids:
            raise DuplicateVertexError(f"vertex id {vid} repeated")
        if p in seen_pts:
            raise DuplicateVertexError(
                f"vertices {seen_pts[p]} and {vid} share position {p}")
        seen_ids.add(vid)
        seen_pts[p] = vid
    elist = [(int(u), int(v)) for u, v in edges]
    seen_edges: set[frozenset[int]] = set()
    for u, v in elist:
        for w in (u, v):
            if w not in seen_ids:
                raise UnknownVertexError(f"edge references unknown vertex {w}")
        if u == v:
            raise ZeroLengthEdgeError(f"edge joins vertex {u} to itself")
        key = frozenset((u, v))
        if key in seen_edges:
            raise DuplicateEdgeError(f"edge {u}-{v} repeated")
        seen_edges.add(key)
    d = Drawing(vlist, elist)
    for i in range(d.n_edges):
        si = d.segment(i)
        ei = set(d.edges[i])
        for j in range(i + 1, d.n_edges):
            inter = segment_intersection(si, d.segment(j))
            if inter is None:
                continue
            if isinstance(inter, Segment):
                raise OverlappingEdgesError(f"edges {i} and {j} overlap")
            shared = ei & set(d.edges[j])
            if not (shared and inter == d.points[next(iter(shared))]):
                raise CrossingEdgesError(
                    f"edges {i} and {j} cross at {inter}")
    return d


# -- rotation order -----------------------------------------------------------

def _cw_class(v: Point) -> int:
    # clockwise sweep starting from the positive x axis
    if v.y == 0:
        return 0 if v.x > 0 else 4
    if v.x == 0:
        return 2 if v.y < 0 else 6
    if v.x > 0:
        return 1 if v.y < 0 else 7
    return 3 if v.y < 0 else 5


def clockwise_order(d: Drawing, vid: int) -> tuple[int, ...]:
    """Edge indices at vid, sorted clockwise starting from direction +x."""
    if vid not in d.points:
        raise UnknownVertexError(f"unknown vertex {vid}")
    base = d.points[vid]
    dirs = []
    for idx in d.adjacency[vid]:
        w = d.other_endpoint(idx, vid)
        dirs.append((d.points[w] - base, idx))
    import functools

    def cmp(a, b):
        (va, ia), (vb, ib) = a, b
        ca, cb = _cw_class(va), _cw_class(vb)
        if ca != cb:
            return -1 if ca < cb else 1
        c = cross(va, vb)
        if c != 0:
            return -1 if c < 0 else 1
        return 0  # same direction: impossible in a valid drawing

    dirs.sort(key=functools.cmp_to_key(cmp))
    return tuple(idx for _, idx in dirs)


# -- rooted trees -------------------------------------------------------------

@dataclass(frozen=True)
class RootedTree:
    """A tree drawing rooted at a degree-one vertex.

    children lists each vertex's children in clockwise order starting
    after the parent edge; postorder lists vertices children-first.
    """
    drawing: Drawing
    root: int
    parent: Mapping[int, Optional[int]]
    children: Mapping[int, tuple[int, ...]]
    postorder: tuple[int, ...]
    parent_edge: Mapping[int, int]
    subtree: Mapping[int, frozenset[int]]


def _check_tree(d: Drawing) -> None:
    if d.n_vertices == 0 or d.n_edges != d.n_vertices - 1:
        raise NotATreeError("drawing is not a tree (edge count)")
    seen = {d.vertex_ids[0]}
    stack = [d.vertex_ids[0]]
    while stack:
        v = stack.pop()
        for idx in d.adjacency[v]:
            w = d.other_endpoint(idx, v)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != d.n_vertices:
        raise NotATreeError("drawing is not connected")


def root_tree(d: Drawing, root: int) -> RootedTree:
    """Root a tree drawing at a degree-one vertex."""
    if root not in d.points:
        raise UnknownVertexError(f"unknown root {root}")
    _check_tree(d)
    if len(d.adjacency[root]) != 1:
        raise RootNotDegreeOneError(f"root {root} must have degree 1")
    parent: dict[int, Optional[int]] = {root: None}
    parent_edge: dict[int, int] = {}
    children: dict[int, tuple[int, ...]] = {}
    order: list[int] = []
    stack = [root]
    visit: list[int] = []
    while stack:
        v = stack.pop()
        visit.append(v)
        cw = list(clockwise_order(d, v))
        if parent[v] is not None:
            # rotate so the parent edge comes first, then drop it
            pidx = parent_edge[v]
            k = cw.index(pidx)
            cw = cw[k + 1:] + cw[:k]
        kids = []
        for idx in cw:
            w = d.other_endpoint(idx, v)
            kids.append(w)
            parent[w] = v
            parent_edge[w] = idx
            stack.append(w)
        children[v] = tuple(kids)
    subtree: dict[int, frozenset[int]] = {}
    for v in reversed(visit):
        acc = {v}
        for w in children[v]:
            acc |= subtree[w]
        subtree[v] = frozenset(acc)
        order.append(v)
    return RootedTree(drawing=d, root=root, parent=parent, children=children,
                      postorder=tuple(order), parent_edge=parent_edge,
                      subtree=subtree)


def default_root(d: Drawing) -> int:
    """Smallest-id degree-one vertex, the canonical root choice."""
    leaves = [v for v in d.vertex_ids if len(d.adjacency[v]) == 1]
    if not leaves:
        raise NotATreeError("tree has no degree-one vertex")
    return min(leaves)


# -- subdivision --------------------------------------------------------------

@dataclass(frozen=True)
class SubdividedDrawing:
    """Result of subdivide(): the refined drawing plus provenance.

    origin maps each new edge index to (original edge index, t_from, t_to),
    parameters taken along the original edge's stored direction.
    """
    base: Drawing
    drawing: Drawing
    origin: Mapping[int, tuple[int, Fraction, Fraction]]


def subdivide(d: Drawing) -> SubdividedDrawing:
    """Split every edge at the normal lines through other edges' endpoints.

    For each ordered edge pair (e, f), the lines perpendicular to e through
    e's endpoints cut f wherever they cross f's relative interior. Landings
    on f's endpoints and degenerate (parallel) configurations cut nothing.
    """
    cuts: dict[int, set[Fraction]] = {i: set() for i in range(d.n_edges)}
    for e_idx, (u, v) in enumerate(d.edges):
        de = d.points[v] - d.points[u]
        for w in (d.points[u], d.points[v]):
            for f_idx, (a, b) in enumerate(d.edges):
                if f_idx == e_idx:
                    continue
                fa = dot(d.points[a] - w, de)
                fb = dot(d.points[b] - w, de)
                if fa == fb:
                    continue  # f parallel to the normal line: no transversal cut
                t = fa / (fa - fb)
                if 0 < t < 1:
                    cuts[f_idx].add(t)
    vertices = [(vid, d.points[vid]) for vid in d.vertex_ids]
    next_id = max(d.vertex_ids) + 1 if d.vertex_ids else 0
    new_edges: list[tuple[int, int]] = []
    origin: dict[int, tuple[int, Fraction, Fraction]] = {}
    for e_idx, (u, v) in enumerate(d.edges):
        seg = d.segment(e_idx)
        prev_vid, prev_t = u, Fraction(0)
        for t in sorted(cuts[e_idx]):
            vid = next_id
            next_id += 1
            vertices.append((vid, seg.at(t)))
            origin[len(new_edges)] = (e_idx, prev_t, t)
            new_edges.append((prev_vid, vid))
            prev_vid, prev_t = vid, t
        origin[len(new_edges)] = (e_idx, prev_t, Fraction(1))
        new_edges.append((prev_vid, v))
    refined = validate_drawing(vertices, new_edges)
    n, m = d.n_vertices, d.n_edges
    assert refined.n_vertices <= n + 2 * m * (m - 1)
    return SubdividedDrawing(base=d, drawing=refined, origin=origin)
