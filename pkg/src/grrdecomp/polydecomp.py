"""Cutting triangulated simple polygons into greedily routable pieces.

Pieces are unions of triangles of a fixed triangulation, cut apart
along its diagonals. A piece is routable exactly when it contains no
conflicting triangle pair, which turns minimization into multicut on
the dual tree: terminals are the conflicting pairs, cut edges are the
diagonals.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .analysis import polygon_is_grr, triangles_conflict
from .errors import (
    BudgetExceededError,
    CrossingDiagonalsError,
    GRRError,
    IncompleteTriangulationError,
    InvalidTriangulationError,
    PieceNotSimpleError,
)
from .geometry import (
    Point,
    Polygon,
    Segment,
    orientation,
    point_in_polygon,
    segment_intersection,
)
from .multicut import Cut, MulticutInstance, approx_gvy, solve_exact_small


class TriangulatedPolygon:
    """A simple polygon with a complete non-crossing diagonal set.

    triangles are counterclockwise vertex-index triples, sorted and
    canonicalized so ids are stable; the dual graph has one node per
    triangle and one edge per diagonal, and is always a tree.
    """

    __slots__ = ("polygon", "diagonals", "triangles", "dual_edges",
                 "dual_adjacency", "_diag_of")

    def __init__(self, polygon: Polygon, diagonals, triangles, dual_edges,
                 dual_adjacency, diag_of):
        self.polygon = polygon
        self.diagonals = diagonals
        self.triangles = triangles
        self.dual_edges = dual_edges
        self.dual_adjacency = dual_adjacency
        self._diag_of = diag_of

    @property
    def n_triangles(self) -> int:
        return len(self.triangles)

    def diagonal_of(self, ti: int, tj: int) -> tuple[int, int]:
        """The diagonal shared by two adjacent triangles."""
        key = (ti, tj) if ti < tj else (tj, ti)
        try:
            return self._diag_of[key]
        except KeyError:
            raise InvalidTriangulationError(
                f"triangles {ti} and {tj} are not adjacent") from None


def _split_triangles(cycle: list[int], diag_set: frozenset) -> list[tuple]:
    if len(cycle) == 3:
        return [tuple(cycle)]
    k = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    for a, b in sorted(diag_set):
        ia, ib = pos.get(a), pos.get(b)
        if ia is None or ib is None:
            continue
        if (ib - ia) % k in (1, k - 1):
            continue
        if ia > ib:
            ia, ib = ib, ia
        left = cycle[ia:ib + 1]
        right = cycle[ib:] + cycle[:ia + 1]
        return (_split_triangles(left, diag_set)
                + _split_triangles(right, diag_set))
    raise IncompleteTriangulationError(
        f"no diagonal splits the sub-polygon {cycle}")


def build_dual_tree(polygon: Polygon, diagonals) -> TriangulatedPolygon:
    """Validate a triangulation and derive its triangles and dual tree."""
    n = polygon.n
    seen: set[tuple[int, int]] = set()
    canon: list[tuple[int, int]] = []
    for pair in diagonals:
        try:
            a, b = pair
        except (TypeError, ValueError):
            raise InvalidTriangulationError(
                f"diagonal {pair!r} is not a vertex pair") from None
        if not (isinstance(a, int) and isinstance(b, int)
                and 0 <= a < n and 0 <= b < n):
            raise InvalidTriangulationError(
                f"diagonal {pair!r} references unknown vertices")
        if a == b:
            raise InvalidTriangulationError(f"diagonal {pair!r} is a point")
        a, b = min(a, b), max(a, b)
        if (b - a) % n in (1, n - 1):
            raise InvalidTriangulationError(
                f"diagonal ({a},{b}) is a boundary edge")
        if (a, b) in seen:
            raise InvalidTriangulationError(f"diagonal ({a},{b}) repeats")
        seen.add((a, b))
        canon.append((a, b))
    if len(canon) != n - 3:
        raise IncompleteTriangulationError(
            f"{len(canon)} diagonals given, a triangulation of a "
            f"{n}-gon needs {n - 3}")
    pts = polygon.points
    segs = {d: Segment(pts[d[0]], pts[d[1]]) for d in canon}
    for d in canon:
        s = segs[d]
        for i in range(n):
            e = polygon.edge(i)
            inter = segment_intersection(s, e)
            if inter is None:
                continue
            if isinstance(inter, Segment) or inter not in (s.a, s.b):
                raise CrossingDiagonalsError(
                    f"diagonal {d} meets boundary edge {i}")
        mid = Point((s.a.x + s.b.x) / 2, (s.a.y + s.b.y) / 2)
        if point_in_polygon(polygon, mid) != "inside":
            raise CrossingDiagonalsError(f"diagonal {d} leaves the polygon")
    for d1, d2 in combinations(canon, 2):
        inter = segment_intersection(segs[d1], segs[d2])
        if inter is None:
            continue
        s1, s2 = segs[d1], segs[d2]
        if isinstance(inter, Segment) or inter not in {s1.a, s1.b} & {s2.a, s2.b}:
            raise CrossingDiagonalsError(f"diagonals {d1} and {d2} cross")

    raw = _split_triangles(list(range(n)), frozenset(canon))
    tris = []
    for t in raw:
        if orientation(pts[t[0]], pts[t[1]], pts[t[2]]) <= 0:
            raise InvalidTriangulationError(f"triangle {t} is not ccw")
        k = min(range(3), key=lambda i: t[i])
        tris.append((t[k], t[(k + 1) % 3], t[(k + 2) % 3]))
    tris.sort()
    triangles = tuple(tris)
    if len(triangles) != n - 2:
        raise IncompleteTriangulationError(
            f"derived {len(triangles)} triangles, expected {n - 2}")

    diag_of: dict[tuple[int, int], tuple[int, int]] = {}
    dual_edges = []
    adj: dict[int, list[int]] = {i: [] for i in range(len(triangles))}
    for d in sorted(canon):
        owners = [i for i, t in enumerate(triangles)
                  if d[0] in t and d[1] in t]
        if len(owners) != 2:
            raise InvalidTriangulationError(
                f"diagonal {d} borders {len(owners)} triangles")
        ti, tj = owners
        dual_edges.append((ti, tj))
        diag_of[(ti, tj)] = d
        adj[ti].append(tj)
        adj[tj].append(ti)
    return TriangulatedPolygon(
        polygon=polygon,
        diagonals=tuple(sorted(canon)),
        triangles=triangles,
        dual_edges=tuple(sorted(dual_edges)),
        dual_adjacency={i: tuple(sorted(v)) for i, v in adj.items()},
        diag_of=diag_of)


def conflicting_triangle_pairs(tp: TriangulatedPolygon
                               ) -> tuple[tuple[int, int], ...]:
    """All unordered conflicting pairs; the multicut terminal pairs."""
    nt = tp.n_triangles
    return tuple((i, j) for i in range(nt) for j in range(i + 1, nt)
                 if triangles_conflict(tp, i, j))


@dataclass(frozen=True)
class PolygonDecomposition:
    """Pieces are triangle-id sets; cut_diagonals the severed diagonals."""
    pieces: tuple[frozenset[int], ...]
    cut_diagonals: frozenset

    @property
    def size(self) -> int:
        return len(self.pieces)


def piece_union_polygon(tp: TriangulatedPolygon, piece) -> Polygon:
    """Union of a triangle set as a simple polygon.

    Fails with PieceNotSimple when the union is disconnected or pinches
    at a vertex, so valid pieces are guaranteed free of articulation
    points.
    """
    ids = sorted(set(piece))
    nt = tp.n_triangles
    for i in ids:
        if not (isinstance(i, int) and 0 <= i < nt):
            raise InvalidTriangulationError(f"no triangle {i!r}")
    if not ids:
        raise PieceNotSimpleError("empty piece")
    directed: set[tuple[int, int]] = set()
    for i in ids:
        a, b, c = tp.triangles[i]
        directed |= {(a, b), (b, c), (c, a)}
    border = {(u, v) for (u, v) in directed if (v, u) not in directed}
    nxt: dict[int, int] = {}
    for u, v in sorted(border):
        if u in nxt:
            raise PieceNotSimpleError(
                f"piece boundary revisits vertex {u}")
        nxt[u] = v
    start = min(nxt)
    walk = [start]
    v = nxt[start]
    while v != start:
        walk.append(v)
        v = nxt[v]
    if len(walk) != len(border):
        raise PieceNotSimpleError("piece is not connected")
    return Polygon(tp.polygon.points[v] for v in walk)


def _dual_multicut(tp: TriangulatedPolygon) -> MulticutInstance:
    return MulticutInstance(tp.dual_edges, conflicting_triangle_pairs(tp))


def _pieces_from_cut(tp: TriangulatedPolygon, cut_pairs) -> tuple:
    removed = {tuple(sorted(e)) for e in cut_pairs}
    adj: dict[int, list[int]] = {i: [] for i in range(tp.n_triangles)}
    for ti, tj in tp.dual_edges:
        if (ti, tj) not in removed:
            adj[ti].append(tj)
            adj[tj].append(ti)
    seen: set[int] = set()
    pieces = []
    for s in range(tp.n_triangles):
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        members = set()
        while stack:
            x = stack.pop()
            members.add(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        pieces.append(frozenset(members))
    return tuple(sorted(pieces, key=min))


def _decomposition_from_cut(tp: TriangulatedPolygon,
                            cut: Cut) -> PolygonDecomposition:
    cut_pairs = [tuple(sorted(e)) for e in cut.edges]
    pieces = _pieces_from_cut(tp, cut_pairs)
    dec = PolygonDecomposition(
        pieces=pieces,
        cut_diagonals=frozenset(tp.diagonal_of(*e) for e in cut_pairs))
    for piece in dec.pieces:
        witness = polygon_is_grr(piece_union_polygon(tp, piece))
        if witness is not None:
            raise GRRError(
                f"piece {sorted(piece)} is not greedily routable: "
                f"boundary edges {witness.e} and {witness.f} conflict")
    return dec


def decompose_polygon_approx(tp: TriangulatedPolygon) -> PolygonDecomposition:
    """Piece count at most twice the optimum minus one.

    Primal-dual multicut on the dual tree; every piece is re-checked to
    be greedily routable before returning.
    """
    if not tp.dual_edges:
        return PolygonDecomposition((frozenset(range(tp.n_triangles)),),
                                    frozenset())
    return _decomposition_from_cut(tp, approx_gvy(_dual_multicut(tp)))


def decompose_polygon_exact_small(tp: TriangulatedPolygon
                                  ) -> PolygonDecomposition:
    """Minimum-size decomposition by exact multicut; small inputs only."""
    if not tp.dual_edges:
        return PolygonDecomposition((frozenset(range(tp.n_triangles)),),
                                    frozenset())
    if len(tp.dual_edges) > 25:
        raise BudgetExceededError(
            f"{len(tp.dual_edges)} dual edges exceed the exact-search budget")
    return _decomposition_from_cut(tp, solve_exact_small(_dual_multicut(tp)))
