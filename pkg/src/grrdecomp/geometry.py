"""Exact plane geometry over rational coordinates.

Every coordinate is a fractions.Fraction and every predicate is decided
exactly; nothing in this module touches floating point. Floats are
rejected at construction time so binary rounding can never leak in.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NotCounterclockwiseError, NotSimplePolygonError

Coord = Union[int, str, Fraction]


def frac(value: Coord) -> Fraction:
    """Coerce an int, Fraction, or decimal/ratio string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact coordinate expected, got {value!r}")
    return Fraction(value)


@dataclass(frozen=True, slots=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        # uphold the no-floats contract for direct construction too
        if type(self.x) is not Fraction:
            object.__setattr__(self, "x", frac(self.x))
        if type(self.y) is not Fraction:
            object.__setattr__(self, "y", frac(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k) -> "Point":
        k = frac(k)
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def sort_key(self) -> tuple:
        return (self.x, self.y)

    def __repr__(self) -> str:
        return f"({self.x}, {self.y})"


def pt(x: Coord, y: Coord) -> Point:
    """Build a Point, coercing each coordinate with frac()."""
    return Point(frac(x), frac(y))


ORIGIN = pt(0, 0)


def dot(a: Point, b: Point) -> Fraction:
    return a.x * b.x + a.y * b.y


def cross(a: Point, b: Point) -> Fraction:
    return a.x * b.y - a.y * b.x


def sq_dist(a: Point, b: Point) -> Fraction:
    d = a - b
    return d.x * d.x + d.y * d.y


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the turn a->b->c: 1 left (ccw), -1 right (cw), 0 collinear."""
    v = cross(b - a, c - a)
    return (v > 0) - (v < 0)


@dataclass(frozen=True, slots=True)
class Segment:
    a: Point
    b: Point

    def direction(self) -> Point:
        return self.b - self.a

    def at(self, t) -> Point:
        return self.a + (self.b - self.a) * frac(t)


def on_segment(q: Point, seg: Segment) -> bool:
    """Exact membership of q in the closed segment (degenerate allowed)."""
    d = seg.direction()
    if d.x == 0 and d.y == 0:
        return q == seg.a
    if cross(d, q - seg.a) != 0:
        return False
    s = dot(q - seg.a, d)
    return 0 <= s <= dot(d, d)


def segment_intersection(s1: Segment, s2: Segment):
    """Intersection of two closed segments.

    Returns None, a Point, or a Segment (for collinear overlap). The
    overlap segment is oriented along s1.
    """
    d1, d2 = s1.direction(), s2.direction()
    if d1.x == 0 and d1.y == 0:
        if on_segment(s1.a, s2):
            return s1.a
        return None
    if d2.x == 0 and d2.y == 0:
        if on_segment(s2.a, s1):
            return s2.a
        return None
    rxs = cross(d1, d2)
    qp = s2.a - s1.a
    if rxs != 0:
        t = cross(qp, d2) / rxs
        u = cross(qp, d1) / rxs
        if 0 <= t <= 1 and 0 <= u <= 1:
            return s1.at(t)
        return None
    if cross(qp, d1) != 0:
        return None
    # collinear: project s2 endpoints onto s1's parameterization
    dd = dot(d1, d1)
    t0 = dot(s2.a - s1.a, d1) / dd
    t1 = dot(s2.b - s1.a, d1) / dd
    lo, hi = (t0, t1) if t0 <= t1 else (t1, t0)
    lo, hi = max(lo, Fraction(0)), min(hi, Fraction(1))
    if lo > hi:
        return None
    if lo == hi:
        return s1.at(lo)
    return Segment(s1.at(lo), s1.at(hi))


# -- halfplanes ---------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Halfplane:
    """Points r with dot(r - q, q - p) >= 0: beyond q, looking from p."""
    p: Point
    q: Point


def hp(p: Point, q: Point) -> Halfplane:
    if p == q:
        raise ValueError("halfplane needs two distinct points")
    return Halfplane(p, q)


def in_hp(h: Halfplane, r: Point) -> bool:
    return dot(r - h.q, h.q - h.p) >= 0


# -- feasibility intervals ----------------------------------------------------

class ParamInterval:
    """Rational interval maintained under linear cuts a*u + b >= 0 (or > 0).

    Used to intersect a parameterized segment with slab/strip constraints;
    witness() returns the canonical midpoint of the surviving interval.
    """

    __slots__ = ("lo", "hi", "lo_strict", "hi_strict", "empty")

    def __init__(self, lo=Fraction(0), hi=Fraction(1),
                 lo_strict: bool = False, hi_strict: bool = False):
        self.lo = frac(lo)
        self.hi = frac(hi)
        self.lo_strict = lo_strict
        self.hi_strict = hi_strict
        self.empty = False
        self._normalize()

    def _normalize(self) -> None:
        if self.empty:
            return
        if self.lo > self.hi:
            self.empty = True
        elif self.lo == self.hi and (self.lo_strict or self.hi_strict):
            self.empty = True

    def cut(self, a: Fraction, b: Fraction, strict: bool) -> None:
        """Constrain to {u : a*u + b >= 0} (strictly if asked)."""
        if self.empty:
            return
        if a == 0:
            if b < 0 or (strict and b == 0):
                self.empty = True
            return
        root = -b / a
        if a > 0:
            if root > self.lo or (root == self.lo and strict and not self.lo_strict):
                self.lo, self.lo_strict = root, strict
        else:
            if root < self.hi or (root == self.hi and strict and not self.hi_strict):
                self.hi, self.hi_strict = root, strict
        self._normalize()

    @property
    def feasible(self) -> bool:
        return not self.empty

    def witness(self) -> Fraction:
        """Midpoint of the interval; satisfies every strict cut applied."""
        if self.empty:
            raise ValueError("empty interval has no witness")
        return (self.lo + self.hi) / 2


# -- halfstrips ---------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Halfstrip:
    """Region swept by translating segment a-b away from point c.

    Closed on all finite sides: the base segment itself belongs to the
    strip, as do points directly above the base endpoints.
    """
    a: Point
    b: Point
    c: Point

    def _frame(self):
        d = self.b - self.a
        n = Point(-d.y, d.x)
        if dot(self.c - self.a, n) > 0:
            n = Point(d.y, -d.x)
        return d, n


def halfstrip(base_from: Point, base_to: Point, away_from: Point) -> Halfstrip:
    if base_from == base_to:
        raise ValueError("halfstrip base must not be degenerate")
    if orientation(base_from, base_to, away_from) == 0:
        raise ValueError("halfstrip reference point must be off the base line")
    return Halfstrip(base_from, base_to, away_from)


def halfstrip_contains(strip: Halfstrip, q: Point) -> bool:
    d, n = strip._frame()
    s = dot(q - strip.a, d)
    if s < 0 or s > dot(d, d):
        return False
    return dot(q - strip.a, n) >= 0


def halfstrip_intersects(strip: Halfstrip, target: Segment,
                         interior_only: bool = False) -> bool:
    """Does the strip meet the target segment (optionally its open interior)?"""
    d, n = strip._frame()
    dd = dot(d, d)
    f = target.direction()
    iv = ParamInterval(0, 1, interior_only, interior_only)
    # s(u) = dot(target.a - strip.a, d) + u * dot(f, d)  in [0, dd]
    s0 = dot(target.a - strip.a, d)
    iv.cut(dot(f, d), s0, strict=False)
    iv.cut(-dot(f, d), dd - s0, strict=False)
    # off(u) >= 0
    iv.cut(dot(f, n), dot(target.a - strip.a, n), strict=False)
    return iv.feasible


def clip_halfplane(points: Sequence[Point], n: Point, c: Fraction) -> list[Point]:
    """Sutherland-Hodgman clip of a convex polygon by dot(q, n) + c >= 0."""
    if not points:
        return []
    out: list[Point] = []
    vals = [dot(q, n) + c for q in points]
    m = len(points)
    for i in range(m):
        p1, v1 = points[i], vals[i]
        p2, v2 = points[(i + 1) % m], vals[(i + 1) % m]
        if v1 >= 0:
            out.append(p1)
        if (v1 > 0 > v2) or (v1 < 0 < v2):
            t = v1 / (v1 - v2)
            out.append(p1 + (p2 - p1) * t)
    return out


def halfstrip_reaches_triangle_interior(strip: Halfstrip,
                                        tri: Sequence[Point]) -> bool:
    """Does the (closed) strip contain a point strictly inside the triangle?

    The triangle interior is open, so clipping the closed triangle by the
    three closed strip constraints and testing the clip's centroid for
    strict interiority is exact: the clip is full-dimensional inside the
    triangle iff its centroid is.
    """
    t0, t1, t2 = tri
    if orientation(t0, t1, t2) == 0:
        raise ValueError("degenerate triangle")
    if orientation(t0, t1, t2) < 0:
        t1, t2 = t2, t1
    d, n = strip._frame()
    dd = dot(d, d)
    kernel: list[Point] = [t0, t1, t2]
    # s >= 0 ; s <= |d|^2 ; off >= 0   (all closed)
    kernel = clip_halfplane(kernel, d, -dot(strip.a, d))
    kernel = clip_halfplane(kernel, Point(-d.x, -d.y), dot(strip.a, d) + dd)
    kernel = clip_halfplane(kernel, n, -dot(strip.a, n))
    if not kernel:
        return False
    cx = sum(q.x for q in kernel) / len(kernel)
    cy = sum(q.y for q in kernel) / len(kernel)
    centroid = Point(cx, cy)
    for u, v in ((t0, t1), (t1, t2), (t2, t0)):
        if cross(v - u, centroid - u) <= 0:
            return False
    return True


# -- polygons -----------------------------------------------------------------

class Polygon:
    """Simple polygon with counterclockwise boundary, validated on build."""

    __slots__ = ("points", "n")

    def __init__(self, points: Iterable[Point]):
        pts = tuple(points)
        if len(pts) < 3:
            raise NotSimplePolygonError("polygon needs at least 3 vertices")
        if len(set(pts)) != len(pts):
            raise NotSimplePolygonError("polygon repeats a vertex")
        n = len(pts)
        edges = [Segment(pts[i], pts[(i + 1) % n]) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                inter = segment_intersection(edges[i], edges[j])
                if inter is None:
                    continue
                if isinstance(inter, Segment):
                    raise NotSimplePolygonError(
                        f"boundary edges {i} and {j} overlap")
                adjacent = j == i + 1 or (i == 0 and j == n - 1)
                shared = {edges[i].a, edges[i].b} & {edges[j].a, edges[j].b}
                if not (adjacent and inter in shared):
                    raise NotSimplePolygonError(
                        f"boundary edges {i} and {j} intersect at {inter}")
        area2 = sum(cross(pts[i], pts[(i + 1) % n]) for i in range(n))
        if area2 <= 0:
            raise NotCounterclockwiseError(
                "polygon boundary must be counterclockwise")
        self.points = pts
        self.n = n

    def edge(self, i: int) -> Segment:
        return Segment(self.points[i], self.points[(i + 1) % self.n])

    def edges(self) -> list[Segment]:
        return [self.edge(i) for i in range(self.n)]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"Polygon({list(self.points)!r})"


def point_in_polygon(poly: Polygon, q: Point) -> str:
    """Exact point location: 'inside', 'boundary', or 'outside'."""
    for i in range(poly.n):
        if on_segment(q, poly.edge(i)):
            return "boundary"
    inside = False
    for i in range(poly.n):
        a = poly.points[i]
        b = poly.points[(i + 1) % poly.n]
        if (a.y > q.y) != (b.y > q.y):
            x_hit = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if q.x < x_hit:
                inside = not inside
    return "inside" if inside else "outside"
