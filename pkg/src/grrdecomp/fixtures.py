"""Small named instances used across the test suite and the demos.

Each function builds a fresh validated object. The geometry is chosen
so the interesting sizes are small and checkable by hand: one-region
stars, a comb whose decomposition shrinks when edges may be split, and
notched polygons that defeat greedy routing.
"""
from __future__ import annotations

from fractions import Fraction

from .drawing import Drawing, validate_drawing
from .geometry import Point, Polygon, pt
from .polydecomp import TriangulatedPolygon, build_dual_tree


def p_ic() -> Drawing:
    """Two-edge path with a gentle turn; a single region."""
    return validate_drawing(
        [(0, pt(0, 0)), (1, pt(1, 0)), (2, pt(2, 1))],
        [(0, 1), (1, 2)])


def p_acute() -> Drawing:
    """Two-edge path with a sharp turn; needs two regions."""
    return validate_drawing(
        [(0, pt(0, 0)), (1, pt(2, 0)), (2, pt(0, 1))],
        [(0, 1), (1, 2)])


def star3() -> Drawing:
    """Three well-spread legs; the whole star is one region."""
    return validate_drawing(
        [(0, pt(0, 0)), (1, pt(0, 2)), (2, pt(2, -1)), (3, pt(-2, -1))],
        [(0, 1), (0, 2), (0, 3)])


def plus_drawing() -> Drawing:
    """Four axis-aligned unit legs."""
    return validate_drawing(
        [(0, pt(0, 0)), (1, pt(0, 1)), (2, pt(1, 0)), (3, pt(0, -1)),
         (4, pt(-1, 0))],
        [(0, 1), (0, 2), (0, 3), (0, 4)])


def star4_cross() -> Drawing:
    """Four legs whose conflicts interleave around the center.

    The minimum depends on the contact mode: crossing components are
    cheaper than proper ones here.
    """
    return validate_drawing(
        [(0, pt(0, 0)), (1, pt(10, 0)), (2, pt(1, 10)), (3, pt(-10, 0)),
         (4, pt(-1, -10))],
        [(0, 1), (0, 2), (0, 3), (0, 4)])


def comb_drawing() -> Drawing:
    """A spine with two hooked teeth.

    Whole-edge partitions need three regions, but splitting the spine
    lets two regions cover everything, so this is the canonical
    split-versus-unsplit witness.
    """
    d2l = Point(Fraction(-273, 145), Fraction(1016, 145))
    d2r = Point(Fraction(1723, 145), Fraction(1016, 145))
    return validate_drawing(
        [(0, pt(0, 0)), (1, pt(10, 0)), (2, d2l), (3, pt(-1, 8)),
         (4, d2r), (5, pt(11, 8))],
        [(0, 1), (0, 2), (2, 3), (1, 4), (4, 5)])


def rect_tp() -> TriangulatedPolygon:
    """A rectangle cut into two triangles; trivially one piece."""
    poly = Polygon([pt(0, 0), pt(4, 0), pt(4, 2), pt(0, 2)])
    return build_dual_tree(poly, [(0, 2)])


def lshape_polygon() -> Polygon:
    return Polygon([pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2),
                    pt(0, 2)])


def lshape_tp() -> TriangulatedPolygon:
    """An L: not convex, yet still a single greedy piece."""
    return build_dual_tree(lshape_polygon(), [(0, 2), (0, 3), (3, 5)])


def ushape_polygon() -> Polygon:
    return Polygon([pt(0, 0), pt(3, 0), pt(3, 3), pt(2, 3), pt(2, 1),
                    pt(1, 1), pt(1, 3), pt(0, 3)])


def ushape_tp() -> TriangulatedPolygon:
    """A U whose arms see each other across the notch; two pieces."""
    return build_dual_tree(ushape_polygon(),
                           [(5, 7), (0, 5), (0, 4), (1, 4), (1, 3)])


def two_notch_polygon() -> Polygon:
    return Polygon([pt(0, 0), pt(6, 0), pt(6, 3), pt(5, 3), pt(5, 1),
                    pt(4, 1), pt(4, 3), pt(2, 3), pt(2, 1), pt(1, 1),
                    pt(1, 3), pt(0, 3)])


def two_notch_tp() -> TriangulatedPolygon:
    """A comb polygon with two separated notches; three pieces."""
    return build_dual_tree(
        two_notch_polygon(),
        [(1, 4), (2, 4), (0, 9), (9, 11), (5, 8), (5, 7), (0, 8), (0, 5),
         (1, 5)])


def convex_hexagon_tp() -> TriangulatedPolygon:
    poly = Polygon([pt(0, 0), pt(4, 0), pt(6, 2), pt(4, 4), pt(0, 4),
                    pt(-2, 2)])
    return build_dual_tree(poly, [(0, 2), (0, 3), (0, 4)])


def convex_fan_tp() -> TriangulatedPolygon:
    """Five triangles fanned from one vertex of a convex heptagon."""
    poly = Polygon([pt(0, 0), pt(2, 0), pt(3, 1), pt(3, 3), pt(2, 4),
                    pt(0, 4), pt(-1, 2)])
    return build_dual_tree(poly, [(0, 2), (0, 3), (0, 4), (0, 5)])


USHAPE_FAILURE_PAIR = (Point(Fraction(1, 2), Fraction(5, 2)),
                       Point(Fraction(5, 2), Fraction(5, 2)))
USHAPE_FAILURE_POINT = Point(Fraction(1), Fraction(5, 2))
