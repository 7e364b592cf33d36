"""Polygon loading, validation, reflex detection, and cone construction."""

import json
from fractions import Fraction

import pytest

from ruledpoly import (
    Direction,
    HolePlacementError,
    NonReflexVertexError,
    Point,
    Polygon,
    PolygonError,
    PolygonParseError,
    SelfIntersectionError,
    SlitVertexError,
    TooFewVerticesError,
    as_fraction,
    cone_contains,
    cone_of,
    dump_polygon,
    is_reflex,
    load_polygon,
    reflex_vertices,
)

L_RING = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


# -- loading and validation --------------------------------------------------

def test_load_unit_square():
    P = load_polygon('{"outer": [[0,0],[1,0],[1,1],[0,1]], "holes": []}')
    assert P.n == 4
    assert P.h == 0


def test_load_square_with_centered_hole():
    doc = {
        "outer": [[0, 0], [4, 0], [4, 4], [0, 4]],
        "holes": [[[1, 1], [3, 1], [3, 3], [1, 3]]],
    }
    P = load_polygon(json.dumps(doc))
    assert P.n == 8
    assert P.h == 1


def test_load_accepts_decimal_literals():
    P = load_polygon('{"outer": [[0,0],["1.5",0],[1.5,"2.25"],[0,2.25]], "holes": []}')
    xs = [pt.x for pt in P.outer.vertices]
    assert Fraction(3, 2) in xs


def test_bowtie_rejected():
    with pytest.raises(SelfIntersectionError):
        Polygon([(0, 0), (2, 2), (2, 0), (0, 2)])


def test_too_few_vertices():
    with pytest.raises(TooFewVerticesError):
        Polygon([(0, 0), (1, 0)])


def test_collinear_run_merged():
    # (1,0) is a straight-angle vertex, not a corner
    P = Polygon([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])
    assert P.n == 4


def test_slit_vertex_rejected():
    with pytest.raises(SlitVertexError):
        Polygon([(0, 0), (2, 0), (1, 1), (2, 0), (0, 2)])


def test_hole_outside_outer_rejected():
    with pytest.raises(HolePlacementError):
        Polygon([(0, 0), (2, 0), (2, 2), (0, 2)],
                holes=[[(5, 5), (6, 5), (6, 6), (5, 6)]])


def test_nested_holes_rejected():
    with pytest.raises(HolePlacementError):
        Polygon([(0, 0), (10, 0), (10, 10), (0, 10)],
                holes=[[(1, 1), (8, 1), (8, 8), (1, 8)],
                       [(2, 2), (3, 2), (3, 3), (2, 3)]])


def test_parse_error_named():
    with pytest.raises(PolygonParseError):
        load_polygon("not json at all")
    with pytest.raises(PolygonParseError):
        load_polygon('{"holes": []}')


def test_nonfinite_coordinates_rejected():
    with pytest.raises(PolygonError):
        Polygon([(0, 0), (float("nan"), 0), (1, 1)])
    with pytest.raises(PolygonError):
        Polygon([(0, 0), (float("inf"), 0), (1, 1)])


def test_orientation_normalization_idempotent():
    """Feeding a normalized polygon's rings back in changes nothing."""
    P = Polygon(list(reversed(L_RING)))  # clockwise input
    once = dump_polygon(P)
    Q = Polygon([(pt.x, pt.y) for pt in P.outer.vertices],
                holes=[[(pt.x, pt.y) for pt in r.vertices] for r in P.holes])
    assert dump_polygon(Q) == once


def test_round_trip_byte_identical():
    P = Polygon([(0, 0), (4, 0), (4, 4), (0, 4)],
                holes=[[(1, 1), (3, 1), (3, 3), (1, 3)]])
    text = dump_polygon(P)
    assert dump_polygon(load_polygon(text)) == text


# -- reflex detection --------------------------------------------------------

def test_convex_polygon_has_no_reflex():
    P = Polygon([(0, 0), (2, 0), (3, 2), (1, 4), (-1, 2)])
    assert reflex_vertices(P) == frozenset()
    assert all(not is_reflex(P, i) for i in range(P.n))


def test_l_polygon_reflex_vertex():
    P = Polygon(L_RING)
    refl = reflex_vertices(P)
    assert len(refl) == 1
    (i,) = refl
    assert (P.vertex(i).x, P.vertex(i).y) == (1, 1)


def test_convex_hole_corners_all_reflex():
    P = Polygon([(0, 0), (4, 0), (4, 4), (0, 4)],
                holes=[[(1, 1), (3, 1), (3, 3), (1, 3)]])
    refl = reflex_vertices(P)
    assert len(refl) == 4
    assert all(P.vertex(i).x in (1, 3) for i in refl)


def test_reflex_plus_convex_is_n(l_poly, annulus):
    for P in (l_poly, annulus):
        k = len(reflex_vertices(P))
        convex = sum(1 for i in range(P.n) if not is_reflex(P, i))
        assert k + convex == P.n


# -- directions and cones ----------------------------------------------------

def test_direction_mod_180():
    assert Direction(1, 1) == Direction(-1, -1)
    assert Direction(0, -3) == Direction(0, 1)
    assert Direction(2, 0) == Direction(-5, 0)
    assert Direction(1, 1) != Direction(1, -1)


def test_direction_rejects_zero_vector():
    with pytest.raises(ValueError):
        Direction(0, 0)


def test_cone_of_l_polygon(l_poly):
    (i,) = reflex_vertices(l_poly)
    c = cone_of(l_poly, i)
    assert (c.apex.x, c.apex.y) == (1, 1)
    assert {c.arc_start, c.arc_end} == {Direction(0, 1), Direction(1, 0)}
    assert cone_contains(c, Direction(1, -1))
    assert not cone_contains(c, Direction(1, 1))


def test_cone_is_closed_at_boundaries(l_poly):
    (i,) = reflex_vertices(l_poly)
    c = cone_of(l_poly, i)
    assert cone_contains(c, c.arc_start)
    assert cone_contains(c, c.arc_end)


def test_cone_excludes_normal_bisector(l_poly):
    # bisector of (0,1) and (1,0) is (1,1); the cone must not contain it
    (i,) = reflex_vertices(l_poly)
    c = cone_of(l_poly, i)
    assert not cone_contains(c, Direction(1, 1))


def test_cone_of_non_reflex_rejected(square):
    with pytest.raises(NonReflexVertexError):
        cone_of(square, 0)


def test_wide_cone_limiting_case():
    # interior angle just above 180 degrees: the two edge normals nearly
    # oppose each other and the cone covers all but a thin band
    P = Polygon([(0, 0), (4, 0), (4, 4), (2, 4 - Fraction(1, 100)), (0, 4)])
    (i,) = reflex_vertices(P)
    c = cone_of(P, i)
    for v in (Direction(1, 0), Direction(1, 1), Direction(1, -1), Direction(1, 5)):
        assert cone_contains(c, v)
    assert not cone_contains(c, Direction(0, 1))


def test_as_fraction_forms():
    assert as_fraction("0.125") == Fraction(1, 8)
    assert as_fraction(3) == 3
    assert as_fraction(Fraction(2, 7)) == Fraction(2, 7)
    assert as_fraction(0.5) == Fraction(1, 2)


def test_point_fields_are_fractions():
    p = Point(as_fraction("1.5"), as_fraction(2))
    assert p.x == Fraction(3, 2) and p.y == 2
