from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pickwelp import Polygon, Vec2
from pickwelp.errors import NotClosed, ZeroArea
from pickwelp.generators import random_simple_polygon
from pickwelp.polygon import (
    area,
    area_edge,
    is_closed,
    is_simple,
    normalize_positive,
    polygon_from_doc,
    polygon_to_doc,
    reverse,
    rotate,
    translate,
)

from conftest import closed_lattice_polygons, lattice_vecs, rational_vecs, shoelace


def test_area_edge_examples():
    assert area_edge(Vec2(3, 1), Vec2(1, 3)) == 4
    assert area_edge(Vec2(1, 1), Vec2(0, 1)) == 1
    u = Vec2.of("1/3", 5)
    assert area_edge(u, u) == 0


def test_area_examples(unit_square, oblique):
    assert area(unit_square) == 1
    assert area(oblique) == 18
    assert area(Polygon.of([(2, 3), (2, 3)])) == 0


@given(closed_lattice_polygons())
def test_area_matches_shoelace(P):
    assert area(P) == shoelace(P.vertices)


@given(closed_lattice_polygons())
def test_area_half_integral(P):
    assert (2 * area(P)).denominator == 1


@given(closed_lattice_polygons(), rational_vecs)
def test_area_reversal_and_translation(P, q):
    assert area(reverse(P)) == -area(P)
    assert area(translate(P, q)) == area(P)


def test_translation_invariance_fails_for_open_polygon():
    P = Polygon.of([(1, 0), (4, 1), (0, 3), (3, 4)])
    assert area(translate(P, Vec2(0, 1))) != area(P)


def test_is_closed():
    assert is_closed(Polygon.of([(0, 0), (1, 0), (0, 0)]))
    assert not is_closed(Polygon.of([(0, 0), (1, 0), (1, 1)]))
    assert not is_closed(Polygon.of([(1, 0), (4, 1), (0, 3), (3, 4)]))


@pytest.mark.parametrize(
    "pts, expected",
    [
        ([(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)], True),
        ([(1, 0), (4, 1), (0, 3), (3, 4), (1, 0)], False),
        ([(0, 0), (1, 0), (2, 0), (0, 1), (0, 0)], True),
        # zero-length edge
        ([(0, 0), (1, 0), (1, 0), (0, 1), (0, 0)], False),
        # spike folding back along an edge
        ([(0, 0), (2, 0), (1, 0), (0, 1), (0, 0)], False),
        # straight pass-through at p_0
        ([(1, 0), (2, 0), (0, 1), (0, 0), (1, 0)], True),
        # closing edge overlaps the first edge
        ([(1, 0), (2, 0), (0, 1), (3, 0), (1, 0)], False),
        # vertex touching a non-adjacent edge
        ([(0, 0), (4, 0), (4, 4), (2, 0), (0, 4), (0, 0)], False),
        # repeated vertex (pinched bow)
        ([(0, 0), (2, 2), (4, 0), (4, 4), (2, 2), (0, 4), (0, 0)], False),
        ([(0, 0), (1, 0), (0, 0)], False),
    ],
)
def test_is_simple_cases(pts, expected):
    assert is_simple(Polygon.of(pts)) is expected


def test_is_simple_needs_closed():
    with pytest.raises(NotClosed):
        is_simple(Polygon.of([(0, 0), (1, 0), (1, 1)]))


@given(st.integers(0, 2 ** 32), st.integers(3, 9), lattice_vecs, st.integers(0, 20))
@settings(max_examples=60)
def test_is_simple_invariances(seed, k, q, shift):
    P = random_simple_polygon(seed, k, 4)
    assert is_simple(P)
    assert is_simple(translate(P, q))
    assert is_simple(reverse(P))
    assert is_simple(rotate(P, shift))


@given(closed_lattice_polygons(min_size=3, max_size=7), st.integers(0, 10))
def test_is_simple_invariant_on_arbitrary_polygons(P, shift):
    s = is_simple(P)
    assert is_simple(reverse(P)) == s
    assert is_simple(rotate(P, shift)) == s


def test_normalize_positive(unit_square):
    assert normalize_positive(unit_square) == unit_square
    cw = reverse(unit_square)
    assert area(cw) == -1
    assert area(normalize_positive(cw)) == 1
    with pytest.raises(ZeroArea):
        normalize_positive(Polygon.of([(0, 0), (1, 0), (0, 0)]))


def test_translate(unit_square):
    assert translate(unit_square, Vec2(0, 0)) == unit_square
    moved = translate(unit_square, Vec2(1, 1))
    assert moved.vertices[:4] == (Vec2(-1, -1), Vec2(0, -1), Vec2(0, 0), Vec2(-1, 0))


def test_rotate_keeps_cycle(unit_square):
    R = rotate(unit_square, 1)
    assert R.vertices[0] == Vec2(1, 0) and R.vertices[-1] == Vec2(1, 0)
    assert area(R) == area(unit_square)


def test_zero_length_edges_contribute_nothing(unit_square):
    doubled = Polygon(unit_square.vertices[:2] + unit_square.vertices[1:])
    assert area(doubled) == area(unit_square)
    assert not is_simple(doubled)


def test_polygon_doc_round_trip():
    doc = {"vertices": [[0, "1/4"], [3, "1/4"], [3, "3/4"], [0, "3/4"]], "closed": True}
    P = polygon_from_doc(doc)
    assert P.n == 4 and is_closed(P)
    assert area(P) == Fraction(3, 2)
    assert polygon_from_doc(polygon_to_doc(P)) == P


def test_polygon_doc_explicit_closing_vertex_is_not_doubled():
    P = polygon_from_doc({"vertices": [[0, 0], [1, 0], [0, 1], [0, 0]], "closed": True})
    assert len(P) == 4


@pytest.mark.parametrize(
    "doc",
    [{}, {"vertices": 3}, {"vertices": [[0, 0.5], [1, 1]]}, {"vertices": [[0, 0, 0]]}, {"vertices": [[0, 0]]},
     {"vertices": [[0, 0], [1, 1]], "closed": "yes"}],
)
def test_polygon_doc_rejects_malformed(doc):
    with pytest.raises(ValueError):
        polygon_from_doc(doc)
