"""Independent oracles shared by the test modules.

None of these use the discrete angle measure, so they can check it.
"""
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from pickwelp import Polygon, Vec2, farey_sunburst, figure_eight, oblique_square, rectangle


def shoelace(vertices):
    """Area by the cross-product (shoelace) form, not the trapezoid sum."""
    total = 0
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]):
        total += x0 * y1 - x1 * y0
    return Fraction(total, 2)


def on_segment_oracle(q, a, b):
    """Parametric on-segment test: q = a + t (b - a) for some t in [0, 1]."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx == 0 and dy == 0:
        return tuple(q) == tuple(a)
    if dx != 0:
        t = Fraction(q[0] - a[0], 1) / dx
    else:
        t = Fraction(q[1] - a[1], 1) / dy
    return 0 <= t <= 1 and a[0] + t * dx == q[0] and a[1] + t * dy == q[1]


def on_curve_oracle(P, q):
    return any(on_segment_oracle(q, a, b) for a, b in zip(P.vertices, P.vertices[1:]))


def crossing_winding(P, q):
    """Winding number by upward/downward crossings of the rightward ray from q.

    Valid only for q off the curve.
    """
    w = 0
    for a, b in zip(P.vertices, P.vertices[1:]):
        ax, ay = a[0] - q[0], a[1] - q[1]
        bx, by = b[0] - q[0], b[1] - q[1]
        cross = ax * by - ay * bx
        if ay <= 0 < by and cross > 0:
            w += 1
        elif by <= 0 < ay and cross < 0:
            w -= 1
    return w


def even_odd_inside(P, q):
    """Even-odd rule (parity of crossings), a second off-curve oracle."""
    return crossing_winding(P, q) % 2 == 1


@pytest.fixture
def unit_square():
    return rectangle(1, 1)


@pytest.fixture
def square2():
    return Polygon.of([(0, 0), (2, 0), (2, 2), (0, 2), (0, 0)])


@pytest.fixture
def oblique():
    return oblique_square()


@pytest.fixture
def eight():
    return figure_eight()


@pytest.fixture(scope="session")
def f6():
    return farey_sunburst(6)


small_ints = st.integers(min_value=-8, max_value=8)
lattice_vecs = st.builds(Vec2, small_ints, small_ints)
rationals = st.fractions(min_value=-8, max_value=8, max_denominator=7)
rational_vecs = st.builds(Vec2.of, rationals, rationals)
positive_rationals = st.fractions(min_value=Fraction(1, 7), max_value=9, max_denominator=7)


@st.composite
def closed_lattice_polygons(draw, min_size=2, max_size=9):
    pts = draw(st.lists(lattice_vecs, min_size=min_size, max_size=max_size))
    return Polygon(tuple(pts) + (pts[0],))
