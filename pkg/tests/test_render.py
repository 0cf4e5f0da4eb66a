import re

import pytest

from pickwelp import Polygon
from pickwelp.generators import farey_sunburst, figure_eight, oblique_square, rectangle
from pickwelp.render import RenderSpec, render_svg
from pickwelp.winding import Box


def _classes(svg):
    return re.findall(r'<circle class="(\w+)"', svg)


def test_oblique_counts():
    classes = _classes(render_svg(oblique_square()))
    assert classes.count("Interior") == 13
    assert classes.count("OnEdge") + classes.count("AtVertex") == 12
    assert classes.count("AtVertex") == 4


def test_unit_square_counts():
    classes = _classes(render_svg(rectangle(1, 1)))
    assert classes.count("AtVertex") == 4 and classes.count("Interior") == 0


def test_f6_counts():
    classes = _classes(render_svg(farey_sunburst(6)))
    assert classes.count("Interior") == 1
    assert classes.count("AtVertex") == 64 and classes.count("OnEdge") == 32


def test_deterministic_bytes():
    spec = RenderSpec(cell=10, margin=5, show_grid=False)
    assert render_svg(farey_sunburst(3), spec) == render_svg(farey_sunburst(3), spec)


def test_y_axis_points_up():
    svg = render_svg(rectangle(2, 1))
    assert re.search(r'transform="matrix\(24 0 0 -24 ', svg)


def test_grid_toggle():
    assert 'class="grid"' in render_svg(rectangle(1, 1))
    assert 'class="grid"' not in render_svg(rectangle(1, 1), RenderSpec(show_grid=False))


def test_non_simple_and_open_inputs_render():
    svg = render_svg(figure_eight())
    assert "<polygon" in svg
    open_path = Polygon.of([(0, 0), ("1/2", 2), (2, 1)])
    svg = render_svg(open_path, box=Box(2))
    assert "<polyline" in svg and "0.5,2" in svg


@pytest.mark.parametrize("kwargs", [{"cell": 0}, {"palette": ("a", "b", "c")}, {"palette": ("a", "a", "b", "c")}])
def test_render_spec_validation(kwargs):
    with pytest.raises(ValueError):
        RenderSpec(**kwargs)
