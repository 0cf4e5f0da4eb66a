"""Exact lattice-polygon geometry: area, discrete winding numbers and Pick's theorem."""
from .exact import LatticeVec, Vec2, det2, dot2, format_rat, parse_rat, point_on_segment, segments_intersect, sign
from .generators import (
    SplitMix64,
    farey_sunburst,
    figure_eight,
    oblique_square,
    random_closed_polygon,
    random_simple_polygon,
    rectangle,
)
from .hopf import (
    TurningProfile,
    check_umlaufsatz,
    secant_square_identity,
    secant_triangle_identity,
    turning_angles,
    vertex_angle_consistency,
)
from .measures import AxiomReport, ang, check_angle_axioms, dang
from .pick import PickReport, boundary_angle_sum, boundary_count_gcd, count_lattice_points, pick_check_lemma
from .polygon import Polygon, area, area_edge, is_closed, is_simple, normalize_positive, reverse, rotate, translate
from .winding import (
    Box,
    Kind,
    PointClass,
    classify,
    default_box_radius,
    involution_cancellation_check,
    welp,
    welp_edge,
    winding_ang,
    winding_dang,
)

__version__ = "0.1.0"
