"""Lattice point counts and the checks of Pick's lemma and Pick's theorem."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Tuple

from .errors import InternalError, NotSimple, OutOfBox, ZeroLengthEdge
from .exact import Rat, format_rat, parse_rat
from .polygon import Polygon, area, is_simple, require_closed, require_integer
from .winding import Box, Kind, classify_box, default_box_radius, welp


@dataclass(frozen=True)
class PickReport:
    """Outcome of checking a closed integer polygon.

    ``theorem_holds`` is ``None`` (not applicable) unless the polygon is simple
    and positively oriented; the lattice counts are filled in only then.
    """

    area: Rat
    welp: Rat
    box_radius: int
    simple: bool
    positively_oriented: bool
    interior_count: Optional[int] = None
    boundary_count: Optional[int] = None
    theorem_holds: Optional[bool] = None

    @property
    def lemma_holds(self) -> bool:
        return self.area == self.welp

    def to_dict(self) -> dict:
        return {
            "area": format_rat(self.area),
            "welp": format_rat(self.welp),
            "interior_count": self.interior_count,
            "boundary_count": self.boundary_count,
            "lemma_holds": self.lemma_holds,
            "theorem_holds": "not-applicable" if self.theorem_holds is None else self.theorem_holds,
            "box_radius": self.box_radius,
            "simple": self.simple,
            "positively_oriented": self.positively_oriented,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "PickReport":
        th = doc["theorem_holds"]
        report = cls(
            area=parse_rat(doc["area"]),
            welp=parse_rat(doc["welp"]),
            box_radius=int(doc["box_radius"]),
            simple=bool(doc["simple"]),
            positively_oriented=bool(doc["positively_oriented"]),
            interior_count=doc["interior_count"],
            boundary_count=doc["boundary_count"],
            theorem_holds=None if th == "not-applicable" else bool(th),
        )
        if report.lemma_holds != doc["lemma_holds"]:
            raise ValueError("lemma_holds is inconsistent with area and welp")
        return report


def boundary_count_gcd(P: Polygon) -> int:
    """Lattice points on the curve of a simple polygon: sum of gcd(|dx|, |dy|) per edge."""
    require_closed(P)
    require_integer(P)
    if any(u == v for u, v in P.edges()):
        raise ZeroLengthEdge("zero-length edge")
    if not is_simple(P):
        raise NotSimple("the gcd count overcounts on self-touching curves")
    return sum(gcd(v.x - u.x, v.y - u.y) for u, v in P.edges())


def _box_for(P: Polygon, box_radius: Optional[int]) -> Box:
    default = default_box_radius(P)
    if box_radius is None:
        return default
    if box_radius < default.r:
        raise OutOfBox(f"box radius {box_radius} is smaller than the vertex extent {default.r}")
    return Box(box_radius)


def count_lattice_points(P: Polygon, box: Optional[Box] = None) -> Tuple[int, int]:
    """``(I, J)`` by classifying every lattice point of the box.

    The boundary count is cross-checked against :func:`boundary_count_gcd`.
    """
    classes = classify_box(P, box)
    interior = sum(1 for c in classes.values() if c.kind is Kind.INTERIOR)
    boundary = sum(1 for c in classes.values() if c.on_curve)
    expected = boundary_count_gcd(P)
    if boundary != expected:
        raise InternalError(f"classified {boundary} boundary points, gcd formula gives {expected}")
    return interior, boundary


def boundary_angle_sum(P: Polygon, box: Optional[Box] = None) -> Rat:
    """Discrete winding numbers summed over the lattice points on the curve."""
    classes = classify_box(P, box)
    total = sum((Fraction(c.winding) for c in classes.values() if c.on_curve), Fraction(0))
    return int(total) if total.denominator == 1 else total


def pick_check_lemma(P: Polygon, box_radius: Optional[int] = None) -> PickReport:
    """Compare the area with Welp; on simple positive polygons also check I + J/2 - 1.

    The lemma needs only a closed integer polygon; simplicity is not required.
    """
    require_closed(P)
    require_integer(P)
    box = _box_for(P, box_radius)
    a = area(P)
    w = welp(P, box)
    simple = is_simple(P)
    positive = a > 0
    if not (simple and positive):
        return PickReport(a, w, box.r, simple, positive)
    interior, boundary = count_lattice_points(P, box)
    holds = a == interior + Fraction(boundary, 2) - 1
    return PickReport(a, w, box.r, simple, positive, interior, boundary, holds)


__all__: Sequence[str] = (
    "PickReport",
    "boundary_angle_sum",
    "boundary_count_gcd",
    "count_lattice_points",
    "pick_check_lemma",
)
