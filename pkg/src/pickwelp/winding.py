"""Winding numbers, the weighted enclosed-lattice-point sum and point classification.

Welp is always evaluated by brute force over a finite lattice box; its
agreement with the polygon area is what the test suite checks, so it is never
replaced by the area formula.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import DegenerateEdge, InternalError, NotPositivelyOriented, NotSimple, OutOfBox
from .exact import Rat, Vec2, is_lattice, point_on_segment
from .measures import ang, dang_quarters
from .polygon import Polygon, area, is_simple, require_closed, require_integer


@dataclass(frozen=True)
class Box:
    """The lattice square ``{-r, ..., r}^2``."""

    r: int

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("box radius must be non-negative")

    def points(self) -> Iterator[Vec2]:
        rng = range(-self.r, self.r + 1)
        for x in rng:
            for y in rng:
                yield Vec2(x, y)

    def contains(self, v: Vec2) -> bool:
        return -self.r <= v.x <= self.r and -self.r <= v.y <= self.r

    def __len__(self) -> int:
        return (2 * self.r + 1) ** 2


class Kind(enum.Enum):
    EXTERIOR = "Exterior"
    INTERIOR = "Interior"
    ON_EDGE = "OnEdge"
    AT_VERTEX = "AtVertex"


@dataclass(frozen=True)
class PointClass:
    """Classification of a lattice point against a simple polygon.

    ``index`` is the edge number ``i`` (edge ``p_{i-1} -> p_i``, 1-based) for
    ``ON_EDGE`` and the vertex number (0-based, ``< n``) for ``AT_VERTEX``.
    """

    kind: Kind
    winding: Rat
    index: Optional[int] = None

    @property
    def on_curve(self) -> bool:
        return self.kind in (Kind.ON_EDGE, Kind.AT_VERTEX)


def _winding_quarters(P: Polygon, q: Vec2) -> int:
    qx, qy = q
    total = 0
    prev = None
    for p in P.vertices:
        cur = Vec2(p.x - qx, p.y - qy)
        if prev is not None:
            total += dang_quarters(prev, cur)
        prev = cur
    return total


def _quarters_to_rat(k: int) -> Rat:
    value = Fraction(k, 4)
    return int(value) if value.denominator == 1 else value


def winding_dang(P: Polygon, q: Vec2) -> Rat:
    """Discrete winding number of ``P`` around ``q`` (exact, in turns)."""
    return _quarters_to_rat(_winding_quarters(P, q))


def winding_ang(P: Polygon, q: Vec2) -> float:
    """Euclidean winding number of ``P`` around ``q`` (floating, in turns)."""
    verts = [v - q for v in P.vertices]
    return sum(ang(a, b) for a, b in zip(verts, verts[1:]))


def default_box_radius(P: Polygon) -> Box:
    """Smallest centered box containing every vertex."""
    require_integer(P)
    return Box(max(max(abs(v.x), abs(v.y)) for v in P.vertices))


def _require_in_box(box: Box, *points: Vec2) -> None:
    for v in points:
        if not box.contains(v):
            raise OutOfBox(f"{v!r} lies outside the box of radius {box.r}")


def welp_edge_quarters(u: Vec2, v: Vec2, box: Box) -> int:
    _require_in_box(box, u, v)
    total = 0
    for q in box.points():
        total += dang_quarters(u - q, v - q)
    return total


def welp_edge(u: Vec2, v: Vec2, box: Box) -> Rat:
    """Sum of ``dang(u - q, v - q)`` over all lattice points ``q`` of ``box``."""
    return _quarters_to_rat(welp_edge_quarters(u, v, box))


def welp(P: Polygon, box: Optional[Box] = None) -> Rat:
    """Weighted enclosed lattice points: the discrete winding number summed over the box.

    Evaluated both point-major and edge-major; the two orders must agree exactly.
    """
    require_closed(P)
    require_integer(P)
    if box is None:
        box = default_box_radius(P)
    _require_in_box(box, *P.vertices)
    by_point = sum(_winding_quarters(P, q) for q in box.points())
    by_edge = sum(welp_edge_quarters(u, v, box) for u, v in P.edges())
    if by_point != by_edge:
        raise InternalError(f"summation orders disagree: {by_point}/4 vs {by_edge}/4")
    return _quarters_to_rat(by_point)


def welp_ang(P: Polygon, box: Optional[Box] = None) -> float:
    """Euclidean counterpart of :func:`welp` (floating)."""
    require_closed(P)
    if box is None:
        box = default_box_radius(P)
    return sum(winding_ang(P, q) for q in box.points())


def involution_rectangle(u: Vec2, v: Vec2, box: Box) -> list:
    """Lattice rectangle of the box that is mapped onto itself by ``q -> u + v - q``.

    Columns run between the endpoints' x-coordinates; rows are the largest
    band inside the box symmetric about ``(u.y + v.y) / 2``.
    """
    lo_x, hi_x = sorted((u.x, v.x))
    s = u.y + v.y
    lo_y = max(-box.r, s - box.r)
    hi_y = min(box.r, s + box.r)
    return [Vec2(x, y) for x in range(lo_x, hi_x + 1) for y in range(lo_y, hi_y + 1)]


def involution_cancellation_check(u: Vec2, v: Vec2, box: Box) -> bool:
    """Verify that the summands of ``welp_edge`` cancel pairwise on the involution rectangle.

    For every ``q`` in the rectangle, ``u + v - q`` is in the rectangle and
    ``dang(u - q', v - q') = -dang(u - q, v - q)``; hence the rectangle sum is 0.
    """
    _require_in_box(box, u, v)
    if u.x == v.x:
        raise DegenerateEdge("the cancellation argument needs u.x != v.x")
    rect = involution_rectangle(u, v, box)
    members = set(rect)
    total = 0
    for q in rect:
        image = u + v - q
        if image not in members:
            return False
        here = dang_quarters(u - q, v - q)
        if dang_quarters(u - image, v - image) != -here:
            return False
        total += here
    return total == 0


def _require_classifiable(P: Polygon) -> None:
    require_closed(P)
    require_integer(P)
    if not is_simple(P):
        raise NotSimple("classification needs a simple polygon")
    if area(P) <= 0:
        raise NotPositivelyOriented("classification needs a positively oriented polygon")


def _classify_unchecked(P: Polygon, q: Vec2) -> PointClass:
    w = winding_dang(P, q)
    verts = P.vertices
    for i, p in enumerate(verts[:-1]):
        if p == q:
            return PointClass(Kind.AT_VERTEX, w, i)
    for i in range(1, len(verts)):
        if point_on_segment(q, verts[i - 1], verts[i]):
            return PointClass(Kind.ON_EDGE, w, i)
    if w == 0:
        return PointClass(Kind.EXTERIOR, w)
    if w == 1:
        return PointClass(Kind.INTERIOR, w)
    raise InternalError(f"off-curve point {q!r} has winding number {w}, expected 0 or 1")


def classify(P: Polygon, q: Vec2) -> PointClass:
    """Classify lattice point ``q`` against a simple, positively oriented integer polygon."""
    _require_classifiable(P)
    if not is_lattice(q):
        raise ValueError(f"{q!r} is not a lattice point")
    return _classify_unchecked(P, q)


def classify_box(P: Polygon, box: Optional[Box] = None) -> dict:
    """Classify every lattice point of ``box``; returns ``{point: PointClass}``."""
    _require_classifiable(P)
    if box is None:
        box = default_box_radius(P)
    _require_in_box(box, *P.vertices)
    return {q: _classify_unchecked(P, q) for q in box.points()}


def curve_kind(P: Polygon, q: Vec2) -> Kind:
    """Classification usable on any polygon (for drawing).

    On-curve tests are exact; off the curve a nonzero winding counts as inside.
    """
    verts = P.vertices
    if q in verts:
        return Kind.AT_VERTEX
    if any(point_on_segment(q, a, b) for a, b in P.edges()):
        return Kind.ON_EDGE
    if verts[0] == verts[-1] and _winding_quarters(P, q) != 0:
        return Kind.INTERIOR
    return Kind.EXTERIOR


__all__: Sequence[str] = (
    "Box",
    "Kind",
    "PointClass",
    "classify",
    "classify_box",
    "curve_kind",
    "default_box_radius",
    "involution_cancellation_check",
    "involution_rectangle",
    "welp",
    "welp_ang",
    "welp_edge",
    "winding_ang",
    "winding_dang",
)
