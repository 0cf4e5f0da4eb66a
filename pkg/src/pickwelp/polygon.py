"""Polygons as vertex sequences, their predicates and oriented area."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import NonIntegerVertices, NotClosed, ZeroArea
from .exact import Rat, Vec2, format_rat, is_lattice, point_on_segment, segments_intersect



@dataclass(frozen=True)
class Polygon:
    """The vertex sequence ``p_0 .. p_n`` (n >= 1), stored exactly as given.

    Edges are ``(p_{i-1}, p_i)`` for ``i = 1 .. n``. A closed polygon repeats
    its first vertex at the end.
    """

    vertices: Tuple[Vec2, ...]

    def __post_init__(self) -> None:
        verts = tuple(v if isinstance(v, Vec2) else Vec2.of(*v) for v in self.vertices)
        if len(verts) < 2:
            raise ValueError("a polygon needs at least two vertices p_0, p_1")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def of(cls, points: Iterable, close: bool = False) -> "Polygon":
        """Build from ``(x, y)`` pairs; ``close=True`` appends ``p_0`` if missing."""
        verts = [Vec2.of(*p) for p in points]
        if close and verts and verts[0] != verts[-1]:
            verts.append(verts[0])
        return cls(tuple(verts))

    @property
    def n(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1

    def edges(self) -> Iterator[Tuple[Vec2, Vec2]]:
        vs = self.vertices
        return zip(vs, vs[1:])

    def is_integer(self) -> bool:
        return all(is_lattice(v) for v in self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Vec2]:
        return iter(self.vertices)

    def __getitem__(self, i: int) -> Vec2:
        return self.vertices[i]


def area_edge(u: Vec2, v: Vec2) -> Rat:
    """Oriented area of the trapezoid between edge ``u -> v`` and the x-axis."""
    value = Fraction((u.x - v.x) * (u.y + v.y), 2)
    return int(value) if value.denominator == 1 else value


def area(P: Polygon) -> Rat:
    """Sum of :func:`area_edge` over all edges; defined for any polygon."""
    total = sum(((u.x - v.x) * (u.y + v.y) for u, v in P.edges()), 0)
    value = Fraction(total, 2)
    return int(value) if value.denominator == 1 else value


def is_closed(P: Polygon) -> bool:
    return P.vertices[0] == P.vertices[-1]


def require_closed(P: Polygon) -> None:
    if not is_closed(P):
        raise NotClosed(f"polygon is not closed: p_0={P[0]!r}, p_n={P[-1]!r}")


def require_integer(P: Polygon) -> None:
    if not P.is_integer():
        bad = next(v for v in P.vertices if not is_lattice(v))
        raise NonIntegerVertices(f"vertex {bad!r} is not a lattice point")


def is_simple(P: Polygon) -> bool:
    """True iff the closed path is injective apart from ``p_0 = p_n``.

    Exact O(n^2) pairwise segment tests. Zero-length edges make a polygon
    non-simple; collinear consecutive edges that continue straight are fine.
    """
    require_closed(P)
    n = P.n
    edges = list(P.edges())
    if any(a == b for a, b in edges):
        return False
    if n < 3:
        return False
    for i in range(n):
        a, b = edges[i]
        for j in range(i + 1, n):
            c, d = edges[j]
            if j == i + 1:
                # shared vertex b == c; must not fold back onto either edge
                if point_on_segment(d, a, b) or point_on_segment(a, c, d):
                    return False
            elif i == 0 and j == n - 1:
                # shared vertex a == d
                if point_on_segment(c, a, b) or point_on_segment(b, c, d):
                    return False
            elif segments_intersect(a, b, c, d):
                return False
    return True


def reverse(P: Polygon) -> Polygon:
    return Polygon(P.vertices[::-1])


def rotate(P: Polygon, k: int) -> Polygon:
    """Re-root a closed polygon so that it starts at vertex ``p_k``."""
    require_closed(P)
    body = P.vertices[:-1]
    k %= len(body)
    body = body[k:] + body[:k]
    return Polygon(body + body[:1])


def translate(P: Polygon, q: Vec2) -> Polygon:
    """The polygon ``P - q``."""
    return Polygon(tuple(v - q for v in P.vertices))


def normalize_positive(P: Polygon) -> Polygon:
    """Return ``P`` or its reversal, whichever has positive area."""
    require_closed(P)
    a = area(P)
    if a == 0:
        raise ZeroArea("orientation is undefined for a polygon of zero area")
    return P if a > 0 else reverse(P)


def orientation_label(P: Polygon) -> str:
    a = area(P)
    return "positive" if a > 0 else "negative" if a < 0 else "degenerate"


def polygon_to_doc(P: Polygon) -> dict:
    return {"vertices": [[_coord_out(v.x), _coord_out(v.y)] for v in P.vertices]}


def _coord_out(x: Rat):
    return x if isinstance(x, int) else format_rat(x)


def polygon_from_doc(doc: dict) -> Polygon:
    """Parse the polygon document ``{"vertices": [[x, y], ...], "closed": bool?}``.

    Coordinates are integers or ``"p/q"`` strings. With ``"closed": true`` the
    closing vertex is appended when it is not already present.
    """
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise ValueError('polygon document needs a "vertices" list')
    raw = doc["vertices"]
    if not isinstance(raw, list):
        raise ValueError('"vertices" must be a list of [x, y] pairs')
    points = []
    for item in raw:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValueError(f"vertex must be an [x, y] pair, got {item!r}")
        for c in item:
            if isinstance(c, float) or isinstance(c, bool):
                raise ValueError(f"coordinate {c!r} must be an integer or a 'p/q' string")
        points.append(item)
    closed = doc.get("closed")
    if closed is not None and not isinstance(closed, bool):
        raise ValueError('"closed" must be a boolean')
    return Polygon.of(points, close=bool(closed))


__all__: Sequence[str] = (
    "Polygon",
    "area",
    "area_edge",
    "is_closed",
    "is_simple",
    "normalize_positive",
    "orientation_label",
    "polygon_from_doc",
    "polygon_to_doc",
    "reverse",
    "rotate",
    "translate",
)
