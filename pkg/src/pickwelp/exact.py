"""Exact scalars, plane vectors and the orientation predicates.

Scalars are ``int`` or ``fractions.Fraction``; both are exact and mix freely.
Integral values are kept as ``int`` where possible, which keeps the lattice
sweeps fast without giving up exactness.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Union

Rat = Union[int, Fraction]

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def as_rat(value) -> Rat:
    """Coerce ``value`` to an exact scalar, collapsing integral fractions to int.

    Floats are rejected: a binary float is almost never the rational the user meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        value = Fraction(value)
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rat(text: str) -> Rat:
    """Parse ``"p"`` or ``"p/q"`` (q > 0) into an exact scalar."""
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return num
    den = int(m.group(2))
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return as_rat(Fraction(num, den))


def format_rat(value: Rat) -> str:
    """Canonical string form: ``"p"`` when integral, else ``"p/q"`` reduced with q > 0."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Vec2(NamedTuple):
    """A point or vector of the rational plane.

    Lattice vectors are simply ``Vec2`` instances with integer coordinates;
    see :func:`is_lattice`.
    """

    x: Rat
    y: Rat

    @classmethod
    def of(cls, x, y) -> "Vec2":
        return cls(as_rat(x), as_rat(y))

    def __add__(self, other: "Vec2") -> "Vec2":  # type: ignore[override]
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def scale(self, factor: Rat) -> "Vec2":
        return Vec2(_norm(factor * self.x), _norm(factor * self.y))

    def __repr__(self) -> str:
        return f"Vec2({format_rat(self.x)}, {format_rat(self.y)})"


# Alias documenting intent: a Vec2 whose coordinates are ints.
LatticeVec = Vec2


def _norm(value: Rat) -> Rat:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def is_lattice(v: Vec2) -> bool:
    return Fraction(v.x).denominator == 1 and Fraction(v.y).denominator == 1


def sign(x: Rat) -> int:
    return (x > 0) - (x < 0)


def det2(u: Vec2, v: Vec2) -> Rat:
    return u.x * v.y - u.y * v.x


def dot2(u: Vec2, v: Vec2) -> Rat:
    return u.x * v.x + u.y * v.y


def orientation(a: Vec2, b: Vec2, c: Vec2) -> int:
    """Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear."""
    return sign(det2(b - a, c - a))


def point_on_segment(q: Vec2, u: Vec2, v: Vec2) -> bool:
    """True iff ``q`` lies on the closed segment ``[u, v]``."""
    if det2(v - u, q - u) != 0:
        return False
    return min(u.x, v.x) <= q.x <= max(u.x, v.x) and min(u.y, v.y) <= q.y <= max(u.y, v.y)


def segments_intersect(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> bool:
    """True iff the closed segments ``[a, b]`` and ``[c, d]`` share a point.

    Touching and collinear overlap both count as intersecting.
    """
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and point_on_segment(c, a, b))
        or (o2 == 0 and point_on_segment(d, a, b))
        or (o3 == 0 and point_on_segment(a, c, d))
        or (o4 == 0 and point_on_segment(b, c, d))
    )
