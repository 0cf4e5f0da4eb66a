"""Turning angles, the umlaufzahl and the secant identities of the homotopy argument.

Vertex ``i`` of a closed polygon with ``n`` edges has incoming direction
``a = p_i - p_{i-1}`` and outgoing direction ``b = p_{i+1} - p_i`` (indices
mod n). The turning angle is ``mu(a, b)``. The interior angle is the
counterclockwise angle from ``b`` to ``-a``; a single measure value
``mu(b, -a)`` only determines it modulo one turn, so the branch is fixed by the
turn direction: ``+1`` at right turns and ``+1/2`` where the path runs straight.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import (
    DegenerateTriple,
    EdgesIntersect,
    IndexOutOfRange,
    NotPositivelyOriented,
    NotSimple,
    ZeroLengthEdge,
)
from .exact import Vec2, det2, dot2, segments_intersect
from .measures import AngleMeasure, dang
from .polygon import Polygon, area, is_simple, require_closed, require_integer
from .winding import winding_dang

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TurningProfile:
    alphas: Tuple
    betas: Tuple
    raw_betas: Tuple
    straight: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def umlaufzahl(self):
        return sum(self.alphas, Fraction(0)) if _exact(self.alphas) else sum(self.alphas)

    @property
    def beta_sum(self):
        return sum(self.betas, Fraction(0)) if _exact(self.betas) else sum(self.betas)


def _exact(values) -> bool:
    return all(not isinstance(v, float) for v in values)


def _ring(P: Polygon) -> List[Vec2]:
    require_closed(P)
    ring = list(P.vertices[:-1])
    for i in range(len(ring)):
        if ring[i] == ring[(i + 1) % len(ring)]:
            raise ZeroLengthEdge(f"edge {i + 1} has zero length")
    return ring


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def turning_angles(P: Polygon, mu: AngleMeasure = dang) -> TurningProfile:
    """Turning angle and interior angle at every vertex ``p_0 .. p_{n-1}``."""
    ring = _ring(P)
    n = len(ring)
    alphas, betas, raw, straight = [], [], [], []
    for i in range(n):
        a = ring[i] - ring[i - 1]
        b = ring[(i + 1) % n] - ring[i]
        alpha = mu(a, b)
        beta_raw = mu(b, -a)
        turn = det2(a, b)
        if turn < 0:
            beta = beta_raw + 1
        elif turn == 0 and dot2(a, b) > 0:
            beta = beta_raw + HALF if not isinstance(beta_raw, float) else beta_raw + 0.5
            straight.append(i)
        else:
            beta = beta_raw
        alphas.append(_norm(alpha))
        betas.append(_norm(beta))
        raw.append(_norm(beta_raw))
    return TurningProfile(tuple(alphas), tuple(betas), tuple(raw), tuple(straight))


def _require_simple_positive(P: Polygon) -> None:
    if not is_simple(P):
        raise NotSimple("the umlaufsatz is stated for simple polygons")
    if area(P) <= 0:
        raise NotPositivelyOriented("the umlaufsatz is stated for positively oriented polygons")


def check_umlaufsatz(P: Polygon, permissive: bool = False) -> bool:
    """True iff the discrete turning angles sum to exactly one full turn.

    Also requires the interior angles to sum to ``n/2 - 1``. With
    ``permissive`` the simplicity and orientation preconditions are not
    enforced and the check simply reports the outcome.
    """
    require_closed(P)
    if not permissive:
        _require_simple_positive(P)
    prof = turning_angles(P)
    return prof.umlaufzahl == 1 and prof.beta_sum == Fraction(prof.n, 2) - 1


def vertex_angle_consistency(P: Polygon) -> bool:
    """True iff the discrete winding number at each vertex equals its interior angle."""
    require_integer(P)
    _require_simple_positive(P)
    prof = turning_angles(P)
    ring = P.vertices[:-1]
    return all(winding_dang(P, p) == beta for p, beta in zip(ring, prof.betas))


def _vertex(ring: Sequence[Vec2], j: int) -> Vec2:
    return ring[j % len(ring)]


def secant_triangle_identity(P: Polygon, i: int, mu: AngleMeasure = dang) -> bool:
    """``mu(s(i-1,i), s(i,i+1)) == mu(s(i-1,i), s(i-1,i+1)) + mu(s(i-1,i+1), s(i,i+1))``.

    Secants are ``s(i, j) = p_j - p_i`` with cyclic indices.
    """
    ring = _ring(P)
    n = len(ring)
    if not 0 <= i <= n - 2:
        raise IndexOutOfRange(f"i={i} outside 0..{n - 2}")
    prev, cur, nxt = _vertex(ring, i - 1), ring[i], _vertex(ring, i + 1)
    if prev == cur or cur == nxt or prev == nxt:
        raise DegenerateTriple(f"vertices around p_{i} are not pairwise distinct")
    lhs = mu(cur - prev, nxt - cur)
    rhs = mu(cur - prev, nxt - prev) + mu(nxt - prev, nxt - cur)
    return lhs == rhs


def secant_square_identity(P: Polygon, i: int, j: int, mu: AngleMeasure = dang) -> bool:
    """Four-term alternating secant sum for the disjoint edges ``[p_i, p_i+1]`` and ``[p_j, p_j+1]``."""
    ring = _ring(P)
    n = len(ring)
    if not (0 <= i < n - 2 and i + 1 < j <= n - 1):
        raise IndexOutOfRange(f"(i, j)=({i}, {j}) needs 0 <= i < {n - 2} and i+1 < j <= {n - 1}")
    pi, pi1 = ring[i], _vertex(ring, i + 1)
    pj, pj1 = ring[j], _vertex(ring, j + 1)
    if segments_intersect(pi, pi1, pj, pj1):
        raise EdgesIntersect(f"edges at {i} and {j} intersect; the identity is not claimed")
    total = mu(pj - pi, pj1 - pi) + mu(pj1 - pi, pj1 - pi1) - mu(pj - pi, pj - pi1) - mu(pj - pi1, pj1 - pi1)
    return total == 0


def square_pairs(P: Polygon) -> List[Tuple[int, int]]:
    """Index pairs ``(i, j)`` at which :func:`secant_square_identity` is applicable."""
    ring = _ring(P)
    n = len(ring)
    return [
        (i, j)
        for i in range(n - 2)
        for j in range(i + 2, n)
        if not segments_intersect(ring[i], _vertex(ring, i + 1), ring[j], _vertex(ring, j + 1))
    ]


__all__: Sequence[str] = (
    "TurningProfile",
    "check_umlaufsatz",
    "secant_square_identity",
    "secant_triangle_identity",
    "square_pairs",
    "turning_angles",
    "vertex_angle_consistency",
)
