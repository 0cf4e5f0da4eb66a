"""Named polygons and seeded random polygon families.

Randomness comes from :class:`SplitMix64`, a fixed 64-bit generator, so a seed
maps to the same polygon on every platform and Python version.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd
from typing import List, Sequence

from .errors import ExhaustedRetries, NonPositiveSide
from .exact import Vec2, det2
from .polygon import Polygon, area, is_simple

MASK64 = (1 << 64) - 1
RETRY_BUDGET = 256


class SplitMix64:
    """SplitMix64 (Steele, Lea and Flood): state += golden gamma, then a 3-step mix."""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)


def _half(v: Vec2) -> int:
    # 0 for the upper half-plane including the positive x-axis, 1 otherwise
    return 0 if v.y > 0 or (v.y == 0 and v.x > 0) else 1


def angle_cmp(a: Vec2, b: Vec2) -> int:
    """Exact counterclockwise order of nonzero vectors, starting at direction (1, 0)."""
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    d = det2(a, b)
    return -1 if d > 0 else 1 if d < 0 else 0


angle_key = functools.cmp_to_key(angle_cmp)


def rectangle(a: int, b: int) -> Polygon:
    """Counterclockwise ``[0, a] x [0, b]``."""
    if a < 1 or b < 1:
        raise NonPositiveSide(f"sides must be positive, got a={a}, b={b}")
    return Polygon.of([(0, 0), (a, 0), (a, b), (0, b), (0, 0)])


def oblique_square() -> Polygon:
    return Polygon.of([(3, 0), (0, 3), (-3, 0), (0, -3), (3, 0)])


def figure_eight() -> Polygon:
    return Polygon.of([(1, 0), (4, 1), (0, 3), (3, 4), (1, 0)])


def primitive_vectors(m: int) -> List[Vec2]:
    """All ``(x, y)`` with ``max(|x|, |y|) <= m`` and ``gcd(|x|, |y|) = 1``."""
    return [
        Vec2(x, y)
        for x in range(-m, m + 1)
        for y in range(-m, m + 1)
        if gcd(x, y) == 1
    ]


def farey_sunburst(m: int) -> Polygon:
    """Star polygon through the primitive vectors of max-norm <= m, in angular order.

    Primitive vectors where the path runs straight on are boundary points but
    not vertices; for m = 6 that leaves 64 vertices and 32 further boundary points.
    The walk starts at the first corner at or after direction (1, 0).
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    ring = sorted(primitive_vectors(m), key=angle_key)
    k = len(ring)
    corners = [
        ring[i]
        for i in range(k)
        if det2(ring[i] - ring[i - 1], ring[(i + 1) % k] - ring[i]) != 0
    ]
    return Polygon(tuple(corners) + (corners[0],))


def _distinct_points(rng: SplitMix64, k: int, r: int) -> List[Vec2]:
    seen = set()
    out = []
    while len(out) < k:
        p = Vec2(rng.randint(-r, r), rng.randint(-r, r))
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def _check_args(k: int, r: int, k_min: int) -> None:
    if k < k_min:
        raise ValueError(f"k must be at least {k_min}")
    if r < 1:
        raise ValueError("r must be at least 1")
    if k > (2 * r + 1) ** 2:
        raise ValueError(f"cannot draw {k} distinct points from a box of radius {r}")


def random_simple_polygon(seed: int, k: int, r: int) -> Polygon:
    """Star-shaped simple polygon on ``k`` distinct lattice points of ``{-r..r}^2``.

    Points are sorted counterclockwise around their centroid. A draw is
    rejected and redrawn from the same stream when a point coincides with the
    centroid, two points share a direction from it, or three consecutive
    vertices are collinear. The result is checked with the exact predicates.
    """
    _check_args(k, r, 3)
    rng = SplitMix64(seed)
    for _ in range(RETRY_BUDGET):
        pts = _distinct_points(rng, k, r)
        cx = Fraction(sum(p.x for p in pts), k)
        cy = Fraction(sum(p.y for p in pts), k)
        rel = [(Vec2(p.x - cx, p.y - cy), p) for p in pts]
        if any(d == (0, 0) for d, _ in rel):
            continue
        rel.sort(key=lambda item: angle_key(item[0]))
        dirs = [d for d, _ in rel]
        if any(angle_cmp(dirs[i], dirs[i + 1]) == 0 for i in range(k - 1)):
            continue
        ring = [p for _, p in rel]
        P = Polygon(tuple(ring) + (ring[0],))
        if area(P) > 0 and is_simple(P):
            return P
    raise ExhaustedRetries(f"no simple polygon after {RETRY_BUDGET} draws (seed={seed}, k={k}, r={r})")


def random_closed_polygon(seed: int, k: int, r: int) -> Polygon:
    """``k`` distinct lattice points in draw order, closed; may self-intersect."""
    _check_args(k, r, 2)
    rng = SplitMix64(seed)
    pts = _distinct_points(rng, k, r)
    return Polygon(tuple(pts) + (pts[0],))


def _family_params(seed: int, k_max: int, r_max: int, k_min: int, r_min: int):
    rng = SplitMix64(seed ^ 0x5DEECE66D)
    r = rng.randint(r_min, r_max)
    k = rng.randint(k_min, min(k_max, (2 * r + 1) ** 2 - 1))
    return k, r


def simple_family(count: int, base_seed: int = 0, k_max: int = 12, r_max: int = 8) -> List[Polygon]:
    """``count`` random simple polygons with seeds ``base_seed + i`` and k, r drawn per seed."""
    out = []
    for i in range(count):
        k, r = _family_params(base_seed + i, k_max, r_max, 3, 2)
        out.append(random_simple_polygon(base_seed + i, k, r))
    return out


def closed_family(count: int, base_seed: int = 0, k_max: int = 10, r_max: int = 6) -> List[Polygon]:
    """``count`` random closed (generally non-simple) polygons."""
    out = []
    for i in range(count):
        k, r = _family_params(base_seed + i, k_max, r_max, 2, 1)
        out.append(random_closed_polygon(base_seed + i, k, r))
    return out


__all__: Sequence[str] = (
    "SplitMix64",
    "angle_cmp",
    "angle_key",
    "closed_family",
    "farey_sunburst",
    "figure_eight",
    "oblique_square",
    "primitive_vectors",
    "random_closed_polygon",
    "random_simple_polygon",
    "rectangle",
    "simple_family",
)
