"""Angle measures in units of full turns.

``dang`` is the exact quarter-turn measure that counts signed crossings of the
vertical axis. ``ang`` is the floating euclidean measure, kept only for
cross-checks. ``check_angle_axioms`` runs any measure through the four
defining axioms (scaling, symmetry, addition, normalization).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Tuple, Union

from .errors import DegenerateSample
from .exact import Rat, Vec2, det2, dot2, point_on_segment, sign

AngleMeasure = Callable[[Vec2, Vec2], Union[Fraction, float]]

QUARTER = Fraction(1, 4)
E1 = Vec2(1, 0)
E2 = Vec2(0, 1)


def dang_quarters(u: Vec2, v: Vec2) -> int:
    """``4 * dang(u, v)`` as an int in {-2, -1, 0, 1, 2}."""
    return abs(sign(u.x) - sign(v.x)) * sign(det2(u, v))


def dang(u: Vec2, v: Vec2) -> Fraction:
    """Discrete angle from ``u`` to ``v``: a multiple of 1/4 in [-1/2, 1/2]."""
    return Fraction(dang_quarters(u, v), 4)


def is_antiparallel(u: Vec2, v: Vec2) -> bool:
    """True iff |u||v| + u.v = 0, i.e. either vector is zero or they point opposite ways."""
    if u == (0, 0) or v == (0, 0):
        return True
    return det2(u, v) == 0 and dot2(u, v) < 0


def ang(u: Vec2, v: Vec2) -> float:
    """Euclidean angle from ``u`` to ``v`` in turns, in ]-1/2, 1/2[.

    Antiparallel and zero arguments give 0. That case is decided with exact
    predicates before any float is formed.
    """
    if is_antiparallel(u, v):
        return 0.0
    return math.atan2(float(det2(u, v)), float(dot2(u, v))) / (2 * math.pi)


@dataclass(frozen=True)
class AxiomSample:
    u: Vec2
    v: Vec2
    s: Vec2
    lam: Rat


@dataclass
class AxiomResult:
    passed: bool = True
    checked: int = 0
    counterexample: Optional[str] = None

    def fail(self, message: str) -> None:
        if self.passed:
            self.passed = False
            self.counterexample = message


@dataclass
class AxiomReport:
    scaling: AxiomResult = field(default_factory=AxiomResult)
    symmetry: AxiomResult = field(default_factory=AxiomResult)
    addition: AxiomResult = field(default_factory=AxiomResult)
    normalization: AxiomResult = field(default_factory=AxiomResult)

    AXIOMS = ("scaling", "symmetry", "addition", "normalization")

    @property
    def passed(self) -> bool:
        return all(getattr(self, name).passed for name in self.AXIOMS)

    def items(self):
        return [(name, getattr(self, name)) for name in self.AXIOMS]

    def to_dict(self) -> dict:
        out = {"passed": self.passed}
        for name, res in self.items():
            out[name] = {"passed": res.passed, "checked": res.checked, "counterexample": res.counterexample}
        return out


def _close(a, b, tol: float) -> bool:
    if tol == 0:
        return a == b
    return abs(a - b) <= tol


def check_angle_axioms(
    mu: AngleMeasure,
    samples: Iterable[Union[AxiomSample, Tuple[Vec2, Vec2, Vec2, Rat]]],
    tol: float = 0,
    allow_origin_segment: bool = False,
) -> AxiomReport:
    """Evaluate the angle-measure axioms of ``mu`` on every sample.

    Each sample is ``(u, v, s, lam)`` with ``lam > 0`` and ``s`` on ``[u, v]``.
    Samples whose segment ``[u, v]`` passes through the origin are rejected with
    :class:`DegenerateSample` unless ``allow_origin_segment`` is set (for dang the
    addition axiom holds there trivially, for an arbitrary measure it is unclaimed).
    With ``tol == 0`` comparisons are exact equality.
    """
    report = AxiomReport()
    norm = mu(E1, E2)
    report.normalization.checked = 1
    if not _close(norm, QUARTER, tol):
        report.normalization.fail(f"mu(e1, e2) = {norm}, expected 1/4")

    for sample in samples:
        if isinstance(sample, AxiomSample):
            u, v, s, lam = sample.u, sample.v, sample.s, sample.lam
        else:
            u, v, s, lam = sample
        if not lam > 0:
            raise DegenerateSample(f"scaling factor must be positive, got {lam}")
        if not point_on_segment(s, u, v):
            raise DegenerateSample(f"{s!r} does not lie on [{u!r}, {v!r}]")
        if not allow_origin_segment and point_on_segment(Vec2(0, 0), u, v):
            raise DegenerateSample(f"origin lies on [{u!r}, {v!r}]")

        base = mu(u, v)
        report.scaling.checked += 1
        if not (_close(mu(u.scale(lam), v), base, tol) and _close(mu(u, v.scale(lam)), base, tol)):
            report.scaling.fail(f"u={u!r} v={v!r} lam={lam}")

        report.symmetry.checked += 1
        if not (_close(mu(v, u), -base, tol) and _close(mu(-u, -v), base, tol)):
            report.symmetry.fail(f"u={u!r} v={v!r}")

        report.addition.checked += 1
        if not _close(mu(u, s) + mu(s, v), base, tol):
            report.addition.fail(f"u={u!r} v={v!r} s={s!r}")
    return report


def axiom_samples(rng, count: int, radius: int = 8, max_den: int = 6) -> list:
    """Draw ``count`` samples with rational ``u``, ``v`` avoiding origin segments.

    ``rng`` is a :class:`pickwelp.generators.SplitMix64`. The split point is
    ``s = u + t (v - u)`` with ``t`` rational in [0, 1].
    """
    out: list = []
    while len(out) < count:
        du = rng.randint(1, max_den)
        dv = rng.randint(1, max_den)
        u = Vec2.of(Fraction(rng.randint(-radius * du, radius * du), du), Fraction(rng.randint(-radius * du, radius * du), du))
        v = Vec2.of(Fraction(rng.randint(-radius * dv, radius * dv), dv), Fraction(rng.randint(-radius * dv, radius * dv), dv))
        if point_on_segment(Vec2(0, 0), u, v):
            continue
        dt = rng.randint(1, max_den)
        t = Fraction(rng.randint(0, dt), dt)
        s = Vec2.of(u.x + t * (v.x - u.x), u.y + t * (v.y - u.y))
        lam = Fraction(rng.randint(1, 5 * max_den), rng.randint(1, max_den))
        out.append(AxiomSample(u, v, s, lam))
    return out


def lattice_axiom_samples(rng, count: int, radius: int = 8) -> list:
    """Like :func:`axiom_samples` with integer ``u``, ``v`` and lattice-friendly ``s``."""
    out: list = []
    while len(out) < count:
        u = Vec2(rng.randint(-radius, radius), rng.randint(-radius, radius))
        v = Vec2(rng.randint(-radius, radius), rng.randint(-radius, radius))
        if point_on_segment(Vec2(0, 0), u, v):
            continue
        dt = rng.randint(1, 4)
        t = Fraction(rng.randint(0, dt), dt)
        s = Vec2.of(u.x + t * (v.x - u.x), u.y + t * (v.y - u.y))
        out.append(AxiomSample(u, v, s, rng.randint(1, 9)))
    return out


__all__: Sequence[str] = (
    "AngleMeasure",
    "AxiomReport",
    "AxiomResult",
    "AxiomSample",
    "ang",
    "axiom_samples",
    "check_angle_axioms",
    "dang",
    "dang_quarters",
    "is_antiparallel",
    "lattice_axiom_samples",
)
