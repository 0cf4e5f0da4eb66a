"""Standalone SVG figures: lattice grid, polygon path, classified lattice points."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .polygon import Polygon, area, is_closed, is_simple
from .winding import Box, Kind, classify_box, curve_kind

DEFAULT_PALETTE = ("#bbbbbb", "#2a9d8f", "#e76f51", "#264653")


@dataclass(frozen=True)
class RenderSpec:
    cell: float = 24.0
    margin: float = 16.0
    show_grid: bool = True
    palette: Tuple[str, str, str, str] = DEFAULT_PALETTE  # exterior, interior, edge, vertex
    stroke_width: float = 2.0

    def __post_init__(self) -> None:
        if self.cell <= 0:
            raise ValueError("cell size must be positive")
        if len(self.palette) != 4 or len(set(self.palette)) != 4:
            raise ValueError("palette needs four distinct colors")

    def color(self, kind: Kind) -> str:
        return self.palette[[Kind.EXTERIOR, Kind.INTERIOR, Kind.ON_EDGE, Kind.AT_VERTEX].index(kind)]


def _num(x) -> str:
    # fixed formatting keeps the output byte-identical across runs
    text = f"{float(x):.4f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def _extent(P: Polygon) -> int:
    m = max(max(abs(Fraction(v.x)), abs(Fraction(v.y))) for v in P.vertices)
    return int(-(-m // 1))


def render_svg(P: Polygon, spec: Optional[RenderSpec] = None, box: Optional[Box] = None) -> str:
    """Render ``P`` over the lattice box with y pointing up.

    Simple, positively oriented integer polygons are drawn with the exact
    classification; anything else falls back to on-curve tests plus the sign of
    the discrete winding number.
    """
    spec = spec or RenderSpec()
    r = box.r if box is not None else _extent(P)
    c = spec.cell
    size = 2 * r * c + 2 * spec.margin
    offset = r * c + spec.margin

    if P.is_integer() and is_closed(P) and is_simple(P) and area(P) > 0:
        kinds = {q: pc.kind for q, pc in classify_box(P, Box(r)).items()}
    else:
        kinds = {q: curve_kind(P, q) for q in Box(r).points()}

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(size)}" height="{_num(size)}" '
        f'viewBox="0 0 {_num(size)} {_num(size)}">',
        f'<rect width="{_num(size)}" height="{_num(size)}" fill="white"/>',
        # lattice coordinates: x right, y up, origin in the middle
        f'<g transform="matrix({_num(c)} 0 0 {_num(-c)} {_num(offset)} {_num(offset)})">',
    ]
    if spec.show_grid:
        out.append(f'<g class="grid" stroke="#dddddd" stroke-width="{_num(1 / c)}">')
        for t in range(-r, r + 1):
            out.append(f'<line x1="{t}" y1="{-r}" x2="{t}" y2="{r}"/>')
            out.append(f'<line x1="{-r}" y1="{t}" x2="{r}" y2="{t}"/>')
        out.append("</g>")
    pts = " ".join(f"{_num(v.x)},{_num(v.y)}" for v in P.vertices)
    tag = "polygon" if is_closed(P) else "polyline"
    out.append(
        f'<{tag} class="curve" points="{pts}" fill="#f4d35e" fill-opacity="0.3" '
        f'stroke="#1d3557" stroke-width="{_num(spec.stroke_width / c)}" stroke-linejoin="round"/>'
    )
    out.append('<g class="lattice">')
    dot = _num(0.12)
    for q, kind in kinds.items():
        out.append(
            f'<circle class="{kind.value}" cx="{q.x}" cy="{q.y}" r="{dot}" fill="{spec.color(kind)}"/>'
        )
    out.append("</g>")
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
