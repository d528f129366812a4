"""SVG 1.1 pictures of planar arrangements.

The y axis is flipped so larger y is drawn higher up, as in the usual
mathematical figures.  Output depends only on the arrangement and options.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from xml.sax.saxutils import escape, quoteattr

from .errors import UnsupportedDimension
from .geometry import Arrangement

PALETTE = ("#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860", "#da8bc3", "#8c8c8c")


@dataclass(frozen=True)
class SvgOptions:
    width: int = 600  # pixels across the drawn extent, margins excluded
    margin: int = 20
    labels: bool = True
    # 1-based indices or labels to draw emphasised, e.g. a certificate cycle
    highlight: tuple = field(default_factory=tuple)
    fill_opacity: str = "0.15"


def _num(v: Fraction) -> str:
    s = f"{float(v):.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(arr: Arrangement, options: SvgOptions | None = None) -> str:
    if arr.dimension != 2:
        raise UnsupportedDimension(f"can only draw planar arrangements, got dimension {arr.dimension}")
    opt = options or SvgOptions()
    m = opt.margin
    if len(arr) == 0:
        size = 2 * m
        return (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">\n</svg>\n'
        )

    x0 = min(bx.l for bx in arr)
    x1 = max(bx.r for bx in arr)
    y0 = min(bx.b for bx in arr)
    y1 = max(bx.t for bx in arr)
    scale = Fraction(opt.width) / max(x1 - x0, y1 - y0)
    width = (x1 - x0) * scale + 2 * m
    height = (y1 - y0) * scale + 2 * m

    marked = set()
    for h in opt.highlight:
        marked.add(h if isinstance(h, int) else arr.index(str(h)))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">',
        '  <g font-family="sans-serif" font-size="12">',
    ]
    for i in arr.indices():
        bx, label = arr.box(i), arr.label(i)
        colour = PALETTE[(i - 1) % len(PALETTE)]
        px = m + (bx.l - x0) * scale
        py = m + (y1 - bx.t) * scale
        stroke = ' stroke-width="3" stroke-dasharray="6,3"' if i in marked else ' stroke-width="1"'
        out.append(
            f"    <rect id={quoteattr(label)} x=\"{_num(px)}\" y=\"{_num(py)}\" "
            f"width=\"{_num(bx.w * scale)}\" height=\"{_num(bx.h * scale)}\" "
            f"fill=\"{colour}\" fill-opacity=\"{opt.fill_opacity}\" stroke=\"{colour}\"{stroke}/>"
        )
        if opt.labels:
            out.append(f'    <text x="{_num(px + 3)}" y="{_num(py + 13)}" fill="{colour}">{escape(label)}</text>')
    out += ["  </g>", "</svg>", ""]
    return "\n".join(out)
