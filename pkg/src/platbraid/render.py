"""Deterministic SVG drawings of braids and plats.

Fixed strands are thick grey full-height lines, moving strands black.
Crossings break the under strand; plat arcs are semicircles, and an arc
labelled over is drawn on top of the fixed strands it straddles.
"""

from __future__ import annotations

from .braid import BraidWord
from .mixed import MixedBraidWord, embed
from .morse import GeometricPlat, MixedMorseDiagram, braid_to_plat
from .plat import OVER, PlatPresentation

DX, DY, MARGIN = 40, 40, 30
FIXED = 'stroke="#888" stroke-width="5"'
MOVING = 'stroke="#000" stroke-width="2"'
HALO = 'stroke="#fff" stroke-width="9"'


def _x(p: int) -> float:
    return MARGIN + DX * p


def _line(x1, y1, x2, y2, style) -> str:
    return f'<line x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}" {style} fill="none"/>'


def _arc_path(xa, xb, y, up: bool) -> str:
    r = (xb - xa) / 2
    sweep = 1 if up else 0
    return f'M {xa:g} {y:g} A {r:g} {r:g} 0 0 {sweep} {xb:g} {y:g}'


def _draw(word: BraidWord, fixed_top, top_labels, bottom_labels, closed: bool) -> str:
    m = word.strand_count
    arc_room = DX * 1.5 if closed else 0
    top = MARGIN + arc_room
    rows = max(len(word.letters), 1)
    bottom = top + DY * rows
    width = 2 * MARGIN + DX * (m + 1)
    height = bottom + arc_room + MARGIN
    fixed = [p in set(fixed_top) for p in range(1, m + 1)]
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
           f'viewBox="0 0 {width:g} {height:g}">',
           f'<rect width="{width:g}" height="{height:g}" fill="#fff"/>']
    body = []
    if not word.letters:
        for p in range(1, m + 1):
            body.append(_line(_x(p), top, _x(p), bottom, FIXED if fixed[p - 1] else MOVING))
    for row, (i, s) in enumerate(word.letters):
        y0, y1 = top + DY * row, top + DY * (row + 1)
        for p in range(1, m + 1):
            if p not in (i, i + 1):
                body.append(_line(_x(p), y0, _x(p), y1, FIXED if fixed[p - 1] else MOVING))
        left_style = FIXED if fixed[i - 1] else MOVING
        right_style = FIXED if fixed[i] else MOVING
        xl, xr = _x(i), _x(i + 1)
        if s > 0:  # left strand over
            under, over = (xr, xl, right_style), (xl, xr, left_style)
        else:
            under, over = (xl, xr, left_style), (xr, xl, right_style)
        body.append(_line(under[0], y0, under[1], y1, under[2]))
        body.append(_line(over[0], y0, over[1], y1, HALO))
        body.append(_line(over[0], y0, over[1], y1, over[2]))
        fixed[i - 1], fixed[i] = fixed[i], fixed[i - 1]
    out += body
    if closed:
        out += _arcs(fixed_top, m, top, top_labels, up=True, reach=arc_room)
        bottom_fixed = [p for p, f in enumerate(fixed, start=1) if f]
        out += _arcs(bottom_fixed, m, bottom, bottom_labels, up=False, reach=arc_room)
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _arcs(fixed_pos, m: int, y: float, labels, up: bool, reach: float) -> list:
    fixed = set(fixed_pos)
    moving = [p for p in range(1, m + 1) if p not in fixed]
    end = y - reach if up else y + reach
    under, over, posts = [], [], []
    for p in fixed_pos:
        posts.append(_line(_x(p), y, _x(p), end, FIXED))
    for k in range(0, len(moving), 2):
        a, b = moving[k], moving[k + 1]
        path = _arc_path(_x(a), _x(b), y, up)
        if labels[k // 2] == OVER:
            over.append(f'<path d="{path}" {HALO} fill="none"/>')
            over.append(f'<path d="{path}" {MOVING} fill="none"/>')
        else:
            under.append(f'<path d="{path}" {MOVING} fill="none"/>')
    posts_haloed = []
    for p in fixed_pos:
        posts_haloed.append(_line(_x(p), y, _x(p), end, HALO))
        posts_haloed.append(_line(_x(p), y, _x(p), end, FIXED))
    return under + (posts_haloed if under else posts) + over


def render(obj, closed: bool = True) -> str:
    """SVG for a BraidWord, MixedBraidWord, plat or Morse diagram."""
    if isinstance(obj, MixedMorseDiagram):
        obj = braid_to_plat(obj)
    if isinstance(obj, GeometricPlat):
        return _draw(obj.word, obj.fixed_top, obj.labels.top, obj.labels.bottom, closed)
    if isinstance(obj, PlatPresentation):
        obj = obj.word
    if isinstance(obj, MixedBraidWord):
        arcs = obj.n // 2
        labels = (OVER,) * arcs
        return _draw(embed(obj), tuple(range(1, obj.g + 1)), labels, labels,
                     closed and obj.n % 2 == 0)
    if isinstance(obj, BraidWord):
        m = obj.strand_count
        labels = (OVER,) * (m // 2)
        return _draw(obj, (), labels, labels, closed and m % 2 == 0)
    raise TypeError(f"cannot render {type(obj).__name__}")
