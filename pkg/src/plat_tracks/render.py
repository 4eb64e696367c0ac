"""Deterministic SVG and DOT renderings of train graphs.

All coordinates are exact rationals formatted to fixed four-decimal
strings, so identical inputs give byte-identical output.
"""

from fractions import Fraction

from .traingraph import _EYE_R, _TAO_R


def _fmt(x):
    f = Fraction(x)
    scaled = f * 10000
    q = scaled.numerator // scaled.denominator
    if scaled.numerator % scaled.denominator * 2 >= scaled.denominator:
        q += 1
    sign = '-' if q < 0 else ''
    q = abs(q)
    return f"{sign}{q // 10000}.{q % 10000:04d}"


def _poly_path(points):
    return "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in points)


def render_svg(g, overlay=None, overlay_cap=2000):
    """SVG drawing of a train graph, optionally with a curve overlay."""
    spec = g.spec
    width = 2 * spec.m + 1
    parts = []
    parts.append('<?xml version="1.0" encoding="UTF-8"?>')
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 -2 {width + 1} 4" width="{120 * (width + 1)}" height="480">')
    parts.append('<g stroke-width="0.03" fill="none">')
    for q in range(1, 2 * spec.m + 1):
        parts.append(f'<circle cx="{q}" cy="0" r="0.05" fill="black" stroke="none"/>')
    for t in g.taos:
        cx = Fraction(2 * t.pair[0] + 1, 2)
        parts.append(f'<circle cx="{_fmt(cx)}" cy="0" r="{_fmt(_TAO_R)}" '
                     f'stroke="black"/>')
        w = Fraction(7, 20) if t.handedness == 'R' else -Fraction(7, 20)
        arc = [(cx, _TAO_R), (cx + w, Fraction(3, 10)),
               (cx - w, -Fraction(3, 10)), (cx, -_TAO_R)]
        parts.append(f'<path d="{_poly_path(arc)}" stroke="black"/>')
    for c in g.connectors:
        t1 = next(t for t in g.taos if t.slot == c.slots[0])
        t2 = next(t for t in g.taos if t.slot == c.slots[1])
        c1 = Fraction(2 * t1.pair[0] + 1, 2)
        c2 = Fraction(2 * t2.pair[0] + 1, 2)
        y1 = Fraction(1, 2) if c.variant[0] == 'L' else -Fraction(1, 2)
        y2 = Fraction(1, 2) if c.variant[1] == 'L' else -Fraction(1, 2)
        x1 = c1 + _TAO_R * Fraction(62, 100)
        x2 = c2 - _TAO_R * Fraction(62, 100)
        parts.append(f'<path d="{_poly_path([(x1, y1), (x2, y2)])}" stroke="black"/>')
    for e in g.eyelets:
        color = 'goldenrod' if e.variant.startswith('gold') else 'black'
        parts.append(f'<circle cx="{e.puncture}" cy="0" r="{_fmt(_EYE_R)}" '
                     f'stroke="{color}"/>')
        sgn = 1 if e.side == 'left' else -1
        x1 = Fraction(e.puncture) + sgn * _EYE_R
        x2 = Fraction(e.puncture) + sgn * Fraction(1, 1)
        parts.append(f'<path d="{_poly_path([(x1, Fraction(0)), (x2, Fraction(0))])}" '
                     f'stroke="{color}"/>')
    if overlay is not None:
        pts = _overlay_polyline(overlay, overlay_cap)
        parts.append(f'<path d="{_poly_path(pts)} Z" stroke="crimson" '
                     f'stroke-width="0.02"/>')
    parts.append('</g>')
    parts.append('</svg>')
    return "\n".join(parts) + "\n"


def _overlay_polyline(diagram, cap):
    from .curves import _to_oracle
    if diagram.total_weight() > cap:
        raise ValueError("curve too heavy to draw")
    return _to_oracle(diagram, salt=0).polyline


def render_dot(g):
    """Abstract graph in DOT form (taos, eyelets, connectors, stems)."""
    lines = ["graph traingraph {"]
    for t in g.taos:
        lines.append(f'  tao{t.slot} [label="tao {t.pair[0]}-{t.pair[1]} '
                     f'{t.handedness}"];')
    for e in g.eyelets:
        lines.append(f'  eye{e.puncture} [label="eyelet p{e.puncture}"];')
    for c in g.connectors:
        lines.append(f'  tao{c.slots[0]} -- tao{c.slots[1]} '
                     f'[label="{c.variant}"];')
    for e in g.eyelets:
        step = 1 if e.side == 'left' else -1
        nxt = e.puncture + step
        if e.chain_pos == 1:
            t = next(t for t in g.taos if nxt in t.pair)
            lines.append(f'  eye{e.puncture} -- tao{t.slot};')
        else:
            lines.append(f'  eye{e.puncture} -- eye{nxt};')
    lines.append("}")
    return "\n".join(lines) + "\n"
