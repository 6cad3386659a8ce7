"""Monochrome SVG drawing of successive conjunctions on a circle."""

from xml.sax.saxutils import escape

from .series import classify_families, generate_series, trigon_points

SIZE = 800
_MARGIN = 60
# distinct dash patterns so the families stay apart without colour
_STROKES = ("none", "12,6", "3,4")


def _fmt(v):
    return f"{v:.2f}"


def render_trigon(params, count, title="Successive conjunctions"):
    c = SIZE / 2
    scale = (SIZE / 2 - _MARGIN) / params.radius
    events = generate_series(params, count)
    points = trigon_points(params, count)
    xy = [(c + x * scale, c - y * scale) for x, y in points]

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{escape(title)}</title>",
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
        f'<circle cx="{_fmt(c)}" cy="{_fmt(c)}" r="{_fmt(params.radius * scale)}" '
        'fill="none" stroke="black" stroke-width="1"/>',
        f'<circle cx="{_fmt(c)}" cy="{_fmt(c)}" r="4" fill="black"/>',
    ]
    for fam, members in enumerate(classify_families(events)):
        if len(members) < 2:
            continue
        pts = " ".join(f"{_fmt(xy[e.index][0])},{_fmt(xy[e.index][1])}" for e in members)
        tag = "polygon" if len(members) > 2 else "polyline"
        out.append(
            f'<{tag} class="family-{fam}" points="{pts}" fill="none" stroke="black" '
            f'stroke-width="1.5" stroke-dasharray="{_STROKES[fam]}"/>'
        )
    for e, (x, y) in zip(events, xy):
        # push labels outward from the centre
        lx, ly = c + (x - c) * 1.08, c + (y - c) * 1.08
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" fill="black"/>')
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-family="sans-serif" font-size="16" '
            f'text-anchor="middle" dominant-baseline="middle">C_{e.index}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
