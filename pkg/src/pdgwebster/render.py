"""Static SVG and TikZ pictures of elements, one picture per term.

Strands sit at fixed x positions and layers at increasing heights.  Black
strands are thin lines, red strands are doubled red lines labelled at the
bottom, black dots are filled discs, red dots E(d) are red discs with a label.
A bimodule element gets a trivalent vertex on the side where the two red
strands merge.
"""

from __future__ import annotations

from .algebra import PSI, X, Element, signed
from .seqcore import BLACK

DX, DY, MARGIN = 40, 30, 20


def _segments(A, bottom, layers):
    """Per layer: list of (x0, x1, color, label) strand pieces and the dot, if any."""
    out = []
    cur = list(bottom)
    for kind, pos, d in layers:
        pieces = []
        nxt = list(cur)
        if kind == PSI:
            nxt[pos - 1], nxt[pos] = cur[pos], cur[pos - 1]
        for idx, v in enumerate(cur, start=1):
            if kind == PSI and idx in (pos, pos + 1):
                target = pos + 1 if idx == pos else pos
            else:
                target = idx
            pieces.append((idx, target, v))
        dot = None if kind == PSI else (kind, pos, d)
        out.append((pieces, dot))
        cur = nxt
    return out, tuple(cur)


def _x(pos):
    return MARGIN + DX * pos


def _term_svg(A, bottom, layers, coeff, yoff, merge=None):
    rows = max(len(layers), 1)
    height = rows * DY
    parts = []
    y_base = yoff + height + 2 * MARGIN

    def y_at(level):
        return y_base - MARGIN - level * DY

    segs, top = _segments(A, bottom, layers)
    if not layers:
        segs = [([(i, i, v) for i, v in enumerate(bottom, start=1)], None)]
    for level, (pieces, dot) in enumerate(segs):
        for a, b, v in pieces:
            x0, x1 = _x(a), _x(b)
            y0, y1 = y_at(level), y_at(level + 1)
            if v == BLACK:
                parts.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="black" stroke-width="1.5"/>')
            else:
                for off in (-1.5, 1.5):
                    parts.append(
                        f'<line x1="{x0 + off}" y1="{y0}" x2="{x1 + off}" y2="{y1}" stroke="red" stroke-width="1"/>'
                    )
        if dot is not None:
            kind, pos, d = dot
            cy = (y_at(level) + y_at(level + 1)) / 2
            if kind == X:
                parts.append(f'<circle cx="{_x(pos)}" cy="{cy}" r="4" fill="black"/>')
            else:
                parts.append(f'<circle cx="{_x(pos)}" cy="{cy}" r="4" fill="red"/>')
                parts.append(f'<text x="{_x(pos) + 6}" y="{cy + 4}" font-size="10" fill="red">E{d}</text>')
    for i, v in enumerate(bottom, start=1):
        if v != BLACK:
            parts.append(
                f'<text x="{_x(i) - 4}" y="{y_base - 4}" font-size="10" fill="red">{A.label(v)}</text>'
            )
    if merge is not None:
        pos, label, at_top = merge
        y = y_at(len(segs)) if at_top else y_at(0)
        yy = y - DY / 2 if at_top else y + DY / 2
        xm = (_x(pos) + _x(pos + 1)) / 2
        for xx in (_x(pos), _x(pos + 1)):
            parts.append(f'<line x1="{xx}" y1="{y}" x2="{xm}" y2="{yy}" stroke="red" stroke-width="2"/>')
        parts.append(f'<circle cx="{xm}" cy="{yy}" r="2" fill="red"/>')
        parts.append(f'<text x="{xm + 5}" y="{yy}" font-size="10" fill="red">{label}</text>')
    c = signed(coeff, A.p)
    parts.append(f'<text x="4" y="{yoff + 14}" font-size="12">{c}</text>')
    return parts, height + 3 * MARGIN


def render_svg(el: Element, merge=None) -> str:
    A = el.algebra
    width = _x(A.strands + 1) + MARGIN
    body = []
    y = 0
    for (bottom, layers), c in sorted(el.terms.items()):
        parts, h = _term_svg(A, bottom, layers, c, y, _merge_at(A, bottom, layers, merge))
        body.extend(parts)
        y += h
    if not el.terms:
        body.append('<text x="4" y="14" font-size="12">0</text>')
        y = 20
    head = f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{y}" viewBox="0 0 {width} {y}">'
    return "\n".join([head] + body + ["</svg>"]) + "\n"


def _merge_at(A, bottom, layers, merge):
    """merge = (side, j): a trivalent vertex over red strands j, j+1 on the merged side."""
    if merge is None:
        return None
    side, j = merge
    at_top = side == "up"
    seq = A.walk(bottom, layers) if at_top else bottom
    pos = seq.index(j) + 1
    return (pos, A.label(j) + A.label(j + 1), at_top)


def render_tikz(el: Element, merge=None) -> str:
    A = el.algebra
    out = []
    if not el.terms:
        return "% zero element\n0\n"
    for (bottom, layers), c in sorted(el.terms.items()):
        lines = [f"% coefficient {signed(c, A.p)}", "\\begin{tikzpicture}[scale=0.6]"]
        segs, top = _segments(A, bottom, layers)
        if not layers:
            segs = [([(i, i, v) for i, v in enumerate(bottom, start=1)], None)]
        for level, (pieces, dot) in enumerate(segs):
            for a, b, v in pieces:
                style = "black" if v == BLACK else "red, double"
                lines.append(f"\\draw[{style}] ({a},{level}) -- ({b},{level + 1});")
            if dot is not None:
                kind, pos, d = dot
                if kind == X:
                    lines.append(f"\\fill ({pos},{level + 0.5}) circle (2pt);")
                else:
                    lines.append(
                        f"\\fill[red] ({pos},{level + 0.5}) circle (2pt) node[right] {{$E_{{{d}}}$}};"
                    )
        for i, v in enumerate(bottom, start=1):
            if v != BLACK:
                lines.append(f"\\node[red, below] at ({i},0) {{${A.label(v)}$}};")
        m = _merge_at(A, bottom, layers, merge)
        if m is not None:
            pos, label, at_top = m
            yv = len(segs) + 0.5 if at_top else -0.5
            yb = len(segs) if at_top else 0
            lines.append(f"\\draw[red, double] ({pos},{yb}) -- ({pos + 0.5},{yv}) -- ({pos + 1},{yb});")
            lines.append(f"\\node[red, right] at ({pos + 0.5},{yv}) {{${label}$}};")
        lines.append("\\end{tikzpicture}")
        out.append("\n".join(lines))
    return "\n\n".join(out) + "\n"
