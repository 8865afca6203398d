"""Schematic SVG for construction traces over the rationals.

Coordinates stay exact until the final formatting step, which rounds a
Fraction to three decimals with integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .plane import Point, Vertical

SIZE = 480
MARGIN = 40


def _fmt(q: Fraction) -> str:
    scaled = q * 1000
    n = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)  # round half up
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 1000}.{n % 1000:03d}"


def render_trace(trace) -> str:
    if trace.spec.kind != "Q":
        raise ValueError("SVG output needs a rational backend")
    objs = trace.steps
    pts = [(s.label, s.obj) for s in objs if isinstance(s.obj, Point)]
    xs = [P.x.value for _, P in pts]
    ys = [P.y.value for _, P in pts]
    lo_x, hi_x = min(xs) - 1, max(xs) + 1
    lo_y, hi_y = min(ys) - 1, max(ys) + 1
    span = max(hi_x - lo_x, hi_y - lo_y)
    scale = Fraction(SIZE - 2 * MARGIN) / span

    def sx(x):
        return _fmt(MARGIN + (x - lo_x) * scale)

    def sy(y):
        return _fmt(SIZE - MARGIN - (y - lo_y) * scale)

    body = []
    for s in objs:
        if isinstance(s.obj, Point):
            continue
        l = s.obj
        if isinstance(l, Vertical):
            c = l.c.value
            ends = [(c, lo_y), (c, hi_y)]
        else:
            m, b = l.m.value, l.b.value
            ends = [(lo_x, lo_x * m + b), (hi_x, hi_x * m + b)]
        (x1, y1), (x2, y2) = ends
        body.append(
            f'<line x1="{sx(x1)}" y1="{sy(y1)}" x2="{sx(x2)}" y2="{sy(y2)}" '
            f'stroke="#888" stroke-width="1"><title>{_esc(s.label)} (step {s.step})</title></line>'
        )
    for label, P in pts:
        x, y = sx(P.x.value), sy(P.y.value)
        body.append(f'<circle cx="{x}" cy="{y}" r="3" fill="#000"/>')
        body.append(f'<text x="{x}" y="{y}" dx="4" dy="-4" font-size="11">{_esc(label)}</text>')
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">'
    )
    title = f"<title>{_esc(trace.op)} {' '.join(map(str, trace.operands))} = {trace.result}</title>"
    return "\n".join([head, title, '<rect width="100%" height="100%" fill="#fff"/>', *body, "</svg>"]) + "\n"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
