"""Deterministic SVG rendering of phase portraits.

Hand-rolled writer: fixed element order, fixed numeric formatting, no
timestamps or generated ids, so identical inputs produce byte-identical
files.  Coordinates: alpha horizontal, k vertical (k increases upward),
mapped linearly from the requested ranges onto a square canvas.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

__all__ = ["render_portrait_svg"]

_SIZE = 800
_MARGIN = 40

_CLASS_COLORS = {
    "Periodic": "#1f77b4",
    "ArcToAlphaAxis": "#2ca02c",
    "ArcBiInfinite": "#9467bd",
    "ConstantKLine": "#ff7f0e",
    "HomoclinicToOrigin": "#17becf",
    "Stationary": "#000000",
    "Truncated": "#7f7f7f",
}


def _fmt(x: float) -> str:
    return f"{x:.3f}"


class _Mapper:
    def __init__(self, alpha_range, k_range):
        self.a0, self.a1 = alpha_range
        self.k0, self.k1 = k_range
        self.w = _SIZE - 2 * _MARGIN

    def pt(self, alpha: float, k: float) -> Tuple[float, float]:
        x = _MARGIN + (alpha - self.a0) / (self.a1 - self.a0) * self.w
        y = _MARGIN + (self.k1 - k) / (self.k1 - self.k0) * self.w
        return x, y

    def inside(self, alpha: float, k: float) -> bool:
        return self.a0 <= alpha <= self.a1 and self.k0 <= k <= self.k1


def _polyline(mapper: _Mapper, pts: Sequence[Tuple[float, float]],
              color: str, width: float, dash: str = "") -> str:
    if len(pts) < 2:
        return ""
    coords = " ".join(
        f"{_fmt(x)},{_fmt(y)}" for x, y in (mapper.pt(a, k) for a, k in pts))
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'<polyline fill="none" stroke="{color}" stroke-width="{width}"'
            f'{dash_attr} points="{coords}"/>\n')


def _clip_runs(mapper: _Mapper, pts: Sequence[Tuple[float, float]]):
    """Split a polyline into maximal runs inside the view box."""
    run: List[Tuple[float, float]] = []
    for p in pts:
        if mapper.inside(*p):
            run.append(p)
        elif run:
            yield run
            run = []
    if run:
        yield run


def _thin(pts: Sequence[Tuple[float, float]], cap: int = 400):
    if len(pts) <= cap:
        return list(pts)
    step = (len(pts) + cap - 1) // cap
    out = list(pts[::step])
    if out[-1] != pts[-1]:
        out.append(pts[-1])
    return out


def render_portrait_svg(alpha_range, k_range, title: str,
                        orbits, nullclines, critical_lines,
                        stationary_points) -> str:
    """Assemble the portrait SVG.

    orbits: list of (class_kind, [(alpha, k), ...]); nullclines: list of
    [(alpha, k), ...]; critical_lines: list of k values; stationary_points:
    list of (alpha, k).
    """
    m = _Mapper(alpha_range, k_range)
    parts: List[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" '
        f'height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">\n')
    parts.append(f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>\n')

    # coordinate axes where visible
    if k_range[0] < 0.0 < k_range[1]:
        x0, y = m.pt(alpha_range[0], 0.0)
        x1, _ = m.pt(alpha_range[1], 0.0)
        parts.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(y)}" x2="{_fmt(x1)}" '
                     f'y2="{_fmt(y)}" stroke="#cccccc" stroke-width="1"/>\n')
    if alpha_range[0] < 0.0 < alpha_range[1]:
        x, y0 = m.pt(0.0, k_range[0])
        _, y1 = m.pt(0.0, k_range[1])
        parts.append(f'<line x1="{_fmt(x)}" y1="{_fmt(y0)}" x2="{_fmt(x)}" '
                     f'y2="{_fmt(y1)}" stroke="#cccccc" stroke-width="1"/>\n')

    for k_line in critical_lines:
        if k_range[0] <= k_line <= k_range[1]:
            x0, y = m.pt(alpha_range[0], k_line)
            x1, _ = m.pt(alpha_range[1], k_line)
            parts.append(
                f'<line x1="{_fmt(x0)}" y1="{_fmt(y)}" x2="{_fmt(x1)}" '
                f'y2="{_fmt(y)}" stroke="#ff7f0e" stroke-width="1.5" '
                f'stroke-dasharray="8 4"/>\n')

    for pts in nullclines:
        for run in _clip_runs(m, _thin(pts)):
            parts.append(_polyline(m, run, "#d62728", 1.2, dash="3 3"))

    for kind, pts in orbits:
        color = _CLASS_COLORS.get(kind, "#7f7f7f")
        for run in _clip_runs(m, _thin(pts)):
            parts.append(_polyline(m, run, color, 1.0))

    for alpha, k in stationary_points:
        if m.inside(alpha, k):
            x, y = m.pt(alpha, k)
            parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" '
                         f'fill="black"/>\n')

    parts.append(f'<text x="{_MARGIN}" y="{_MARGIN - 12}" '
                 f'font-family="monospace" font-size="14">{title}</text>\n')
    parts.append("</svg>\n")
    return "".join(parts)
