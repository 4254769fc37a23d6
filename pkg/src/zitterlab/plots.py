"""Minimal self-contained SVG output: line plots and grayscale heatmaps.

No plotting library is involved, so the bytes depend only on the data.
"""
from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .errors import EmptyData

WIDTH, HEIGHT = 640, 420
MARGIN = dict(left=80, right=20, top=30, bottom=55)


def _num(v):
    return format(float(v), ".6g")


def _ticks(lo, hi, n=5):
    return np.linspace(lo, hi, n)


def _frame(title, xlabel, ylabel, xr, yr, to_px):
    left, top = MARGIN["left"], MARGIN["top"]
    w = WIDTH - MARGIN["left"] - MARGIN["right"]
    h = HEIGHT - MARGIN["top"] - MARGIN["bottom"]
    out = [
        f'<rect x="{left}" y="{top}" width="{w}" height="{h}" fill="none" stroke="black"/>',
        f'<text x="{WIDTH / 2}" y="18" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<text x="{left + w / 2}" y="{HEIGHT - 12}" text-anchor="middle" font-size="12">'
        f"{escape(xlabel)}</text>",
        f'<text x="16" y="{top + h / 2}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 16 {top + h / 2})">{escape(ylabel)}</text>',
    ]
    for xv in _ticks(*xr):
        px, _ = to_px(xv, yr[0])
        out.append(f'<line x1="{px:.2f}" y1="{top + h}" x2="{px:.2f}" y2="{top + h + 5}" stroke="black"/>')
        out.append(f'<text x="{px:.2f}" y="{top + h + 18}" text-anchor="middle" font-size="10">'
                   f"{_num(xv)}</text>")
    for yv in _ticks(*yr):
        _, py = to_px(xr[0], yv)
        out.append(f'<line x1="{left - 5}" y1="{py:.2f}" x2="{left}" y2="{py:.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{py + 3:.2f}" text-anchor="end" font-size="10">'
                   f"{_num(yv)}</text>")
    return out


def _wrap(body):
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}">')
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>", ""])


def _range(a):
    lo, hi = float(np.min(a)), float(np.max(a))
    if hi == lo:
        pad = abs(lo) * 0.05 or 1.0
        lo, hi = lo - pad, hi + pad
    return lo, hi


def line_svg(x, ys, title="", xlabel="t (a.u.)", ylabel="", labels=None) -> str:
    """One or more curves sharing the abscissa ``x``."""
    x = np.asarray(x, dtype=float)
    several = isinstance(ys, (list, tuple)) and len(ys) > 0 and np.ndim(ys[0]) > 0
    ys = [np.asarray(y, dtype=float) for y in (ys if several else [ys])]
    if x.size == 0 or any(y.size == 0 for y in ys):
        raise EmptyData("nothing to plot")
    if any(y.shape != x.shape for y in ys):
        raise ValueError("every curve needs one value per abscissa point")
    xr, yr = _range(x), _range(np.concatenate(ys))
    left, top = MARGIN["left"], MARGIN["top"]
    w = WIDTH - MARGIN["left"] - MARGIN["right"]
    h = HEIGHT - MARGIN["top"] - MARGIN["bottom"]

    def to_px(xv, yv):
        return (left + (xv - xr[0]) / (xr[1] - xr[0]) * w,
                top + h - (yv - yr[0]) / (yr[1] - yr[0]) * h)

    body = _frame(title, xlabel, ylabel, xr, yr, to_px)
    shades = ["black", "#777777", "#bbbbbb"]
    for i, y in enumerate(ys):
        pts = " ".join(f"{px:.2f},{py:.2f}" for px, py in (to_px(a, b) for a, b in zip(x, y)))
        body.append(f'<polyline fill="none" stroke="{shades[i % 3]}" stroke-width="1.2" points="{pts}"/>')
        if labels:
            body.append(f'<text x="{left + w - 5}" y="{top + 14 + 14 * i}" text-anchor="end" '
                        f'font-size="11" fill="{shades[i % 3]}">{escape(labels[i])}</text>')
    return _wrap(body)


def heatmap_svg(z, x, y, title="", xlabel="x (a.u.)", ylabel="y (a.u.)") -> str:
    """Grayscale image of ``z[i, j]`` at (x_i, y_j); darker means larger."""
    z = np.asarray(z, dtype=float)
    if z.size == 0:
        raise EmptyData("nothing to plot")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    nx, ny = z.shape
    xr = (float(x[0]), float(x[-1]))
    yr = (float(y[0]), float(y[-1]))
    left, top = MARGIN["left"], MARGIN["top"]
    w = WIDTH - MARGIN["left"] - MARGIN["right"]
    h = HEIGHT - MARGIN["top"] - MARGIN["bottom"]
    cw, ch = w / nx, h / ny
    zmax = float(z.max())
    scale = z / zmax if zmax > 0 else np.zeros_like(z)
    body = []
    for i in range(nx):
        for j in range(ny):
            g = int(round(255 * (1 - scale[i, j])))
            if g == 255:
                continue
            body.append(f'<rect x="{left + i * cw:.2f}" y="{top + h - (j + 1) * ch:.2f}" '
                        f'width="{cw + 0.05:.2f}" height="{ch + 0.05:.2f}" fill="rgb({g},{g},{g})"/>')

    def to_px(xv, yv):
        return (left + (xv - xr[0]) / ((xr[1] - xr[0]) or 1) * w,
                top + h - (yv - yr[0]) / ((yr[1] - yr[0]) or 1) * h)

    body += _frame(title, xlabel, ylabel, xr, yr, to_px)
    return _wrap(body)


def save(path, svg: str):
    path = Path(path)
    path.write_text(svg)
    return path
