"""Minimal SVG line plots: fixed 800x600 viewport, axes in bits, one label per curve."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

WIDTH, HEIGHT = 800, 600
MARGIN = dict(left=70, right=170, top=40, bottom=60)
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")


def _nice_ticks(lo, hi, n=5):
    span = hi - lo
    if span <= 0:
        return [lo]
    raw = span / n
    mag = 10 ** np.floor(np.log10(raw))
    step = min((m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw), default=raw)
    start = np.ceil(lo / step) * step
    return [float(t) for t in np.arange(start, hi + step * 1e-9, step)]


def envelope_polyline(env):
    """Closed boundary of a downward-closed envelope: (0, top) .. staircase .. (r1_max, 0)."""
    x = np.asarray(env.r1_grid, float)
    y = np.asarray(env.r2_max, float)
    xs = np.concatenate([[0.0], x, [x[-1]]])
    ys = np.concatenate([[y[0]], y, [0.0]])
    return xs, ys


def svg_plot(curves, title="", xlabel="R1 (bits)", ylabel="R2 (bits)", markers=()):
    """SVG document for a set of curves.

    Parameters
    ----------
    curves : list of (label, xs, ys)
    markers : list of (label, x, y)
        Points drawn as circles with a text label.
    """
    xs_all = [np.asarray(c[1], float) for c in curves] + [np.array([m[1]]) for m in markers]
    ys_all = [np.asarray(c[2], float) for c in curves] + [np.array([m[2]]) for m in markers]
    xmax = max([float(np.max(x)) for x in xs_all if x.size] + [1e-9]) * 1.05
    ymax = max([float(np.max(y)) for y in ys_all if y.size] + [1e-9]) * 1.05
    pw = WIDTH - MARGIN["left"] - MARGIN["right"]
    ph = HEIGHT - MARGIN["top"] - MARGIN["bottom"]

    def px(x):
        return MARGIN["left"] + pw * x / xmax

    def py(y):
        return MARGIN["top"] + ph * (1.0 - y / ymax)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="24" text-anchor="middle" font-size="16">{escape(title)}</text>',
    ]
    x0, y0 = px(0), py(0)
    out.append(f'<line x1="{x0:.1f}" y1="{y0:.1f}" x2="{px(xmax):.1f}" y2="{y0:.1f}" stroke="black"/>')
    out.append(f'<line x1="{x0:.1f}" y1="{y0:.1f}" x2="{x0:.1f}" y2="{py(ymax):.1f}" stroke="black"/>')
    for t in _nice_ticks(0.0, xmax / 1.05):
        out.append(f'<line x1="{px(t):.1f}" y1="{y0:.1f}" x2="{px(t):.1f}" y2="{y0 + 5:.1f}" stroke="black"/>')
        out.append(f'<text x="{px(t):.1f}" y="{y0 + 20:.1f}" text-anchor="middle" font-size="12">{t:g}</text>')
    for t in _nice_ticks(0.0, ymax / 1.05):
        out.append(f'<line x1="{x0 - 5:.1f}" y1="{py(t):.1f}" x2="{x0:.1f}" y2="{py(t):.1f}" stroke="black"/>')
        out.append(f'<text x="{x0 - 8:.1f}" y="{py(t) + 4:.1f}" text-anchor="end" font-size="12">{t:g}</text>')
    out.append(f'<text x="{MARGIN["left"] + pw / 2:.1f}" y="{HEIGHT - 15}" text-anchor="middle" font-size="14">{escape(xlabel)}</text>')
    out.append(f'<text x="18" y="{MARGIN["top"] + ph / 2:.1f}" text-anchor="middle" font-size="14" '
               f'transform="rotate(-90 18 {MARGIN["top"] + ph / 2:.1f})">{escape(ylabel)}</text>')
    for k, (label, xs, ys) in enumerate(curves):
        color = COLORS[k % len(COLORS)]
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
        ly = MARGIN["top"] + 20 * (k + 1)
        lx = WIDTH - MARGIN["right"] + 15
        out.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 20}" y2="{ly - 4}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 26}" y="{ly}" font-size="13">{escape(label)}</text>')
    for label, x, y in markers:
        out.append(f'<circle cx="{px(x):.2f}" cy="{py(y):.2f}" r="4" fill="black"/>')
        out.append(f'<text x="{px(x) + 7:.2f}" y="{py(y) - 7:.2f}" font-size="12">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def envelopes_svg(named_envs, title="", markers=()):
    """Overlay of several envelopes, each a labelled polyline."""
    curves = [(label, *envelope_polyline(env)) for label, env in named_envs]
    return svg_plot(curves, title=title, markers=markers)
