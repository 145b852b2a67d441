"""Self-contained SVG 1.1 figures from numeric arrays.

Deliberately minimal: polylines, rects and circles on a fixed canvas, no
plotting library. Output is deterministic byte-for-byte for identical inputs
apart from the embedded package version comment.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from ._version import __version__

WIDTH = 900
HEIGHT = 480
MARGIN = 56

_STYLE = (
    "text{font-family:monospace;font-size:12px;fill:#222}"
    ".title{font-size:14px}"
    ".axis{stroke:#222;stroke-width:1;fill:none}"
    ".grid{stroke:#ccc;stroke-width:0.5}"
)
_COLORS = ("#1a1a1a", "#888888", "#3366aa")


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick(v: float) -> str:
    return f"{v:.6g}"


class _Frame:
    """Maps data coordinates to pixel coordinates inside the margins."""

    def __init__(self, xmin, xmax, ymin, ymax, width=WIDTH, height=HEIGHT):
        if xmax == xmin:
            xmax = xmin + 1.0
        if ymax == ymin:
            ymax = ymin + 1.0
        self.xmin, self.xmax = float(xmin), float(xmax)
        self.ymin, self.ymax = float(ymin), float(ymax)
        self.width, self.height = width, height

    def px(self, x: float) -> float:
        span = self.width - 2 * MARGIN
        return MARGIN + (x - self.xmin) / (self.xmax - self.xmin) * span

    def py(self, y: float) -> float:
        span = self.height - 2 * MARGIN
        return self.height - MARGIN - (y - self.ymin) / (self.ymax - self.ymin) * span


def _document(frame: _Frame, body: list[str], title: str, xlabel: str, ylabel: str) -> str:
    w, h = frame.width, frame.height
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f"<!-- prime-spectrum {__version__} -->",
        f"<style>{_STYLE}</style>",
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>',
        # axis box and corner tick labels
        f'<rect class="axis" x="{MARGIN}" y="{MARGIN}" '
        f'width="{w - 2 * MARGIN}" height="{h - 2 * MARGIN}"/>',
        f'<text class="title" x="{MARGIN}" y="{MARGIN - 16}">{escape(title)}</text>',
        f'<text x="{MARGIN}" y="{h - MARGIN + 16}">{_tick(frame.xmin)}</text>',
        f'<text x="{w - MARGIN}" y="{h - MARGIN + 16}" text-anchor="end">{_tick(frame.xmax)}</text>',
        f'<text x="{MARGIN - 6}" y="{h - MARGIN}" text-anchor="end">{_tick(frame.ymin)}</text>',
        f'<text x="{MARGIN - 6}" y="{MARGIN + 4}" text-anchor="end">{_tick(frame.ymax)}</text>',
        f'<text x="{w // 2}" y="{h - 12}" text-anchor="middle">{escape(xlabel)}</text>',
        f'<text x="14" y="{h // 2}" text-anchor="middle" '
        f'transform="rotate(-90 14 {h // 2})">{escape(ylabel)}</text>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _polyline(frame: _Frame, x: np.ndarray, y: np.ndarray, color: str) -> str:
    pts = " ".join(f"{_fmt(frame.px(a))},{_fmt(frame.py(b))}" for a, b in zip(x, y))
    return f'<polyline fill="none" stroke="{color}" stroke-width="1" points="{pts}"/>'


def line_figure(
    traces: list[tuple[np.ndarray, np.ndarray]],
    title: str,
    xlabel: str,
    ylabel: str,
) -> str:
    """One or more polyline traces on shared axes (first trace black)."""
    xs = np.concatenate([np.asarray(t[0], dtype=float) for t in traces])
    ys = np.concatenate([np.asarray(t[1], dtype=float) for t in traces])
    frame = _Frame(xs.min(), xs.max(), min(ys.min(), 0.0), ys.max())
    body = [
        _polyline(frame, np.asarray(x, float), np.asarray(y, float), _COLORS[i % len(_COLORS)])
        for i, (x, y) in enumerate(traces)
    ]
    return _document(frame, body, title, xlabel, ylabel)


def spike_figure(ns: np.ndarray, values: np.ndarray, title: str, ylabel: str = "value") -> str:
    """Vertical spike per nonzero sample; the spike-train view of a series."""
    ns = np.asarray(ns, dtype=float)
    values = np.asarray(values, dtype=float)
    frame = _Frame(ns.min(), ns.max(), min(values.min(), 0.0), max(values.max(), 1.0))
    y0 = frame.py(0.0)
    body = []
    for n, v in zip(ns, values):
        if v != 0.0:
            x = _fmt(frame.px(n))
            body.append(
                f'<line stroke="{_COLORS[0]}" stroke-width="1" '
                f'x1="{x}" y1="{_fmt(y0)}" x2="{x}" y2="{_fmt(frame.py(v))}"/>'
            )
    return _document(frame, body, title, "n", ylabel)


def histogram_figure(starts: np.ndarray, counts: np.ndarray, width: int, title: str) -> str:
    """One bar per bucket."""
    starts = np.asarray(starts, dtype=float)
    counts = np.asarray(counts, dtype=float)
    frame = _Frame(starts.min(), starts.max() + width, 0.0, counts.max())
    y0 = frame.py(0.0)
    body = []
    for s, c in zip(starts, counts):
        x = frame.px(s)
        bw = frame.px(s + width) - x
        y = frame.py(c)
        body.append(
            f'<rect fill="{_COLORS[2]}" stroke="none" x="{_fmt(x)}" y="{_fmt(y)}" '
            f'width="{_fmt(bw)}" height="{_fmt(max(y0 - y, 0.0))}"/>'
        )
    return _document(frame, body, title, "interval start", "new primes")


def spiral_figure(x: np.ndarray, y: np.ndarray, title: str) -> str:
    """Spiral trace with equal axis scaling and a dot per point."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    r = max(float(np.abs(x).max()), float(np.abs(y).max()), 1.0)
    side = min(WIDTH, HEIGHT)
    frame = _Frame(-r, r, -r, r, width=side, height=side)
    body = [_polyline(frame, x, y, _COLORS[1])]
    body += [
        f'<circle fill="{_COLORS[0]}" cx="{_fmt(frame.px(a))}" cy="{_fmt(frame.py(b))}" r="2"/>'
        for a, b in zip(x, y)
    ]
    return _document(frame, body, title, "x", "y")


def reconstruction_figure(
    ns: np.ndarray,
    values: np.ndarray,
    detected: np.ndarray,
    title: str,
    plot_range: tuple[int, int] | None = None,
) -> str:
    """Reconstructed series with a circle on top of each detected prime spike."""
    ns = np.asarray(ns, dtype=np.int64)
    values = np.asarray(values, dtype=float)
    detected = np.asarray(detected, dtype=np.int64)
    if plot_range is not None:
        lo, hi = plot_range
        keep = (ns >= lo) & (ns <= hi)
        ns, values = ns[keep], values[keep]
        detected = detected[(detected >= lo) & (detected <= hi)]
    frame = _Frame(ns.min(), ns.max(), min(values.min(), 0.0), max(values.max(), 1.0))
    body = [_polyline(frame, ns.astype(float), values, _COLORS[0])]
    marks = dict(zip(ns.tolist(), values.tolist()))
    body += [
        f'<circle fill="none" stroke="{_COLORS[2]}" stroke-width="1.5" '
        f'cx="{_fmt(frame.px(p))}" cy="{_fmt(frame.py(marks[int(p)]))}" r="5"/>'
        for p in detected.tolist()
    ]
    return _document(frame, body, title, "n", "value")
