"""Deterministic polygon rasterization with fixed 4x supersampled coverage.

Everything drawn anywhere in the engine bottoms out in `fill_parts`: an
even-odd coverage fill evaluated on a fixed 2x2 subsample grid per pixel.
No platform rasterizer or font library is involved, so output bytes are
identical across machines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .canvas import Canvas
from .geometry import Polygon

SUPERSAMPLE = 2  # per axis; 4 coverage samples per pixel


def _coverage(parts, width: int, height: int, mode: str = "union") -> tuple:
    """Coverage of polygon parts, combined by union or xor (for holes).

    Returns (x0, y0, cov) where cov is a float32 array for the clipped
    bounding box, or None when fully outside the canvas.
    """
    minx = miny = math.inf
    maxx = maxy = -math.inf
    for poly in parts:
        bx0, by0, bx1, by1 = poly.bounds()
        minx, miny = min(minx, bx0), min(miny, by0)
        maxx, maxy = max(maxx, bx1), max(maxy, by1)
    x0 = max(int(math.floor(minx)), 0)
    y0 = max(int(math.floor(miny)), 0)
    x1 = min(int(math.ceil(maxx)) + 1, width)
    y1 = min(int(math.ceil(maxy)) + 1, height)
    if x0 >= x1 or y0 >= y1:
        return None
    w, h = x1 - x0, y1 - y0
    ss = SUPERSAMPLE
    px = x0 + (np.arange(w * ss, dtype=np.float64) + 0.5) / ss
    py = y0 + (np.arange(h * ss, dtype=np.float64) + 0.5) / ss
    union = np.zeros((h * ss, w * ss), dtype=bool)
    for poly in parts:
        pts = poly.vertices
        inside = np.zeros((h * ss, w * ss), dtype=bool)
        n = len(pts)
        for i in range(n):
            ex1, ey1 = pts[i]
            ex2, ey2 = pts[(i + 1) % n]
            if ey1 == ey2:
                continue
            row = (py > min(ey1, ey2)) & (py <= max(ey1, ey2))
            if not row.any():
                continue
            t = (py[row] - ey1) / (ey2 - ey1)
            xint = ex1 + t * (ex2 - ex1)
            cross = px[None, :] < xint[:, None]
            inside[row] ^= cross
        if mode == "xor":
            union ^= inside
        else:
            union |= inside
    cov = union.reshape(h, ss, w, ss).mean(axis=(1, 3)).astype(np.float32)
    return (x0, y0, cov)


def fill_parts(canvas: Canvas, parts, rgba, mode: str = "union") -> None:
    """Composite the combination of polygon `parts` in a single color over
    the canvas ("over" operator, coverage-weighted alpha)."""
    if not parts:
        return
    res = _coverage(parts, canvas.width, canvas.height, mode)
    if res is None:
        return
    x0, y0, cov = res
    if not cov.any():
        return
    h, w = cov.shape
    region = canvas.pixels[y0 : y0 + h, x0 : x0 + w].astype(np.float32)
    r, g, b, a = rgba
    alpha = cov[:, :, None] * (a / 255.0)
    src = np.array([r, g, b], dtype=np.float32)
    out_rgb = src * alpha + region[:, :, :3] * (1 - alpha)
    out_a = 255.0 * alpha + region[:, :, 3:4] * (1 - alpha)
    merged = np.concatenate([out_rgb, out_a], axis=2)
    canvas.pixels[y0 : y0 + h, x0 : x0 + w] = np.clip(merged + 0.5, 0, 255).astype(np.uint8)


def fill_polygon(canvas: Canvas, poly: Polygon, rgba) -> None:
    fill_parts(canvas, [poly], rgba)


def stroke_to_parts(points, width: float, closed: bool = False):
    """Expand a polyline into quad + join polygons approximating a stroked
    path with round-ish joins."""
    if width <= 0 or len(points) < 2:
        return []
    half = width / 2.0
    parts = []
    pts = list(points)
    segs = list(zip(pts, pts[1:]))
    if closed:
        segs.append((pts[-1], pts[0]))
    for (x1, y1), (x2, y2) in segs:
        dx, dy = x2 - x1, y2 - y1
        length = math.hypot(dx, dy)
        if length < 1e-9:
            continue
        nx, ny = -dy / length * half, dx / length * half
        parts.append(
            Polygon(
                [(x1 + nx, y1 + ny), (x2 + nx, y2 + ny), (x2 - nx, y2 - ny), (x1 - nx, y1 - ny)]
            )
        )
    join_pts = pts if closed else pts
    for x, y in join_pts:
        parts.append(
            Polygon(
                [
                    (x + half * math.cos(k * math.pi / 4), y + half * math.sin(k * math.pi / 4))
                    for k in range(8)
                ]
            )
        )
    return parts


def stroke_path(canvas: Canvas, points, rgba, width: float, closed: bool = False) -> None:
    fill_parts(canvas, stroke_to_parts(points, width, closed), rgba)


@dataclass
class ScenePoly:
    """One colored element of a vector scene: a union of polygon parts
    composited in one pass."""

    parts: list
    color: tuple
    mode: str = "union"  # or "xor" (even-odd across parts, for holes)

    def transformed(self, fn) -> "ScenePoly":
        return ScenePoly(
            parts=[Polygon([fn(p) for p in poly.vertices]) for poly in self.parts],
            color=self.color,
            mode=self.mode,
        )


@dataclass
class Scene:
    """Ordered colored polygon groups over a background color."""

    items: list = field(default_factory=list)
    background: tuple = (255, 255, 255, 255)

    def add(self, parts, color, mode: str = "union") -> None:
        if isinstance(parts, Polygon):
            parts = [parts]
        self.items.append(ScenePoly(list(parts), tuple(color), mode))

    def add_stroke(self, points, color, width: float, closed: bool = False) -> None:
        parts = stroke_to_parts(points, width, closed)
        if parts:
            self.items.append(ScenePoly(parts, tuple(color)))

    def transformed(self, fn) -> "Scene":
        return Scene(items=[it.transformed(fn) for it in self.items], background=self.background)

    def translated(self, dx: float, dy: float) -> "Scene":
        return self.transformed(lambda p: (p[0] + dx, p[1] + dy))

    def scaled(self, s: float) -> "Scene":
        return self.transformed(lambda p: (p[0] * s, p[1] * s))

    def extend(self, other: "Scene") -> None:
        self.items.extend(other.items)

    def render(self, width: int, height: int) -> Canvas:
        canvas = Canvas.blank(width, height, self.background)
        for item in self.items:
            fill_parts(canvas, item.parts, item.color, item.mode)
        return canvas

    def render_onto(self, canvas: Canvas) -> None:
        for item in self.items:
            fill_parts(canvas, item.parts, item.color, item.mode)
