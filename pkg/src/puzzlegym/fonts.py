"""Embedded stroke font for canvas labels.

A small blocky vector font (uppercase letters, digits, punctuation) defined
as polylines on a 4x6 grid, y increasing downward. Rendering strokes these
polylines with the engine rasterizer, so text output is machine-independent.
"""

from __future__ import annotations

from .raster import Scene

GLYPH_W = 4.0
GLYPH_H = 6.0

STROKES = {
    "A": [[(0, 6), (2, 0), (4, 6)], [(1, 3.8), (3, 3.8)]],
    "B": [[(0, 0), (0, 6)], [(0, 0), (3, 0), (3, 3), (0, 3)], [(0, 3), (3.6, 3), (3.6, 6), (0, 6)]],
    "C": [[(4, 0.5), (2.5, 0), (0.8, 0.8), (0, 3), (0.8, 5.2), (2.5, 6), (4, 5.5)]],
    "D": [[(0, 0), (0, 6)], [(0, 0), (2.5, 0), (4, 1.5), (4, 4.5), (2.5, 6), (0, 6)]],
    "E": [[(4, 0), (0, 0), (0, 6), (4, 6)], [(0, 3), (3, 3)]],
    "F": [[(4, 0), (0, 0), (0, 6)], [(0, 3), (3, 3)]],
    "G": [[(4, 0.5), (2, 0), (0.5, 1), (0, 3), (0.5, 5), (2, 6), (4, 6), (4, 3.2), (2.4, 3.2)]],
    "H": [[(0, 0), (0, 6)], [(4, 0), (4, 6)], [(0, 3), (4, 3)]],
    "I": [[(1, 0), (3, 0)], [(2, 0), (2, 6)], [(1, 6), (3, 6)]],
    "J": [[(4, 0), (4, 5), (3, 6), (1, 6), (0, 5)]],
    "K": [[(0, 0), (0, 6)], [(4, 0), (0, 3), (4, 6)]],
    "L": [[(0, 0), (0, 6), (4, 6)]],
    "M": [[(0, 6), (0, 0), (2, 3), (4, 0), (4, 6)]],
    "N": [[(0, 6), (0, 0), (4, 6), (4, 0)]],
    "O": [[(0, 0), (4, 0), (4, 6), (0, 6), (0, 0)]],
    "P": [[(0, 6), (0, 0), (4, 0), (4, 3), (0, 3)]],
    "Q": [[(0, 0), (4, 0), (4, 6), (0, 6), (0, 0)], [(2.4, 4.4), (4.3, 6.3)]],
    "R": [[(0, 6), (0, 0), (4, 0), (4, 3), (0, 3)], [(1.5, 3), (4, 6)]],
    "S": [[(4, 0), (0, 0), (0, 3), (4, 3), (4, 6), (0, 6)]],
    "T": [[(0, 0), (4, 0)], [(2, 0), (2, 6)]],
    "U": [[(0, 0), (0, 6), (4, 6), (4, 0)]],
    "V": [[(0, 0), (2, 6), (4, 0)]],
    "W": [[(0, 0), (1, 6), (2, 3), (3, 6), (4, 0)]],
    "X": [[(0, 0), (4, 6)], [(4, 0), (0, 6)]],
    "Y": [[(0, 0), (2, 3), (4, 0)], [(2, 3), (2, 6)]],
    "Z": [[(0, 0), (4, 0), (0, 6), (4, 6)]],
    "0": [[(0, 0), (4, 0), (4, 6), (0, 6), (0, 0)], [(0.8, 5), (3.2, 1)]],
    "1": [[(1, 1), (2, 0), (2, 6)], [(1, 6), (3, 6)]],
    "2": [[(0, 0), (4, 0), (4, 3), (0, 3), (0, 6), (4, 6)]],
    "3": [[(0, 0), (4, 0), (4, 6), (0, 6)], [(1.2, 3), (4, 3)]],
    "4": [[(3, 6), (3, 0), (0, 4), (4, 4)]],
    "5": [[(4, 0), (0, 0), (0, 3), (4, 3), (4, 6), (0, 6)]],
    "6": [[(4, 0), (0, 0), (0, 6), (4, 6), (4, 3), (0, 3)]],
    "7": [[(0, 0), (4, 0), (1.5, 6)]],
    "8": [[(0, 0), (4, 0), (4, 6), (0, 6), (0, 0)], [(0, 3), (4, 3)]],
    "9": [[(4, 3), (0, 3), (0, 0), (4, 0), (4, 6), (0, 6)]],
    "-": [[(0.5, 3), (3.5, 3)]],
    "+": [[(2, 1), (2, 5)], [(0, 3), (4, 3)]],
    "=": [[(0, 2), (4, 2)], [(0, 4), (4, 4)]],
    "/": [[(0, 6), (4, 0)]],
    "?": [[(0, 1), (0, 0), (4, 0), (4, 3), (2, 3), (2, 4)], [(2, 5.4), (2, 6)]],
    "(": [[(3, 0), (1.5, 1.5), (1.5, 4.5), (3, 6)]],
    ")": [[(1, 0), (2.5, 1.5), (2.5, 4.5), (1, 6)]],
    ",": [[(2, 5.2), (1.4, 6.8)]],
    ".": [[(2, 5.5), (2, 6)]],
    ":": [[(2, 1.5), (2, 2)], [(2, 4.5), (2, 5)]],
    "%": [[(0, 6), (4, 0)], [(0.4, 0.4), (1.4, 0.4), (1.4, 1.4), (0.4, 1.4), (0.4, 0.4)],
          [(2.6, 4.6), (3.6, 4.6), (3.6, 5.6), (2.6, 5.6), (2.6, 4.6)]],
    " ": [],
}


def text_scene(text: str, x: float, y: float, size: float, color,
               align: str = "left") -> Scene:
    """Build a scene stroking `text` with glyph height `size`; (x, y) is the
    top-left (or top-center/top-right per `align`) of the text box."""
    scale = size / GLYPH_H
    advance = (GLYPH_W + 1.6) * scale
    total = advance * len(text)
    if align == "center":
        x -= total / 2
    elif align == "right":
        x -= total
    width = max(size / 7.0, 1.0)
    scene = Scene()
    cx = x
    for ch in text.upper():
        for polyline in STROKES.get(ch, STROKES["?"]):
            pts = [(cx + px * scale, y + py * scale) for px, py in polyline]
            if len(pts) >= 2:
                scene.add_stroke(pts, color, width)
        cx += advance
    return scene


def text_width(text: str, size: float) -> float:
    return (GLYPH_W + 1.6) * (size / GLYPH_H) * len(text)


def draw_text(canvas, text: str, x: float, y: float, size: float,
              color=(20, 20, 20, 255), align: str = "left") -> None:
    text_scene(text, x, y, size, color, align).render_onto(canvas)
