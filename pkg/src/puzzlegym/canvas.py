"""RGBA pixel canvases: exact D4 permutations, comparison, PNG I/O."""

from __future__ import annotations

import io

import numpy as np
from PIL import Image

from .geometry import D4Element


class ShapeMismatch(ValueError):
    pass


class Canvas:
    """Row-major RGBA byte canvas (sRGB, 8 bit/channel).

    The pixel array uses image convention: index [y, x], y increasing
    downward. Treated as immutable once handed to a consumer.
    """

    __slots__ = ("pixels",)

    def __init__(self, pixels: np.ndarray):
        if pixels.ndim != 3 or pixels.shape[2] != 4 or pixels.dtype != np.uint8:
            raise ValueError("canvas requires a (H, W, 4) uint8 array")
        self.pixels = pixels

    @classmethod
    def blank(cls, width: int, height: int, color=(255, 255, 255, 255)) -> "Canvas":
        arr = np.empty((height, width, 4), dtype=np.uint8)
        arr[:, :] = np.asarray(color, dtype=np.uint8)
        return cls(arr)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def copy(self) -> "Canvas":
        return Canvas(self.pixels.copy())

    def crop(self, x0: int, y0: int, x1: int, y1: int) -> "Canvas":
        return Canvas(np.ascontiguousarray(self.pixels[y0:y1, x0:x1]))

    def to_png_bytes(self) -> bytes:
        img = Image.fromarray(self.pixels, mode="RGBA")
        buf = io.BytesIO()
        img.save(buf, format="PNG", optimize=False)
        return buf.getvalue()

    def save_png(self, path) -> None:
        with open(path, "wb") as fh:
            fh.write(self.to_png_bytes())

    @classmethod
    def from_png_bytes(cls, data: bytes) -> "Canvas":
        img = Image.open(io.BytesIO(data)).convert("RGBA")
        return cls(np.asarray(img, dtype=np.uint8).copy())

    @classmethod
    def load_png(cls, path) -> "Canvas":
        with open(path, "rb") as fh:
            return cls.from_png_bytes(fh.read())


def apply_d4(e: D4Element, c: Canvas) -> Canvas:
    """Exact pixel permutation. Square canvas required except for
    identity/rot180/axis mirrors."""
    a = c.pixels
    square_only = e in (
        D4Element.ROT90,
        D4Element.ROT270,
        D4Element.MIRROR_MAIN_DIAG,
        D4Element.MIRROR_ANTI_DIAG,
    )
    if square_only and c.width != c.height:
        raise ShapeMismatch(f"{e.value} requires a square canvas, got {c.width}x{c.height}")
    if e is D4Element.IDENTITY:
        out = a
    elif e is D4Element.ROT90:
        out = np.rot90(a, 1)
    elif e is D4Element.ROT180:
        out = np.rot90(a, 2)
    elif e is D4Element.ROT270:
        out = np.rot90(a, 3)
    elif e is D4Element.MIRROR_V:
        out = a[:, ::-1]
    elif e is D4Element.MIRROR_H:
        out = a[::-1, :]
    elif e is D4Element.MIRROR_MAIN_DIAG:
        out = np.transpose(a, (1, 0, 2))
    elif e is D4Element.MIRROR_ANTI_DIAG:
        out = np.transpose(a, (1, 0, 2))[::-1, ::-1]
    else:  # pragma: no cover
        raise ValueError(e)
    return Canvas(np.ascontiguousarray(out))


def bitmap_distance(a: Canvas, b: Canvas) -> float:
    """Mean per-channel normalized absolute difference, in [0, 1]."""
    if a.pixels.shape != b.pixels.shape:
        raise ShapeMismatch(f"dimension mismatch {a.pixels.shape} vs {b.pixels.shape}")
    diff = np.abs(a.pixels.astype(np.int16) - b.pixels.astype(np.int16))
    return float(diff.mean()) / 255.0


def blit(dst: Canvas, src: Canvas, x: int, y: int) -> None:
    """Alpha-composite src over dst at integer offset (x, y), clipped."""
    h, w = src.pixels.shape[:2]
    x0, y0 = max(x, 0), max(y, 0)
    x1, y1 = min(x + w, dst.width), min(y + h, dst.height)
    if x0 >= x1 or y0 >= y1:
        return
    sub = src.pixels[y0 - y : y1 - y, x0 - x : x1 - x].astype(np.float32)
    region = dst.pixels[y0:y1, x0:x1].astype(np.float32)
    alpha = sub[:, :, 3:4] / 255.0
    out_rgb = sub[:, :, :3] * alpha + region[:, :, :3] * (1 - alpha)
    out_a = sub[:, :, 3:4] + region[:, :, 3:4] * (1 - alpha)
    merged = np.concatenate([out_rgb, out_a], axis=2)
    dst.pixels[y0:y1, x0:x1] = np.clip(merged + 0.5, 0, 255).astype(np.uint8)
