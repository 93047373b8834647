"""2D geometry primitives: points, polygons, similarity transforms, D4."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class InvalidGeometry(ValueError):
    pass


Point = tuple  # (x, y) in canvas units


@dataclass(frozen=True)
class SimilarityTransform:
    """Uniform scale, optional mirror (about the y axis, applied first),
    rotation, then translation."""

    scale: float = 1.0
    rotation: float = 0.0
    reflect: bool = False
    dx: float = 0.0
    dy: float = 0.0

    def __post_init__(self):
        if self.scale <= 0:
            raise InvalidGeometry(f"scale must be positive, got {self.scale}")

    def apply(self, pt: Point) -> Point:
        x, y = pt
        if self.reflect:
            x = -x
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        return (
            self.scale * (c * x - s * y) + self.dx,
            self.scale * (s * x + c * y) + self.dy,
        )

    def apply_polygon(self, poly: "Polygon") -> "Polygon":
        pts = [self.apply(p) for p in poly.vertices]
        if self.reflect:
            pts.reverse()  # keep CCW orientation
        return Polygon(pts)

    def compose(self, other: "SimilarityTransform") -> "SimilarityTransform":
        """self ∘ other: apply `other` first."""
        sign = -1.0 if self.reflect else 1.0
        dx2, dy2 = self.apply((other.dx, other.dy))
        return SimilarityTransform(
            scale=self.scale * other.scale,
            rotation=self.rotation + sign * other.rotation,
            reflect=self.reflect != other.reflect,
            dx=dx2,
            dy=dy2,
        )

    def inverse(self) -> "SimilarityTransform":
        inv = SimilarityTransform(scale=1.0 / self.scale, rotation=0.0)
        # Undo in reverse order: translation, rotation/scale, mirror.
        c, s = math.cos(-self.rotation), math.sin(-self.rotation)
        tx, ty = -self.dx / self.scale, -self.dy / self.scale
        rx, ry = c * tx - s * ty, s * tx + c * ty
        if self.reflect:
            return SimilarityTransform(1.0 / self.scale, -(-self.rotation), True, -rx, ry)
        return SimilarityTransform(1.0 / self.scale, -self.rotation, False, rx, ry)


class D4Element(Enum):
    IDENTITY = "identity"
    ROT90 = "rot90"
    ROT180 = "rot180"
    ROT270 = "rot270"
    MIRROR_V = "mirrorV"  # flip left-right (about the vertical axis)
    MIRROR_H = "mirrorH"  # flip top-bottom (about the horizontal axis)
    MIRROR_MAIN_DIAG = "mirrorMainDiag"  # about ↘ diagonal
    MIRROR_ANTI_DIAG = "mirrorAntiDiag"  # about ↙ diagonal


# (rotation quarter-turns CCW, reflected) canonical form; reflection applied
# first as flip left-right, then rotation.
_D4_CANON = {
    D4Element.IDENTITY: (0, False),
    D4Element.ROT90: (1, False),
    D4Element.ROT180: (2, False),
    D4Element.ROT270: (3, False),
    D4Element.MIRROR_V: (0, True),
    D4Element.MIRROR_H: (2, True),
    D4Element.MIRROR_MAIN_DIAG: (1, True),
    D4Element.MIRROR_ANTI_DIAG: (3, True),
}
_D4_FROM_CANON = {v: k for k, v in _D4_CANON.items()}


def d4_compose(a: D4Element, b: D4Element) -> D4Element:
    """a ∘ b: apply b first, then a."""
    ra, fa = _D4_CANON[a]
    rb, fb = _D4_CANON[b]
    if fa:
        r = (ra - rb) % 4
    else:
        r = (ra + rb) % 4
    return _D4_FROM_CANON[(r, fa != fb)]


def d4_inverse(e: D4Element) -> D4Element:
    r, f = _D4_CANON[e]
    if f:
        return e  # reflections are involutions
    return _D4_FROM_CANON[((-r) % 4, False)]


def d4_apply_point(e: D4Element, pt: Point, cx: float = 0.0, cy: float = 0.0) -> Point:
    """Apply a D4 element about center (cx, cy) in math (y-up) convention."""
    x, y = pt[0] - cx, pt[1] - cy
    r, f = _D4_CANON[e]
    if f:
        x = -x
    for _ in range(r):
        x, y = -y, x
    return (x + cx, y + cy)


class Polygon:
    """Simple closed polygon, vertices counterclockwise."""

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        vertices = [(float(x), float(y)) for x, y in vertices]
        if len(vertices) < 3:
            raise InvalidGeometry(f"polygon needs >= 3 vertices, got {len(vertices)}")
        for x, y in vertices:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise InvalidGeometry("non-finite vertex coordinate")
        self.vertices = vertices

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self):
        return f"Polygon({self.vertices!r})"

    def signed_area(self) -> float:
        acc = 0.0
        pts = self.vertices
        for i in range(len(pts)):
            x1, y1 = pts[i]
            x2, y2 = pts[(i + 1) % len(pts)]
            acc += x1 * y2 - x2 * y1
        return 0.5 * acc

    def centroid(self) -> Point:
        a = self.signed_area()
        if abs(a) < 1e-12:
            xs = [p[0] for p in self.vertices]
            ys = [p[1] for p in self.vertices]
            return (sum(xs) / len(xs), sum(ys) / len(ys))
        cx = cy = 0.0
        pts = self.vertices
        for i in range(len(pts)):
            x1, y1 = pts[i]
            x2, y2 = pts[(i + 1) % len(pts)]
            cross = x1 * y2 - x2 * y1
            cx += (x1 + x2) * cross
            cy += (y1 + y2) * cross
        return (cx / (6 * a), cy / (6 * a))

    def bounds(self):
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def translated(self, dx: float, dy: float) -> "Polygon":
        return Polygon([(x + dx, y + dy) for x, y in self.vertices])


def polygon_area(p: Polygon) -> float:
    """Shoelace area; non-negative for CCW input."""
    return p.signed_area()


def polygon_perimeter(p: Polygon) -> float:
    pts = p.vertices
    total = 0.0
    for i in range(len(pts)):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % len(pts)]
        total += math.hypot(x2 - x1, y2 - y1)
    return total


def point_in_polygon(pt: Point, p: Polygon, eps: float = 1e-9) -> bool:
    """Strict interior test; boundary points return False."""
    x, y = pt
    pts = p.vertices
    n = len(pts)
    # Boundary check first.
    for i in range(n):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % n]
        dx, dy = x2 - x1, y2 - y1
        seg_len2 = dx * dx + dy * dy
        if seg_len2 == 0:
            continue
        t = ((x - x1) * dx + (y - y1) * dy) / seg_len2
        if -eps <= t <= 1 + eps:
            px, py = x1 + t * dx, y1 + t * dy
            if (x - px) ** 2 + (y - py) ** 2 <= eps * eps * max(1.0, seg_len2):
                return False
    inside = False
    for i in range(n):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            x_int = x1 + (y - y1) / (y2 - y1) * (x2 - x1)
            if x < x_int:
                inside = not inside
    return inside


def regular_polygon(cx: float, cy: float, radius: float, n: int, phase: float = 0.0) -> Polygon:
    """CCW regular n-gon (in y-up convention)."""
    return Polygon(
        [
            (cx + radius * math.cos(phase + 2 * math.pi * k / n),
             cy + radius * math.sin(phase + 2 * math.pi * k / n))
            for k in range(n)
        ]
    )


def clip_polygon_to_box(p: Polygon, x0: float, y0: float, x1: float, y1: float):
    """Sutherland–Hodgman clip against an axis-aligned box.

    Returns a Polygon, or None when the intersection is empty/degenerate.
    """

    def clip_edge(pts, inside, intersect):
        out = []
        n = len(pts)
        for i in range(n):
            cur, nxt = pts[i], pts[(i + 1) % n]
            cur_in, nxt_in = inside(cur), inside(nxt)
            if cur_in:
                out.append(cur)
                if not nxt_in:
                    out.append(intersect(cur, nxt))
            elif nxt_in:
                out.append(intersect(cur, nxt))
        return out

    def x_cut(bound):
        def fn(a, b):
            t = (bound - a[0]) / (b[0] - a[0])
            return (bound, a[1] + t * (b[1] - a[1]))

        return fn

    def y_cut(bound):
        def fn(a, b):
            t = (bound - a[1]) / (b[1] - a[1])
            return (a[0] + t * (b[0] - a[0]), bound)

        return fn

    pts = list(p.vertices)
    for inside, intersect in (
        (lambda q: q[0] >= x0, x_cut(x0)),
        (lambda q: q[0] <= x1, x_cut(x1)),
        (lambda q: q[1] >= y0, y_cut(y0)),
        (lambda q: q[1] <= y1, y_cut(y1)),
    ):
        if len(pts) < 3:
            return None
        pts = clip_edge(pts, inside, intersect)
    if len(pts) < 3:
        return None
    try:
        return Polygon(pts)
    except InvalidGeometry:
        return None


def segments_intersect(p1, p2, p3, p4, eps=1e-12):
    """Proper or touching intersection of segments p1p2 and p3p4."""

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    def on_seg(a, b, c):
        return (
            min(a[0], b[0]) - eps <= c[0] <= max(a[0], b[0]) + eps
            and min(a[1], b[1]) - eps <= c[1] <= max(a[1], b[1]) + eps
        )

    d1 = orient(p3, p4, p1)
    d2 = orient(p3, p4, p2)
    d3 = orient(p1, p2, p3)
    d4 = orient(p1, p2, p4)
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and (
        (d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)
    ):
        return True
    if abs(d1) <= eps and on_seg(p3, p4, p1):
        return True
    if abs(d2) <= eps and on_seg(p3, p4, p2):
        return True
    if abs(d3) <= eps and on_seg(p1, p2, p3):
        return True
    if abs(d4) <= eps and on_seg(p1, p2, p4):
        return True
    return False


def polygon_is_simple(p: Polygon) -> bool:
    pts = p.vertices
    n = len(pts)
    for i in range(n):
        a1, a2 = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            b1, b2 = pts[j], pts[(j + 1) % n]
            if segments_intersect(a1, a2, b1, b2):
                return False
    return True
