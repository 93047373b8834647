"""Builders for the 25 motif families.

Each builder maps (attributes, rng) to a vector Scene inside the unit tile
(y down, transparent background). The rng carries only micro-variation that
is not worth an attribute (e.g. bar height jitter); it derives from the
MotifSpec seed, so a spec always renders identically.
"""

from __future__ import annotations

import math

from ..colors import color_rgba
from ..geometry import Polygon, clip_polygon_to_box
from ..raster import Scene, stroke_to_parts
from ..fonts import STROKES, GLYPH_W, GLYPH_H
from . import shapes

DEG = math.pi / 180.0


def _scene():
    return Scene(items=[], background=(0, 0, 0, 0))


def _col(attrs, key="color"):
    return color_rgba(int(attrs[key]))


def _col2(attrs):
    c1, c2 = int(attrs["color"]), int(attrs["color2"])
    if c1 == c2:
        c2 = (c2 + 5) % 14
    return color_rgba(c1), color_rgba(c2)


def build_arc(attrs, rng):
    s = _scene()
    r = attrs["radius"]
    a0 = attrs["start_deg"] * DEG
    a1 = a0 + attrs["sweep_deg"] * DEG
    if attrs["sector"]:
        s.add(shapes.sector(0.5, 0.5, r, a0, a1), _col(attrs))
    else:
        s.add(shapes.arc_band(0.5, 0.5, r, max(r - attrs["thickness"], 0.02), a0, a1),
              _col(attrs))
    return s


def build_arrow(attrs, rng):
    s = _scene()
    L = attrs["length"]
    w = attrs["shaft_w"]
    hf = attrs["head_frac"]
    hw = max(w * 2.2, 0.14)
    x0, x1 = 0.5 - L / 2, 0.5 + L / 2
    hb = x1 - hf * L  # head base
    pts = [(x0, 0.5 - w / 2), (hb, 0.5 - w / 2), (hb, 0.5 - hw / 2), (x1, 0.5),
           (hb, 0.5 + hw / 2), (hb, 0.5 + w / 2), (x0, 0.5 + w / 2)]
    if attrs["double"]:
        hb0 = x0 + hf * L
        pts = [(x0, 0.5), (hb0, 0.5 - hw / 2), (hb0, 0.5 - w / 2), (hb, 0.5 - w / 2),
               (hb, 0.5 - hw / 2), (x1, 0.5), (hb, 0.5 + hw / 2), (hb, 0.5 + w / 2),
               (hb0, 0.5 + w / 2), (hb0, 0.5 + hw / 2)]
    poly = Polygon(pts)
    s.add(shapes.rotate_polygons([poly], 0.5, 0.5, attrs["rot_deg"] * DEG), _col(attrs))
    return s


def build_bars(attrs, rng):
    s = _scene()
    n = int(attrs["count"])
    color = _col(attrs)
    slot = 0.9 / n
    bw = slot * attrs["fill_frac"]
    heights = [0.25 + 0.65 * rng.random() for _ in range(n)]
    for i, h in enumerate(heights):
        c0 = 0.05 + i * slot + (slot - bw) / 2
        if attrs["orientation"] == "v":
            p = shapes.rect(c0, 0.95 - h * 0.9, c0 + bw, 0.95)
        else:
            p = shapes.rect(0.05, c0, 0.05 + h * 0.9, c0 + bw)
        s.add(p, color)
        if attrs["outline"]:
            s.add(stroke_to_parts(list(p.vertices), 0.012, closed=True), (30, 30, 30, 255))
    return s


def build_bitgrid(attrs, rng):
    s = _scene()
    n = int(attrs["n"])
    on, off = _col(attrs), color_rgba(int(attrs["off_color"]), 255)
    if int(attrs["off_color"]) == int(attrs["color"]):
        off = (235, 235, 235, 255)
    pad = attrs["pad"]
    cell = 0.9 / n
    bits = [[rng.random() < attrs["density"] for _ in range(n)] for _ in range(n)]
    if not any(b for row in bits for b in row):
        bits[0][0] = True
    for j in range(n):
        for i in range(n):
            x0, y0 = 0.05 + i * cell, 0.05 + j * cell
            s.add(shapes.rect(x0 + pad, y0 + pad, x0 + cell - pad, y0 + cell - pad),
                  on if bits[j][i] else off)
    return s


def build_clock(attrs, rng):
    s = _scene()
    color = _col(attrs)
    if attrs["face"]:
        s.add(shapes.circle(0.5, 0.5, 0.45), (245, 245, 245, 255))
    s.add([shapes.circle(0.5, 0.5, 0.45), shapes.circle(0.5, 0.5, 0.42)], color, mode="xor")
    for k in range(12):
        a = k * 30 * DEG
        r0, r1 = 0.42 - attrs["tick_len"], 0.41
        s.add(shapes.thick_segment(0.5 + r0 * math.cos(a), 0.5 + r0 * math.sin(a),
                                   0.5 + r1 * math.cos(a), 0.5 + r1 * math.sin(a), 0.02),
              color)
    for ang, ln, w in ((attrs["hour_deg"], 0.22, 0.05), (attrs["minute_deg"], 0.34, 0.03)):
        a = (ang - 90) * DEG
        s.add(shapes.thick_segment(0.5, 0.5, 0.5 + ln * math.cos(a), 0.5 + ln * math.sin(a), w),
              color)
    s.add(shapes.circle(0.5, 0.5, 0.03, n=12), color)
    return s


def build_concentric_polygon(attrs, rng):
    s = _scene()
    c1, c2 = _col2(attrs)
    layers = int(attrs["layers"])
    sides = int(attrs["sides"])
    base = attrs["rot_deg"] * DEG
    for i in range(layers):
        r = 0.45 * (layers - i) / layers
        phase = base + i * attrs["rot_offset_deg"] * DEG
        poly = Polygon(
            [(0.5 + r * math.cos(phase + 2 * math.pi * k / sides),
              0.5 + r * math.sin(phase + 2 * math.pi * k / sides)) for k in range(sides)]
        )
        s.add(poly, c1 if i % 2 == 0 else c2)
    return s


def build_crescent(attrs, rng):
    s = _scene()
    s.add(shapes.crescent(0.5, 0.5, 0.4, attrs["ratio"], attrs["offset"],
                          attrs["rot_deg"] * DEG), _col(attrs))
    return s


def build_dot(attrs, rng):
    s = _scene()
    color = _col(attrs)
    r = attrs["radius"]
    n = int(attrs["count"])
    centers = [(0.5, 0.5)]
    for k in range(1, n):
        a = rng.uniform(0, 2 * math.pi)
        d = rng.uniform(2.2 * r, 0.45 - r)
        if d <= 0:
            d = 2.2 * r
        centers.append((min(max(0.5 + d * math.cos(a), r + 0.02), 0.98 - r),
                        min(max(0.5 + d * math.sin(a), r + 0.02), 0.98 - r)))
    for i, (cx, cy) in enumerate(centers):
        rr = r * (1.0 - 0.25 * i)
        if attrs["shape"] == "circle":
            s.add(shapes.circle(cx, cy, rr), color)
        elif attrs["shape"] == "square":
            s.add(shapes.rect(cx - rr, cy - rr, cx + rr, cy + rr), color)
        else:
            s.add(Polygon([(cx, cy - rr), (cx + rr, cy), (cx, cy + rr), (cx - rr, cy)]), color)
    return s


def _koch_curve(p1, p2, depth):
    if depth == 0:
        return [p1, p2]
    (x1, y1), (x2, y2) = p1, p2
    dx, dy = (x2 - x1) / 3, (y2 - y1) / 3
    a = (x1 + dx, y1 + dy)
    b = (x1 + 2 * dx, y1 + 2 * dy)
    # Peak of the equilateral bump.
    mx, my = (x1 + x2) / 2, (y1 + y2) / 2
    px = mx - (y2 - y1) * math.sqrt(3) / 6
    py = my + (x2 - x1) * math.sqrt(3) / 6
    pts = []
    for seg in ((p1, a), (a, (px, py)), ((px, py), b), (b, p2)):
        sub = _koch_curve(seg[0], seg[1], depth - 1)
        pts.extend(sub[:-1])
    pts.append(p2)
    return pts


def _sierpinski(x, y, side, depth):
    h = side * math.sqrt(3) / 2
    if depth == 0:
        return [Polygon([(x, y), (x + side, y), (x + side / 2, y - h)])]
    out = []
    out += _sierpinski(x, y, side / 2, depth - 1)
    out += _sierpinski(x + side / 2, y, side / 2, depth - 1)
    out += _sierpinski(x + side / 4, y - h / 2, side / 2, depth - 1)
    return out


def build_fractal(attrs, rng):
    s = _scene()
    color = _col(attrs)
    depth = min(int(attrs["depth"]), 4)
    if attrs["generator"] == "koch":
        pts = _koch_curve((0.08, 0.62), (0.92, 0.62), depth)
        parts = stroke_to_parts(pts, 0.02)
        parts = shapes.rotate_polygons(parts, 0.5, 0.5, attrs["rot_deg"] * DEG)
        s.add(parts, color)
    else:
        tris = _sierpinski(0.08, 0.88, 0.84, min(depth, 3))
        tris = shapes.rotate_polygons(tris, 0.5, 0.5, attrs["rot_deg"] * DEG)
        for t in tris:
            s.add(t, color)
    return s


def build_gear(attrs, rng):
    s = _scene()
    teeth = int(attrs["teeth"])
    r_out = 0.45
    r_in = r_out * (1 - attrs["tooth_depth"])
    phase = attrs["phase_deg"] * DEG
    pts = []
    step = 2 * math.pi / teeth
    for k in range(teeth):
        a = phase + k * step
        for frac, rr in ((0.0, r_in), (0.25, r_in), (0.3, r_out), (0.7, r_out), (0.75, r_in)):
            ang = a + frac * step
            pts.append((0.5 + rr * math.cos(ang), 0.5 + rr * math.sin(ang)))
    hub = shapes.circle(0.5, 0.5, r_out * attrs["hub_ratio"])
    s.add([Polygon(pts), hub], _col(attrs), mode="xor")
    return s


def build_glyph(attrs, rng):
    s = _scene()
    color = _col(attrs)
    ch = str(attrs["char"]).upper()
    scale = 0.8 / GLYPH_H
    ox = 0.5 - GLYPH_W * scale / 2
    parts = []
    for polyline in STROKES.get(ch, STROKES["?"]):
        pts = [(ox + x * scale, 0.1 + y * scale) for x, y in polyline]
        if len(pts) >= 2:
            parts.extend(stroke_to_parts(pts, attrs["weight"]))
    parts = shapes.rotate_polygons(parts, 0.5, 0.5, attrs["rot_deg"] * DEG)
    s.add(parts, color)
    return s


def build_icons(attrs, rng):
    s = _scene()
    name = attrs["icon"]
    polys = shapes.ICONS.get(name, shapes.ICONS["house"])
    k = attrs["scale"]
    for p in polys:
        s.add(Polygon([(0.5 + (x - 0.5) * k, 0.5 + (y - 0.5) * k) for x, y in p.vertices]),
              _col(attrs))
    return s


def build_keyhole(attrs, rng):
    s = _scene()
    hr = attrs["head_r"]
    sw, sl = attrs["slot_w"], attrs["slot_len"]
    cy = 0.5 - sl / 2
    head = shapes.circle(0.5, cy, hr)
    slot = Polygon([(0.5 - sw / 2, cy), (0.5 + sw / 2, cy),
                    (0.5 + sw, cy + sl + hr * 0.6), (0.5 - sw, cy + sl + hr * 0.6)])
    parts = shapes.rotate_polygons([head, slot], 0.5, 0.5, attrs["rot_deg"] * DEG)
    s.add(parts, _col(attrs))
    return s


def build_ladder(attrs, rng):
    s = _scene()
    color = _col(attrs)
    gap = attrs["rail_gap"]
    th = attrs["thickness"]
    taper = attrs["taper"]
    rungs = int(attrs["rungs"])
    top_gap = gap * (1 - taper)
    y0, y1 = 0.08, 0.92
    lx = lambda y: 0.5 - (top_gap + (gap - top_gap) * (y - y0) / (y1 - y0)) / 2
    rx = lambda y: 0.5 + (top_gap + (gap - top_gap) * (y - y0) / (y1 - y0)) / 2
    parts = [shapes.thick_segment(lx(y0), y0, lx(y1), y1, th),
             shapes.thick_segment(rx(y0), y0, rx(y1), y1, th)]
    for k in range(rungs):
        y = y0 + (y1 - y0) * (k + 1) / (rungs + 1)
        parts.append(shapes.thick_segment(lx(y), y, rx(y), y, th))
    parts = shapes.rotate_polygons(parts, 0.5, 0.5, attrs["tilt_deg"] * DEG)
    s.add(parts, color)
    return s


def build_pictogram(attrs, rng):
    s = _scene()
    polys = shapes.PICTOGRAMS.get(attrs["name"], shapes.PICTOGRAMS["person"])
    k = attrs["scale"]
    for p in polys:
        s.add(Polygon([(0.5 + (x - 0.5) * k, 0.5 + (y - 0.5) * k) for x, y in p.vertices]),
              _col(attrs))
    return s


def build_pinwheel_triangle(attrs, rng):
    s = _scene()
    c1, c2 = _col2(attrs)
    blades = int(attrs["blades"])
    r_in = attrs["inner_r"]
    sign = 1 if attrs["chirality"] else -1
    for k in range(blades):
        a = 2 * math.pi * k / blades
        tip = a + sign * (2 * math.pi / blades) * 0.85
        s.add(Polygon([(0.5 + r_in * math.cos(a), 0.5 + r_in * math.sin(a)),
                       (0.5 + 0.45 * math.cos(a), 0.5 + 0.45 * math.sin(a)),
                       (0.5 + 0.45 * math.cos(tip), 0.5 + 0.45 * math.sin(tip))]),
              c1 if k % 2 == 0 else c2)
    return s


def build_polygon(attrs, rng):
    s = _scene()
    n = int(attrs["sides"])
    jit = attrs["jitter"]
    base = attrs["rot_deg"] * DEG
    pts = []
    for k in range(n):
        a = base + 2 * math.pi * k / n
        r = 0.42 * (1 - jit * rng.random())
        pts.append((0.5 + r * math.cos(a), 0.5 + r * math.sin(a)))
    poly = Polygon(pts)
    s.add(poly, _col(attrs))
    if attrs["outline"]:
        s.add(stroke_to_parts(pts, 0.015, closed=True), (30, 30, 30, 255))
    return s


_HEX_DIRS = [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)]


def build_polyhex(attrs, rng):
    s = _scene()
    cells = shapes.grow_connected_cells(
        rng, int(attrs["cells"]),
        lambda c: [(c[0] + dq, c[1] + dr) for dq, dr in _HEX_DIRS])
    r = 0.13
    centers = {c: (r * 1.5 * c[0], r * math.sqrt(3) * (c[1] + c[0] / 2)) for c in cells}
    xs = [p[0] for p in centers.values()]
    ys = [p[1] for p in centers.values()]
    ox, oy = 0.5 - (min(xs) + max(xs)) / 2, 0.5 - (min(ys) + max(ys)) / 2
    color = _col(attrs)
    for c, (cx, cy) in sorted(centers.items()):
        hexagon = shapes.circle(cx + ox, cy + oy, r * 1.02, n=6)
        s.add(hexagon, color)
        if attrs["outline"]:
            s.add(stroke_to_parts(list(hexagon.vertices), 0.01, closed=True), (30, 30, 30, 255))
    return s


def build_polyamond(attrs, rng):
    s = _scene()
    # Cells on a triangular lattice: (i, j) with parity giving orientation.
    def nbrs(c):
        i, j = c
        out = [(i - 1, j), (i + 1, j)]
        out.append((i, j + 1) if (i + j) % 2 == 0 else (i, j - 1))
        return out

    cells = shapes.grow_connected_cells(rng, int(attrs["cells"]), nbrs)
    side = 0.22
    h = side * math.sqrt(3) / 2
    tris = {}
    for (i, j) in cells:
        x0 = i * side / 2
        yb = j * h
        if (i + j) % 2 == 0:
            tris[(i, j)] = [(x0, yb + h), (x0 + side, yb + h), (x0 + side / 2, yb)]
        else:
            tris[(i, j)] = [(x0, yb), (x0 + side, yb), (x0 + side / 2, yb + h)]
    xs = [x for t in tris.values() for x, _ in t]
    ys = [y for t in tris.values() for _, y in t]
    ox, oy = 0.5 - (min(xs) + max(xs)) / 2, 0.5 - (min(ys) + max(ys)) / 2
    color = _col(attrs)
    for c in sorted(tris):
        pts = [(x + ox, y + oy) for x, y in tris[c]]
        s.add(Polygon(pts), color)
        if attrs["outline"]:
            s.add(stroke_to_parts(pts, 0.01, closed=True), (30, 30, 30, 255))
    return s


def build_polyline(attrs, rng):
    s = _scene()
    n = int(attrs["points"])
    pts = [(rng.uniform(0.1, 0.9), rng.uniform(0.1, 0.9))]
    while len(pts) < n:
        cand = (rng.uniform(0.1, 0.9), rng.uniform(0.1, 0.9))
        if math.hypot(cand[0] - pts[-1][0], cand[1] - pts[-1][1]) > 0.2:
            pts.append(cand)
    color = _col(attrs)
    s.add(stroke_to_parts(pts, attrs["width"]), color)
    if attrs["markers"]:
        s.add(shapes.circle(*pts[0], attrs["width"] * 1.6, n=12), color)
        r = attrs["width"] * 1.6
        s.add(shapes.rect(pts[-1][0] - r, pts[-1][1] - r, pts[-1][0] + r, pts[-1][1] + r), color)
    return s


def build_polyomino(attrs, rng):
    s = _scene()
    cells = shapes.grow_connected_cells(
        rng, int(attrs["cells"]),
        lambda c: [(c[0] + 1, c[1]), (c[0] - 1, c[1]), (c[0], c[1] + 1), (c[0], c[1] - 1)])
    side = 0.2
    xs = [i for i, _ in cells]
    ys = [j for _, j in cells]
    ox = 0.5 - side * (min(xs) + max(xs) + 1) / 2
    oy = 0.5 - side * (min(ys) + max(ys) + 1) / 2
    color = _col(attrs)
    for (i, j) in sorted(cells):
        p = shapes.rect(ox + i * side, oy + j * side, ox + (i + 1) * side, oy + (j + 1) * side)
        s.add(p, color)
        if attrs["outline"]:
            s.add(stroke_to_parts(list(p.vertices), 0.01, closed=True), (30, 30, 30, 255))
    return s


def build_rings(attrs, rng):
    s = _scene()
    c1, c2 = _col2(attrs)
    n = int(attrs["count"])
    r = attrs["outer_r"]
    th = attrs["thickness"]
    gap = attrs["gap_deg"] * DEG
    rot = attrs["rot_deg"] * DEG
    for k in range(n):
        ro = r - k * (th + 0.02)
        ri = ro - th
        if ri <= 0.01:
            break
        color = c1 if k % 2 == 0 else c2
        if gap > 1e-6:
            s.add(shapes.arc_band(0.5, 0.5, ro, ri, rot + gap / 2, rot + 2 * math.pi - gap / 2),
                  color)
        else:
            s.add([shapes.circle(0.5, 0.5, ro), shapes.circle(0.5, 0.5, ri)], color, mode="xor")
    return s


def build_segment(attrs, rng):
    s = _scene()
    color = _col(attrs)
    L = attrs["length"]
    a = attrs["angle_deg"] * DEG
    x1, y1 = 0.5 - L / 2 * math.cos(a), 0.5 - L / 2 * math.sin(a)
    x2, y2 = 0.5 + L / 2 * math.cos(a), 0.5 + L / 2 * math.sin(a)
    s.add(shapes.thick_segment(x1, y1, x2, y2, attrs["width"]), color)
    caps = int(attrs["caps"])
    r = attrs["width"] * 1.8
    if caps >= 1:
        s.add(shapes.circle(x1, y1, r, n=12), color)
    if caps == 2:
        s.add(shapes.rect(x2 - r, y2 - r, x2 + r, y2 + r), color)
    return s


def build_star_polygon(attrs, rng):
    s = _scene()
    n_str, k_str = str(attrs["figure"]).split(",")
    n, k = int(n_str), int(k_str)
    r = attrs["radius"]
    # Standard {n,k} star silhouette: alternate outer and inner radius.
    r_in = r * math.cos(math.pi * k / n) / math.cos(math.pi * (k - 1) / n)
    r_in = max(r_in, 0.08 * r)
    base = attrs["rot_deg"] * DEG
    pts = []
    for i in range(2 * n):
        ang = base + math.pi * i / n
        rr = r if i % 2 == 0 else r_in
        pts.append((0.5 + rr * math.cos(ang), 0.5 + rr * math.sin(ang)))
    s.add(Polygon(pts), _col(attrs))
    return s


def build_stripes(attrs, rng):
    s = _scene()
    c1, c2 = _col2(attrs)
    bands = int(attrs["bands"])
    angle = float(attrs["angle"]) * DEG
    phase = attrs["phase"]
    width = 1.0 / bands
    accent_idx = bands // 2 + 1 if attrs["accent"] else -1
    # Long bands perpendicular to `angle`, clipped to the unit box.
    dx, dy = math.cos(angle), math.sin(angle)
    nx, ny = -dy, dx
    for b in range(-bands, 2 * bands + 1):
        offs = (b + phase) * width
        cx, cy = 0.5 + nx * (offs - 0.5), 0.5 + ny * (offs - 0.5)
        pts = [(cx - dx * 2 + nx * width / 2 * sgn1, cy - dy * 2 + ny * width / 2 * sgn1)
               for sgn1 in (1,)]
        p = Polygon([
            (cx - dx * 2 - nx * width / 2, cy - dy * 2 - ny * width / 2),
            (cx + dx * 2 - nx * width / 2, cy + dy * 2 - ny * width / 2),
            (cx + dx * 2 + nx * width / 2, cy + dy * 2 + ny * width / 2),
            (cx - dx * 2 + nx * width / 2, cy - dy * 2 + ny * width / 2),
        ])
        clipped = clip_polygon_to_box(p, 0.02, 0.02, 0.98, 0.98)
        if clipped is None:
            continue
        if b == accent_idx:
            color = color_rgba((int(attrs["color"]) + 7) % 14)
        else:
            color = c1 if b % 2 == 0 else c2
        s.add(clipped, color)
    return s


BUILDERS = {
    "arc": build_arc,
    "arrow": build_arrow,
    "bars": build_bars,
    "bitgrid": build_bitgrid,
    "clock": build_clock,
    "concentric-polygon": build_concentric_polygon,
    "crescent": build_crescent,
    "dot": build_dot,
    "fractal": build_fractal,
    "gear": build_gear,
    "glyph": build_glyph,
    "icons": build_icons,
    "keyhole": build_keyhole,
    "ladder": build_ladder,
    "pictogram": build_pictogram,
    "pinwheel-triangle": build_pinwheel_triangle,
    "polygon": build_polygon,
    "polyhex": build_polyhex,
    "polyamond": build_polyamond,
    "polyline": build_polyline,
    "polyomino": build_polyomino,
    "rings": build_rings,
    "segment": build_segment,
    "star-polygon": build_star_polygon,
    "stripes": build_stripes,
}
