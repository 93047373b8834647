"""Shape constructors shared by motif families: circles, arcs, lattice cell
unions, and the embedded icon/pictogram silhouettes."""

from __future__ import annotations

import math

from ..geometry import Polygon

CIRCLE_SEGMENTS = 32


def circle(cx, cy, r, n=CIRCLE_SEGMENTS, phase=0.0):
    return Polygon(
        [(cx + r * math.cos(phase + 2 * math.pi * k / n),
          cy + r * math.sin(phase + 2 * math.pi * k / n)) for k in range(n)]
    )


def rect(x0, y0, x1, y1):
    return Polygon([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])


def arc_band(cx, cy, r_outer, r_inner, a0, a1, n=24):
    """Annular band between angles a0..a1 (radians)."""
    outer = [(cx + r_outer * math.cos(a0 + (a1 - a0) * k / n),
              cy + r_outer * math.sin(a0 + (a1 - a0) * k / n)) for k in range(n + 1)]
    inner = [(cx + r_inner * math.cos(a1 + (a0 - a1) * k / n),
              cy + r_inner * math.sin(a1 + (a0 - a1) * k / n)) for k in range(n + 1)]
    return Polygon(outer + inner)


def sector(cx, cy, r, a0, a1, n=24):
    pts = [(cx, cy)]
    pts += [(cx + r * math.cos(a0 + (a1 - a0) * k / n),
             cy + r * math.sin(a0 + (a1 - a0) * k / n)) for k in range(n + 1)]
    return Polygon(pts)


def crescent(cx, cy, r, ratio, offset_frac, rot):
    """Lune: outer disk of radius r minus an inner disk of radius ratio*r
    whose center is shifted by offset_frac*r along `rot`."""
    r2 = ratio * r
    d = offset_frac * r + (r - r2)  # keep a genuine two-arc lune
    d = min(d, r + r2 - 1e-6)
    # Circle intersection angles (inner center on +x before rotation).
    cosb = (d * d + r * r - r2 * r2) / (2 * d * r)
    cosb = max(-1.0, min(1.0, cosb))
    beta = math.acos(cosb)  # half-angle on outer circle
    ix, iy = cx + d * math.cos(rot), cy + d * math.sin(rot)
    cosg = (d * d + r2 * r2 - r * r) / (2 * d * r2)
    cosg = max(-1.0, min(1.0, cosg))
    gamma = math.acos(cosg)
    n = 28
    outer = []
    for k in range(n + 1):
        a = rot + beta + (2 * math.pi - 2 * beta) * k / n
        outer.append((cx + r * math.cos(a), cy + r * math.sin(a)))
    inner = []
    for k in range(n + 1):
        a = rot + math.pi - gamma - (math.pi - gamma) * 0 + (-(2 * math.pi - 2 * gamma)) * k / n
        a = rot + math.pi - gamma + (2 * gamma - 2 * math.pi) * 0  # placeholder, replaced below
    # inner arc from angle (rot - (pi - gamma)) to (rot + (pi - gamma)) around
    # inner center, traversed so the lune polygon stays simple.
    inner = []
    for k in range(n + 1):
        a = (rot - (math.pi - gamma)) + (2 * (math.pi - gamma)) * k / n
        inner.append((ix + r2 * math.cos(a), iy + r2 * math.sin(a)))
    return Polygon(outer + inner[::-1])


def thick_segment(x1, y1, x2, y2, w):
    dx, dy = x2 - x1, y2 - y1
    ln = math.hypot(dx, dy) or 1.0
    nx, ny = -dy / ln * w / 2, dx / ln * w / 2
    return Polygon([(x1 + nx, y1 + ny), (x2 + nx, y2 + ny), (x2 - nx, y2 - ny), (x1 - nx, y1 - ny)])


def rotate_polygons(polys, cx, cy, angle):
    c, s = math.cos(angle), math.sin(angle)
    out = []
    for p in polys:
        out.append(
            Polygon(
                [(cx + c * (x - cx) - s * (y - cy), cy + s * (x - cx) + c * (y - cy))
                 for x, y in p.vertices]
            )
        )
    return out


def grow_connected_cells(rng, n_cells, neighbors_fn, start=(0, 0)):
    """Random connected cell set of size n_cells via seeded BFS-ish growth."""
    cells = {start}
    frontier = list(neighbors_fn(start))
    while len(cells) < n_cells:
        frontier = [c for c in frontier if c not in cells]
        if not frontier:
            for c in sorted(cells):
                frontier.extend(x for x in neighbors_fn(c) if x not in cells)
            frontier = sorted(set(frontier))
            if not frontier:
                break
        pick = rng.choice(sorted(set(frontier)))
        cells.add(pick)
        frontier.extend(neighbors_fn(pick))
    return cells


# ---------------------------------------------------------------------------
# Embedded silhouettes (unit box, y down). Each entry: list of vertex lists.
# ---------------------------------------------------------------------------


def _sil(*polys):
    return [Polygon(p) for p in polys]


ICONS = {
    "house": _sil(
        [(0.5, 0.08), (0.95, 0.45), (0.05, 0.45)],
        [(0.15, 0.45), (0.85, 0.45), (0.85, 0.95), (0.15, 0.95)],
    ),
    "tree": _sil(
        [(0.5, 0.05), (0.85, 0.45), (0.15, 0.45)],
        [(0.5, 0.25), (0.9, 0.7), (0.1, 0.7)],
        [(0.42, 0.7), (0.58, 0.7), (0.58, 0.95), (0.42, 0.95)],
    ),
    "cup": _sil(
        [(0.2, 0.2), (0.8, 0.2), (0.72, 0.75), (0.28, 0.75)],
        [(0.3, 0.78), (0.7, 0.78), (0.7, 0.88), (0.3, 0.88)],
    ),
    "key": _sil(
        [(0.12, 0.28), (0.42, 0.28), (0.42, 0.52), (0.12, 0.52)],
        [(0.38, 0.36), (0.92, 0.36), (0.92, 0.44), (0.38, 0.44)],
        [(0.74, 0.44), (0.82, 0.44), (0.82, 0.6), (0.74, 0.6)],
        [(0.86, 0.44), (0.92, 0.44), (0.92, 0.66), (0.86, 0.66)],
    ),
    "flag": _sil(
        [(0.2, 0.08), (0.26, 0.08), (0.26, 0.95), (0.2, 0.95)],
        [(0.26, 0.1), (0.88, 0.22), (0.26, 0.42)],
    ),
    "envelope": _sil(
        [(0.08, 0.25), (0.92, 0.25), (0.92, 0.78), (0.08, 0.78)],
        [(0.1, 0.27), (0.9, 0.27), (0.5, 0.55)],
    ),
    "heart": _sil(
        [(0.5, 0.92), (0.08, 0.45), (0.16, 0.22), (0.34, 0.16), (0.5, 0.32),
         (0.66, 0.16), (0.84, 0.22), (0.92, 0.45)],
    ),
    "boat": _sil(
        [(0.1, 0.62), (0.9, 0.62), (0.72, 0.88), (0.28, 0.88)],
        [(0.5, 0.08), (0.5, 0.58), (0.18, 0.58)],
        [(0.55, 0.14), (0.85, 0.5), (0.55, 0.5)],
    ),
    "lamp": _sil(
        [(0.3, 0.1), (0.7, 0.1), (0.82, 0.42), (0.18, 0.42)],
        [(0.46, 0.42), (0.54, 0.42), (0.54, 0.8), (0.46, 0.8)],
        [(0.28, 0.8), (0.72, 0.8), (0.72, 0.92), (0.28, 0.92)],
    ),
    "lock": _sil(
        [(0.2, 0.42), (0.8, 0.42), (0.8, 0.92), (0.2, 0.92)],
        [(0.3, 0.12), (0.7, 0.12), (0.7, 0.46), (0.58, 0.46), (0.58, 0.26),
         (0.42, 0.26), (0.42, 0.46), (0.3, 0.46)],
    ),
    "mug": _sil(
        [(0.18, 0.2), (0.7, 0.2), (0.7, 0.85), (0.18, 0.85)],
        [(0.7, 0.32), (0.9, 0.32), (0.9, 0.62), (0.7, 0.62), (0.7, 0.54),
         (0.82, 0.54), (0.82, 0.4), (0.7, 0.4)],
    ),
    "kite": _sil(
        [(0.5, 0.05), (0.85, 0.4), (0.5, 0.75), (0.15, 0.4)],
        [(0.5, 0.75), (0.56, 0.83), (0.46, 0.88), (0.56, 0.95)],
    ),
}


def _figure(head, torso, limbs):
    """Stick-silhouette person: head circle, torso quad, limb segments."""
    polys = [circle(head[0], head[1], head[2], n=16)]
    polys.append(Polygon(torso))
    for (x1, y1, x2, y2, w) in limbs:
        polys.append(thick_segment(x1, y1, x2, y2, w))
    return polys


PICTOGRAMS = {
    "person": _figure(
        (0.5, 0.16, 0.1),
        [(0.42, 0.28), (0.58, 0.28), (0.56, 0.6), (0.44, 0.6)],
        [(0.44, 0.32, 0.26, 0.52, 0.07), (0.56, 0.32, 0.74, 0.52, 0.07),
         (0.47, 0.6, 0.4, 0.92, 0.08), (0.53, 0.6, 0.6, 0.92, 0.08)],
    ),
    "walker": _figure(
        (0.52, 0.15, 0.1),
        [(0.45, 0.27), (0.6, 0.27), (0.57, 0.58), (0.46, 0.58)],
        [(0.47, 0.32, 0.3, 0.46, 0.07), (0.58, 0.32, 0.72, 0.5, 0.07),
         (0.49, 0.58, 0.3, 0.9, 0.08), (0.54, 0.58, 0.68, 0.9, 0.08)],
    ),
    "waver": _figure(
        (0.5, 0.18, 0.1),
        [(0.42, 0.3), (0.58, 0.3), (0.56, 0.62), (0.44, 0.62)],
        [(0.44, 0.34, 0.24, 0.18, 0.07), (0.56, 0.34, 0.74, 0.52, 0.07),
         (0.47, 0.62, 0.4, 0.94, 0.08), (0.53, 0.62, 0.6, 0.94, 0.08)],
    ),
    "pointer": _figure(
        (0.46, 0.16, 0.1),
        [(0.38, 0.28), (0.54, 0.28), (0.52, 0.6), (0.4, 0.6)],
        [(0.52, 0.33, 0.88, 0.3, 0.07), (0.4, 0.33, 0.3, 0.54, 0.07),
         (0.43, 0.6, 0.36, 0.92, 0.08), (0.49, 0.6, 0.56, 0.92, 0.08)],
    ),
    "runner": _figure(
        (0.58, 0.16, 0.1),
        [(0.5, 0.28), (0.66, 0.3), (0.58, 0.58), (0.47, 0.56)],
        [(0.52, 0.33, 0.32, 0.26, 0.07), (0.62, 0.35, 0.82, 0.44, 0.07),
         (0.5, 0.57, 0.24, 0.68, 0.08), (0.56, 0.58, 0.72, 0.92, 0.08)],
    ),
    "sitter": _figure(
        (0.42, 0.2, 0.1),
        [(0.34, 0.32), (0.5, 0.32), (0.5, 0.62), (0.36, 0.62)],
        [(0.48, 0.36, 0.66, 0.46, 0.07), (0.38, 0.36, 0.3, 0.52, 0.07),
         (0.42, 0.62, 0.68, 0.64, 0.08), (0.66, 0.64, 0.66, 0.92, 0.08)],
    ),
    "climber": _figure(
        (0.45, 0.2, 0.1),
        [(0.38, 0.3), (0.54, 0.32), (0.5, 0.62), (0.38, 0.6)],
        [(0.42, 0.33, 0.3, 0.08, 0.07), (0.52, 0.36, 0.68, 0.16, 0.07),
         (0.42, 0.61, 0.3, 0.86, 0.08), (0.5, 0.62, 0.64, 0.8, 0.08)],
    ),
    "carrier": _figure(
        (0.48, 0.2, 0.1),
        [(0.4, 0.32), (0.56, 0.32), (0.54, 0.62), (0.42, 0.62)],
        [(0.42, 0.36, 0.24, 0.3, 0.07), (0.56, 0.36, 0.76, 0.3, 0.07),
         (0.45, 0.62, 0.38, 0.92, 0.08), (0.51, 0.62, 0.58, 0.92, 0.08),
         (0.2, 0.22, 0.34, 0.32, 0.1)],
    ),
    "kicker": _figure(
        (0.46, 0.16, 0.1),
        [(0.4, 0.28), (0.55, 0.28), (0.52, 0.56), (0.42, 0.56)],
        [(0.42, 0.32, 0.28, 0.5, 0.07), (0.54, 0.32, 0.68, 0.44, 0.07),
         (0.45, 0.56, 0.4, 0.9, 0.08), (0.51, 0.56, 0.82, 0.7, 0.08)],
    ),
    "jumper": _figure(
        (0.5, 0.14, 0.1),
        [(0.43, 0.26), (0.58, 0.26), (0.56, 0.54), (0.44, 0.54)],
        [(0.45, 0.29, 0.24, 0.12, 0.07), (0.56, 0.29, 0.78, 0.12, 0.07),
         (0.46, 0.54, 0.3, 0.74, 0.08), (0.54, 0.54, 0.7, 0.74, 0.08)],
    ),
    "bower": _figure(
        (0.68, 0.3, 0.09),
        [(0.42, 0.36), (0.64, 0.32), (0.56, 0.58), (0.42, 0.54)],
        [(0.6, 0.36, 0.78, 0.52, 0.07), (0.48, 0.38, 0.62, 0.56, 0.07),
         (0.46, 0.56, 0.4, 0.9, 0.08), (0.52, 0.58, 0.58, 0.9, 0.08)],
    ),
    "stander-flag": _figure(
        (0.42, 0.16, 0.1),
        [(0.34, 0.28), (0.5, 0.28), (0.48, 0.6), (0.36, 0.6)],
        [(0.48, 0.32, 0.66, 0.2, 0.06), (0.38, 0.33, 0.28, 0.54, 0.07),
         (0.39, 0.6, 0.34, 0.92, 0.08), (0.45, 0.6, 0.52, 0.92, 0.08),
         (0.66, 0.06, 0.66, 0.22, 0.04)],
    ),
}

PICTOGRAMS["stander-flag"].append(Polygon([(0.66, 0.06), (0.88, 0.12), (0.66, 0.2)]))

# Symmetric entries to avoid when an asymmetric variant is requested.
ASYM_ICONS = [k for k in ICONS if k not in ("house", "tree", "envelope", "heart", "lamp", "lock")]
ASYM_PICTOGRAMS = [k for k in PICTOGRAMS if k != "person"]
