"""Mirror classification, mirror-scene synthesis, and frieze/wallpaper
pattern generation.

Patterns are built by replicating an asymmetric motif's vector scene under
each group's coset operations over a lattice. Invariance checks re-render
the transformed scene and compare bitmaps on an interior window, so checks
stay exact for 120-degree operations that have no pixel-grid permutation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .canvas import Canvas, apply_d4, bitmap_distance
from .errors import GenerationExhausted, InvalidSpec
from .geometry import D4Element
from .motifs import MotifSpec, is_asymmetric, motif_scene
from .raster import Scene
from .rng import SeededRng

PATTERN_TOLERANCE = 0.01       # strip/patch invariance threshold
MIRROR_TOLERANCE = 0.01        # default classify_mirror tolerance
SYNTH_BUDGET = 200


class InvalidMotif(InvalidSpec):
    """Pattern generators require an asymmetric motif."""


class MirrorClass(enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"
    MAIN_DIAGONAL = "main-diagonal"
    ANTI_DIAGONAL = "anti-diagonal"
    VERTICAL_HORIZONTAL = "vertical+horizontal"
    NONE = "none"


_AXIS_OPS = {
    "vertical": D4Element.MIRROR_V,
    "horizontal": D4Element.MIRROR_H,
    "main": D4Element.MIRROR_MAIN_DIAG,
    "anti": D4Element.MIRROR_ANTI_DIAG,
}


def mirror_distances(c: Canvas) -> dict:
    """Distance of the canvas to each of its four mirror images."""
    return {axis: bitmap_distance(c, apply_d4(op, c))
            for axis, op in _AXIS_OPS.items()}


def classify_mirror(c: Canvas, tol: float = MIRROR_TOLERANCE) -> MirrorClass:
    """Strongest mirror label consistent with the bitmap at tolerance tol."""
    d = mirror_distances(c)
    if d["vertical"] <= tol and d["horizontal"] <= tol:
        return MirrorClass.VERTICAL_HORIZONTAL
    passing = [axis for axis in ("vertical", "horizontal", "main", "anti")
               if d[axis] <= tol]
    if not passing:
        return MirrorClass.NONE
    best = min(passing, key=lambda axis: d[axis])
    return {"vertical": MirrorClass.VERTICAL,
            "horizontal": MirrorClass.HORIZONTAL,
            "main": MirrorClass.MAIN_DIAGONAL,
            "anti": MirrorClass.ANTI_DIAGONAL}[best]


MIN_PATTERN_INK = 0.25
MIN_PATTERN_ASYMMETRY = 0.08


def motif_asymmetry(spec: MotifSpec, size: int = 64) -> float:
    """Smallest distance from the tile to any nontrivial D4 image of it."""
    from .motifs import render_motif
    tile = render_motif(spec, size)
    return min(bitmap_distance(tile, apply_d4(op, tile))
               for op in D4Element if op is not D4Element.IDENTITY)


def crystallographic_asymmetry(spec: MotifSpec, size: int = 64) -> float:
    """Smallest tile distance to any rotation (30-degree steps) or rotated
    reflection of itself.

    D4 asymmetry is not enough for pattern motifs: a crescent, say, is
    mirror-symmetric about an oblique axis, so a patch built from it nearly
    coincides with its own mirror image once a group rotation realigns the
    copies. Group ops only involve multiples of 30 degrees, so that grid of
    angles covers every alignment a wrong generator could produce.
    """
    scene = motif_scene(spec).scaled(float(size))
    base = scene.render(size, size)
    c = size / 2.0
    best = math.inf
    for k in range(12):
        ang = k * math.pi / 6
        ca, sa = math.cos(ang), math.sin(ang)
        for refl in (False, True):
            if k == 0 and not refl:
                continue

            def fn(p, ca=ca, sa=sa, refl=refl):
                x, y = p[0] - c, p[1] - c
                if refl:
                    x = -x
                return (c + ca * x - sa * y, c + sa * x + ca * y)

            img = Scene(items=[it.transformed(fn) for it in scene.items],
                        background=scene.background).render(size, size)
            best = min(best, bitmap_distance(base, img))
    return best


def sample_pattern_motif(rng: SeededRng, weights=None) -> MotifSpec:
    """Asymmetric motif with enough ink and asymmetry that a wrong symmetry
    generator shifts the strip/patch mean pixel difference past 1%."""
    from .motifs import MotifWeights, render_motif, sample_motif
    if weights is None:
        weights = MotifWeights()
    for attempt in range(SYNTH_BUDGET):
        spec = sample_motif(weights, rng.split(f"pattern:{attempt}"),
                            require_asymmetric=True)
        tile = render_motif(spec, 64)
        if ((tile.pixels[..., 3] > 0).mean() >= MIN_PATTERN_INK
                and crystallographic_asymmetry(spec) >= MIN_PATTERN_ASYMMETRY):
            return spec
    raise GenerationExhausted("no high-ink asymmetric motif found")


def _mirror_point_fn(axis: str, size: float):
    if axis == "vertical":
        return lambda p: (size - p[0], p[1])
    if axis == "horizontal":
        return lambda p: (p[0], size - p[1])
    if axis == "main":
        return lambda p: (p[1], p[0])
    return lambda p: (size - p[1], size - p[0])


_CLASS_AXES = {
    MirrorClass.VERTICAL: ["vertical"],
    MirrorClass.HORIZONTAL: ["horizontal"],
    MirrorClass.MAIN_DIAGONAL: ["main"],
    MirrorClass.ANTI_DIAGONAL: ["anti"],
    MirrorClass.VERTICAL_HORIZONTAL: ["vertical", "horizontal"],
    MirrorClass.NONE: [],
}


def synthesize_mirror_scene(target: MirrorClass, motifs: list,
                            rng: SeededRng, size: int = 256) -> Canvas:
    """Compose motif tiles so the result classifies exactly as ``target``."""
    if not motifs:
        raise InvalidSpec("at least one motif required")
    axes = _CLASS_AXES[target]
    for attempt in range(SYNTH_BUDGET):
        sub = rng.split(f"mirror:{attempt}")
        scene = Scene(items=[], background=(255, 255, 255, 255))
        n_place = sub.randint(2, 3)
        for k in range(n_place):
            spec = motifs[sub.randint(0, len(motifs) - 1)]
            tile = motif_scene(spec)
            s = sub.uniform(0.18, 0.3) * size
            # Keep placements strictly inside one fundamental half/quadrant
            # so mirrored copies cannot overlap the originals.
            if target is MirrorClass.VERTICAL_HORIZONTAL:
                x = sub.uniform(0.04, 0.46 - s / size) * size
                y = sub.uniform(0.04, 0.46 - s / size) * size
            elif target in (MirrorClass.VERTICAL, MirrorClass.MAIN_DIAGONAL,
                            MirrorClass.ANTI_DIAGONAL):
                x = sub.uniform(0.04, 0.46 - s / size) * size
                y = sub.uniform(0.04, 0.92 - s / size) * size
                if target is MirrorClass.MAIN_DIAGONAL:
                    x, y = min(x, y * 0.9), max(y, x * 1.1 + 0.05 * size)
                if target is MirrorClass.ANTI_DIAGONAL:
                    y = sub.uniform(0.04, 0.9 - x / size - s / size) * size
            elif target is MirrorClass.HORIZONTAL:
                x = sub.uniform(0.04, 0.92 - s / size) * size
                y = sub.uniform(0.04, 0.46 - s / size) * size
            else:
                x = sub.uniform(0.04, 0.92 - s / size) * size
                y = sub.uniform(0.04, 0.92 - s / size) * size
            scene.extend(tile.scaled(s).translated(x, y))
        full = Scene(items=list(scene.items), background=scene.background)
        for axis in axes:
            fn = _mirror_point_fn(axis, float(size))
            mirrored = Scene(items=[it.transformed(fn) for it in full.items],
                             background=full.background)
            full.extend(mirrored)
        out = full.render(size, size)
        if classify_mirror(out, MIRROR_TOLERANCE) is target:
            return out
    raise GenerationExhausted(f"could not synthesize {target.value} scene")


# --------------------------------------------------------------------------
# Frieze groups
# --------------------------------------------------------------------------
#
# Coset operations relative to the translation lattice, for a strip with
# period p and centerline y = 0. Each op maps (x, y) -> (a + ex*x, sy*y)
# with ex, sy in {+1, -1} and a in {0, p/2}.

@dataclass(frozen=True)
class _StripOp:
    a_half: int   # translation in units of p/2
    ex: int       # x sign
    sy: int       # y sign

    def fn(self, period: float):
        a = self.a_half * period / 2.0
        return lambda p: (a + self.ex * p[0], self.sy * p[1])


_I = _StripOp(0, 1, 1)
_G = _StripOp(1, 1, -1)        # glide reflection
_V = _StripOp(0, -1, 1)        # vertical mirror at x=0
_H = _StripOp(0, 1, -1)        # horizontal mirror (centerline)
_R = _StripOp(0, -1, -1)       # half-turn at origin
_R4 = _StripOp(1, -1, -1)      # half-turn at (p/4, 0)
_V4 = _StripOp(1, -1, 1)       # vertical mirror at x=p/4


class FriezeGroup(enum.Enum):
    STEP = "step"
    SIDLE = "sidle"
    JUMP = "jump"
    SPINNING_HOP = "spinning-hop"
    SPINNING_SIDLE = "spinning-sidle"
    SPINNING_JUMP = "spinning-jump"


FRIEZE_OPS = {
    FriezeGroup.STEP: (_I, _G),
    FriezeGroup.SIDLE: (_I, _V),
    FriezeGroup.JUMP: (_I, _H),
    FriezeGroup.SPINNING_HOP: (_I, _R),
    FriezeGroup.SPINNING_SIDLE: (_I, _G, _V, _R4),
    FriezeGroup.SPINNING_JUMP: (_I, _V, _H, _R),
}

# Which of the battery generators {V, H, R, G} leave each group's strip
# invariant (translation T always does). All six signatures are distinct,
# which is what makes odd-one-out answers unique.
FRIEZE_SIGNATURES = {
    FriezeGroup.STEP: frozenset({"G"}),
    FriezeGroup.SIDLE: frozenset({"V"}),
    FriezeGroup.JUMP: frozenset({"H"}),
    FriezeGroup.SPINNING_HOP: frozenset({"R"}),
    FriezeGroup.SPINNING_SIDLE: frozenset({"V", "R", "G"}),
    FriezeGroup.SPINNING_JUMP: frozenset({"V", "H", "R"}),
}

# The paper's Conway-style names alongside IUC symbols, recorded in
# metadata without asserting a canonical mapping.
FRIEZE_IUC = {
    FriezeGroup.STEP: "p11g",
    FriezeGroup.SIDLE: "pm11",
    FriezeGroup.JUMP: "p1m1",
    FriezeGroup.SPINNING_HOP: "p211",
    FriezeGroup.SPINNING_SIDLE: "p2mg",
    FriezeGroup.SPINNING_JUMP: "p2mm",
}


@dataclass
class FriezeStrip:
    canvas: Canvas
    scene: Scene
    group: FriezeGroup
    period: float
    centerline: float   # y of the strip axis in pixels
    height: int
    width: int


def _build_frieze_scene(group: FriezeGroup, motif: MotifSpec, repeats: int,
                        period: float, height: int, width: int) -> Scene:
    cy = height / 2.0
    tile = motif_scene(motif)
    # Fundamental domain: x in (0, p/2), y in (-h/2, 0); inset so no two
    # images overlap and compositing order cannot break symmetry.
    s = min(period / 2.0, height / 2.0) * 0.88
    local = tile.scaled(s).translated(period * 0.25 - s / 2.0,
                                      -height * 0.25 - s / 2.0)
    scene = Scene(items=[], background=(255, 255, 255, 255))
    ops = FRIEZE_OPS[group]
    n_lattice = int(math.ceil(width / period)) + 2
    for op in ops:
        fn = op.fn(period)
        placed = Scene(items=[it.transformed(fn) for it in local.items])
        for k in range(-1, n_lattice):
            dx = k * period
            scene.extend(Scene(
                items=[it.transformed(lambda p, d=dx: (p[0] + d, p[1] + cy))
                       for it in placed.items]))
    return scene


def generate_frieze(group: FriezeGroup, motif: MotifSpec,
                    repeats: int = 5, height: int = 96) -> FriezeStrip:
    if repeats < 3:
        raise InvalidSpec("need at least 3 repeats")
    if not is_asymmetric(motif):
        raise InvalidMotif("frieze motif must be asymmetric")
    period = float(2 * height)
    width = int(period * repeats)
    scene = _build_frieze_scene(group, motif, repeats, period, height, width)
    return FriezeStrip(canvas=scene.render(width, height), scene=scene,
                       group=group, period=period, centerline=height / 2.0,
                       height=height, width=width)


def _strip_op_fn(which: str, strip: FriezeStrip):
    p, cy, w = strip.period, strip.centerline, strip.width
    # Conjugate the origin-anchored op into strip coordinates. The x anchor
    # sits at a period boundary; the group's own axes live at multiples of
    # p/4 so battery ops are tested at the canonical positions.
    ax = math.floor(w / 2.0 / p) * p
    if which == "T":
        return lambda q: (q[0] + p, q[1])
    if which == "V":
        return lambda q: (2 * ax - q[0], q[1])
    if which == "H":
        return lambda q: (q[0], 2 * cy - q[1])
    if which == "R":
        return lambda q: (2 * ax - q[0], 2 * cy - q[1])
    if which == "G":
        return lambda q: (q[0] + p / 2.0, 2 * cy - q[1])
    raise ValueError(which)


def frieze_check(strip: FriezeStrip, which: str,
                 scan: bool = True) -> float:
    """Distance between the strip and its image under a battery generator.

    The op image is rendered once at the canonical anchor; for ops whose
    axis/center may sit anywhere along the strip (V, R, G) the comparison
    additionally scans x shifts in eighth-period steps and reports the
    minimum. Strip ends (one period each side) are excluded.
    """
    x0 = int(strip.period)
    x1 = strip.width - x0
    base = strip.canvas.pixels[:, x0:x1].astype(np.int16)
    fn = _strip_op_fn(which, strip)
    moved = Scene(items=[it.transformed(fn) for it in strip.scene.items],
                  background=(255, 255, 255, 255)
                  ).render(strip.width, strip.height).pixels.astype(np.int16)

    def dist(dx: int) -> float:
        return float(np.abs(base - moved[:, x0 - dx:x1 - dx]).mean()) / 255.0

    best = dist(0)
    # Only V and R have a free x anchor; shifting T/H/G in x would alias
    # them into different group elements (G shifted by p/2 becomes H).
    if not scan or which not in ("V", "R") or best <= 1e-4:
        return best
    step = max(1, int(strip.period) // 8)
    for dx in range(step, int(strip.period), step):
        best = min(best, dist(dx))
        if best <= 1e-4:
            break
    return best


def frieze_signature(strip: FriezeStrip, tol: float = PATTERN_TOLERANCE) -> frozenset:
    """Which battery generators hold for the strip (T excluded, always holds)."""
    return frozenset(w for w in ("V", "H", "R", "G")
                     if frieze_check(strip, w) <= tol)


def frieze_odd_one_out(majority: FriezeGroup, odd: FriezeGroup,
                       motif: MotifSpec, rng: SeededRng,
                       repeats: int = 5, height: int = 96):
    """Four strips sharing motif and spacing; one from the odd group."""
    if majority is odd:
        raise InvalidSpec("majority and odd group must differ")
    odd_index = rng.randint(0, 3)
    strips = []
    for i in range(4):
        group = odd if i == odd_index else majority
        strips.append(generate_frieze(group, motif, repeats, height))
    return strips, odd_index


# --------------------------------------------------------------------------
# Wallpaper groups
# --------------------------------------------------------------------------
#
# Each coset op is (M, t): fractional coordinates map u' = M @ u + t
# (mod the lattice). M entries are integers in the lattice basis; t has
# halves/thirds. Lattice type picks the pixel-space basis.

def _op(m00, m01, m10, m11, tx=0.0, ty=0.0):
    return ((m00, m01, m10, m11), (tx, ty))


_ID = _op(1, 0, 0, 1)
_R180 = _op(-1, 0, 0, -1)
_MX = _op(-1, 0, 0, 1)          # mirror u -> -u
_MY = _op(1, 0, 0, -1)
_R90 = _op(0, -1, 1, 0)
_R270 = _op(0, 1, -1, 0)
_MDIAG = _op(0, 1, 1, 0)
_MANTI = _op(0, -1, -1, 0)
_R120 = _op(0, -1, 1, -1)       # hex basis: (u,v) -> (-v, u-v)
_R240 = _op(-1, 1, -1, 0)
_R60 = _op(1, -1, 1, 0)
_R300 = _op(0, 1, -1, 1)
# Hex-basis mirrors.
_HM1 = _op(0, 1, 1, 0)          # swap axes
_HM2 = _op(1, -1, 0, -1)
_HM3 = _op(-1, 0, -1, 1)
_HM4 = _op(0, -1, -1, 0)
_HM5 = _op(-1, 1, 0, 1)
_HM6 = _op(1, 0, 1, -1)


def _shift(op, tx, ty):
    m, t = op
    return (m, (t[0] + tx, t[1] + ty))


class WallpaperGroup(enum.Enum):
    P1 = "p1"
    P2 = "p2"
    PM = "pm"
    PG = "pg"
    CM = "cm"
    PMM = "pmm"
    PMG = "pmg"
    PGG = "pgg"
    CMM = "cmm"
    P4 = "p4"
    P4M = "p4m"
    P4G = "p4g"
    P3 = "p3"
    P3M1 = "p3m1"
    P31M = "p31m"
    P6 = "p6"
    P6M = "p6m"


_SQ = "square"
_HX = "hex"

WALLPAPER_LATTICE = {
    WallpaperGroup.P1: _SQ, WallpaperGroup.P2: _SQ, WallpaperGroup.PM: _SQ,
    WallpaperGroup.PG: _SQ, WallpaperGroup.CM: _SQ, WallpaperGroup.PMM: _SQ,
    WallpaperGroup.PMG: _SQ, WallpaperGroup.PGG: _SQ, WallpaperGroup.CMM: _SQ,
    WallpaperGroup.P4: _SQ, WallpaperGroup.P4M: _SQ, WallpaperGroup.P4G: _SQ,
    WallpaperGroup.P3: _HX, WallpaperGroup.P3M1: _HX, WallpaperGroup.P31M: _HX,
    WallpaperGroup.P6: _HX, WallpaperGroup.P6M: _HX,
}

WALLPAPER_OPS = {
    WallpaperGroup.P1: (_ID,),
    WallpaperGroup.P2: (_ID, _R180),
    WallpaperGroup.PM: (_ID, _MX),
    WallpaperGroup.PG: (_ID, _shift(_MX, 0.0, 0.5)),
    WallpaperGroup.CM: (_ID, _MX, _shift(_ID, 0.5, 0.5), _shift(_MX, 0.5, 0.5)),
    WallpaperGroup.PMM: (_ID, _MX, _MY, _R180),
    WallpaperGroup.PMG: (_ID, _R180, _shift(_MY, 0.5, 0.0), _shift(_MX, 0.5, 0.0)),
    WallpaperGroup.PGG: (_ID, _R180, _shift(_MY, 0.5, 0.5), _shift(_MX, 0.5, 0.5)),
    WallpaperGroup.CMM: (_ID, _MX, _MY, _R180,
                         _shift(_ID, 0.5, 0.5), _shift(_MX, 0.5, 0.5),
                         _shift(_MY, 0.5, 0.5), _shift(_R180, 0.5, 0.5)),
    WallpaperGroup.P4: (_ID, _R90, _R180, _R270),
    WallpaperGroup.P4M: (_ID, _R90, _R180, _R270, _MX, _MY, _MDIAG, _MANTI),
    WallpaperGroup.P4G: (_ID, _R90, _R180, _R270,
                         _shift(_MX, 0.5, 0.5), _shift(_MY, 0.5, 0.5),
                         _shift(_MDIAG, 0.5, 0.5), _shift(_MANTI, 0.5, 0.5)),
    WallpaperGroup.P3: (_ID, _R120, _R240),
    WallpaperGroup.P3M1: (_ID, _R120, _R240, _HM4, _HM5, _HM6),
    WallpaperGroup.P31M: (_ID, _R120, _R240, _HM1, _HM2, _HM3),
    WallpaperGroup.P6: (_ID, _R60, _R120, _R180, _R240, _R300),
    WallpaperGroup.P6M: (_ID, _R60, _R120, _R180, _R240, _R300,
                         _HM1, _HM2, _HM3, _HM4, _HM5, _HM6),
}


def _lattice_basis(kind: str, cell: float):
    if kind == _SQ:
        return np.array([[cell, 0.0], [0.0, cell]])
    # hex basis: a = (1, 0), b = (1/2, sqrt(3)/2), scaled to cell pixels
    return np.array([[cell, cell * 0.5], [0.0, cell * math.sqrt(3) / 2]])


def _frac_fn(op, basis, origin):
    """Pixel-space point map for a fractional-coordinate coset op."""
    m, t = op
    mat = np.array([[m[0], m[1]], [m[2], m[3]]], dtype=float)
    inv = np.linalg.inv(basis)
    full = basis @ mat @ inv
    shift = basis @ np.array(t, dtype=float)

    def fn(p):
        q = full @ np.array([p[0] - origin[0], p[1] - origin[1]]) + shift
        return (q[0] + origin[0], q[1] + origin[1])
    return fn


@dataclass
class WallpaperPatch:
    canvas: Canvas
    scene: Scene
    group: WallpaperGroup
    cell: float
    origin: tuple
    size: int

    @property
    def basis(self):
        return _lattice_basis(WALLPAPER_LATTICE[self.group], self.cell)


def _min_image_separation(group: WallpaperGroup, basis, anchor) -> float:
    """Smallest distance between distinct op/lattice images of the anchor."""
    centers = []
    for op in WALLPAPER_OPS[group]:
        m, t = op
        mat = np.array([[m[0], m[1]], [m[2], m[3]]], dtype=float)
        f = mat @ anchor + np.array(t)
        for du in (-1, 0, 1):
            for dv in (-1, 0, 1):
                centers.append(basis @ (f + np.array([du, dv])))
    best = math.inf
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            d = float(np.linalg.norm(centers[i] - centers[j]))
            if d > 1e-6:
                best = min(best, d)
    return best


_ANCHOR_CACHE: dict = {}


def _best_anchor(group: WallpaperGroup):
    """Fractional anchor maximizing image separation (unit-cell units).

    A fixed generic anchor can fall near a mirror axis or rotation center
    of some group, collapsing the usable motif size; a coarse deterministic
    grid search keeps every group's motifs comparably large.
    """
    if group in _ANCHOR_CACHE:
        return _ANCHOR_CACHE[group]
    basis = _lattice_basis(WALLPAPER_LATTICE[group], 1.0)
    best_anchor, best_sep = None, -1.0
    for iu in range(1, 16):
        for iv in range(1, 16):
            a = np.array([iu / 16 + 0.0131, iv / 16 + 0.0073])
            sep = _min_image_separation(group, basis, a)
            if sep > best_sep:
                best_sep, best_anchor = sep, a
    _ANCHOR_CACHE[group] = (best_anchor, best_sep)
    return _ANCHOR_CACHE[group]


def generate_wallpaper(group: WallpaperGroup, motif: MotifSpec,
                       size: int = 384, cell: float | None = None) -> WallpaperPatch:
    if not is_asymmetric(motif):
        raise InvalidMotif("wallpaper motif must be asymmetric")
    if cell is None:
        cell = size / 3.0
    basis = _lattice_basis(WALLPAPER_LATTICE[group], cell)
    # Anchor the coset ops at the window center so op images cover the
    # interior check window rather than mapping it off-canvas.
    origin = (size / 2.0, size / 2.0)
    anchor, sep_frac = _best_anchor(group)
    s = max(sep_frac * cell * 0.6, 4.0)
    tile = motif_scene(motif)
    anchor_px = np.array(origin) + basis @ anchor
    local = tile.scaled(s).translated(anchor_px[0] - s / 2, anchor_px[1] - s / 2)
    scene = Scene(items=[], background=(255, 255, 255, 255))
    # Enough lattice copies to cover the crop window plus a margin.
    reach = int(math.ceil(size / cell)) + 2
    inv = np.linalg.inv(basis)
    for op in WALLPAPER_OPS[group]:
        fn = _frac_fn(op, basis, origin)
        placed = Scene(items=[it.transformed(fn) for it in local.items])
        op_center = np.array(fn((float(anchor_px[0]), float(anchor_px[1]))))
        for du in range(-reach, reach + 1):
            for dv in range(-reach, reach + 1):
                t = basis @ np.array([du, dv], dtype=float)
                cx = t[0] + float(op_center[0])
                if cx < -cell * 1.5 or cx > size + cell * 1.5:
                    continue
                cy = t[1] + float(op_center[1])
                if cy < -cell * 1.5 or cy > size + cell * 1.5:
                    continue
                scene.extend(Scene(
                    items=[it.transformed(lambda p, a=t[0], b=t[1]:
                                          (p[0] + a, p[1] + b))
                           for it in placed.items]))
    return WallpaperPatch(canvas=scene.render(size, size), scene=scene,
                          group=group, cell=cell, origin=origin, size=size)


def wallpaper_check(patch: WallpaperPatch, op) -> float:
    """Interior bitmap distance between the patch and its image under op.

    The op image is rendered once anchored at the origin. Moving the anchor
    to a only translates the image by (I - M)a, so the scan over candidate
    symmetry-element positions is done with integer pixel shifts of that one
    render (deltas reduced modulo the lattice), not further renders.
    """
    margin = int(patch.cell)
    lo, hi = margin, patch.size - margin
    if hi <= lo:
        lo, hi = 0, patch.size
    base = patch.canvas.pixels[lo:hi, lo:hi].astype(np.int16)
    basis = patch.basis
    fn = _frac_fn(op, basis, patch.origin)
    moved = Scene(items=[it.transformed(fn) for it in patch.scene.items],
                  background=(255, 255, 255, 255)
                  ).render(patch.size, patch.size).pixels.astype(np.int16)

    def dist(dx: int, dy: int) -> float:
        if lo - dy < 0 or hi - dy > patch.size or lo - dx < 0 or hi - dx > patch.size:
            return math.inf
        return float(np.abs(base - moved[lo - dy:hi - dy, lo - dx:hi - dx]).mean()) / 255.0

    best = dist(0, 0)
    m = op[0]
    if best <= 1e-4 or (m == (1, 0, 0, 1) and op[1] != (0.0, 0.0)):
        # Pure non-lattice translations have a fixed delta: no scan.
        return best
    mat = np.array([[m[0], m[1]], [m[2], m[3]]], dtype=float)
    inv = np.linalg.inv(basis)
    pix_m = basis @ mat @ inv
    eye = np.eye(2)
    seen = {(0, 0)}
    for au in np.arange(0.0, 1.0, 0.125):
        for av in np.arange(0.0, 1.0, 0.125):
            delta = (eye - pix_m) @ (basis @ np.array([au, av]))
            # Reduce modulo the lattice to the near-zero representative.
            f = inv @ delta
            f -= np.round(f)
            d_pix = basis @ f
            key = (int(round(d_pix[0])), int(round(d_pix[1])))
            if key in seen:
                continue
            seen.add(key)
            best = min(best, dist(*key))
            if best <= 1e-4:
                return best
    return best


def wallpaper_passes(patch: WallpaperPatch, group: WallpaperGroup,
                     tol: float = PATTERN_TOLERANCE) -> bool:
    """True if the patch is invariant under every coset op of ``group``."""
    return all(wallpaper_check(patch, op) <= tol
               for op in WALLPAPER_OPS[group])


def _op_class(op):
    """Geometric class of a coset op, independent of the anchor position.

    Anchor scanning makes every same-angle rotation equivalent and every
    mirror equivalent up to shifts along its normal, so discrimination
    between groups has to compare these classes rather than raw (M, t)
    pairs: rotations by angle, mirrors by (axis direction, glide or not),
    pure translations by their fractional offset.
    """
    m, t = op
    mat = np.array([[m[0], m[1]], [m[2], m[3]]], dtype=float)
    det = round(float(np.linalg.det(mat)))
    if det == 1:
        if m == (1, 0, 0, 1):
            frac = (round(t[0] % 1.0, 6) % 1.0, round(t[1] % 1.0, 6) % 1.0)
            if frac == (0.0, 0.0):
                return ("identity",)
            return ("trans", frac)
        return ("rot", int(round(mat.trace())))
    # Reflection: primitive +1 eigenvector in lattice coordinates.
    k = mat - np.eye(2)
    if abs(k[0, 0]) > 1e-9 or abs(k[0, 1]) > 1e-9:
        axis = (-k[0, 1], k[0, 0])
    else:
        axis = (-k[1, 1], k[1, 0])
    g = math.gcd(int(round(axis[0])), int(round(axis[1])))
    axis = (int(round(axis[0])) // g, int(round(axis[1])) // g)
    if axis[0] < 0 or (axis[0] == 0 and axis[1] < 0):
        axis = (-axis[0], -axis[1])
    # Glide component: projection of t onto the axis, reduced modulo the
    # projections of lattice translations.
    proj = (np.eye(2) + mat) / 2.0
    best = math.inf
    for zu in range(-2, 3):
        for zv in range(-2, 3):
            gl = proj @ (np.array(t, dtype=float) + np.array([zu, zv]))
            best = min(best, float(np.linalg.norm(gl)))
    return ("mirror", axis, best < 1e-9)


def wallpaper_op_classes(group: WallpaperGroup) -> frozenset:
    return frozenset(_op_class(op) for op in WALLPAPER_OPS[group]
                     if _op_class(op) != ("identity",))


def wallpaper_distinguishers(have: WallpaperGroup, other: WallpaperGroup) -> list:
    """Coset ops of ``other`` that are geometrically absent from ``have``.

    Only meaningful for groups on the same lattice; may be empty when
    ``other``'s symmetries are a subset of ``have``'s (distinguish in the
    opposite direction instead).
    """
    if WALLPAPER_LATTICE[have] != WALLPAPER_LATTICE[other]:
        raise InvalidSpec("distinguishers require a common lattice")
    have_classes = wallpaper_op_classes(have)
    return [op for op in WALLPAPER_OPS[other]
            if _op_class(op) not in have_classes
            and _op_class(op) != ("identity",)]
