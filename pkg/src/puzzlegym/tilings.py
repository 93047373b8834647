"""Generators for the five tiling families.

Each generator lays out exact per-cell polygons inside the margin box of a
width×height canvas, pools vertices by quantized rounding, and tags cells
with lattice coordinates. Dual graphs connect cells by shared boundary
segments, optionally by shared vertices (used by the circle packing).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import InvalidSpec
from .geometry import Polygon

# Quantization for vertex pooling, as a fraction of min(width, height).
QUANT_FRAC = 1e-4

# Published grid-size bounds per family (drive the difficulty axis).
GRID_BOUNDS = {
    "square": (2, 12),
    "triangular": (2, 10),
    "hexagonal": (2, 8),
    "rhombille": (2, 6),
    "circles": (2, 8),
}

CIRCLE_FIDELITY = 24  # vertices per circle cell


class TilingKind(enum.Enum):
    SQUARE = "square"
    TRIANGULAR = "triangular"
    HEXAGONAL = "hexagonal"
    RHOMBILLE = "rhombille"
    CIRCLES = "circles"


@dataclass(frozen=True)
class TilingSpec:
    kind: TilingKind
    width: int
    height: int
    rows: int
    cols: int
    margin_frac: float = 0.05

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise InvalidSpec("canvas dimensions must be positive")
        if not (0 <= self.margin_frac < 0.4):
            raise InvalidSpec("margin_frac must lie in [0, 0.4)")
        lo, hi = GRID_BOUNDS[self.kind.value]
        if not (lo <= self.rows <= hi and lo <= self.cols <= hi):
            raise InvalidSpec(
                f"{self.kind.value} grid dims must be within [{lo}, {hi}]")


@dataclass(frozen=True)
class Cell:
    vertex_indices: tuple
    kind: str
    grid_coord: tuple


@dataclass
class TilingPatch:
    vertices: list          # pooled (x, y) points
    cells: list             # list[Cell]
    quant: float            # pooling step used

    def cell_polygon(self, index: int) -> Polygon:
        cell = self.cells[index]
        return Polygon([self.vertices[i] for i in cell.vertex_indices])


@dataclass
class DualGraph:
    n_nodes: int
    edges: set                  # frozenset pairs {i, j}
    connect_on_touch: bool

    def neighbors(self, i: int) -> list:
        out = sorted(j for e in self.edges if i in e for j in e if j != i)
        return out

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    @property
    def adjacency(self) -> dict:
        adj = {i: [] for i in range(self.n_nodes)}
        for e in self.edges:
            a, b = sorted(e)
            adj[a].append(b)
            adj[b].append(a)
        return {i: sorted(v) for i, v in adj.items()}


class _VertexPool:
    def __init__(self, quant: float):
        self.quant = quant
        self.points: list = []
        self._index: dict = {}

    def add(self, x: float, y: float) -> int:
        key = (round(x / self.quant), round(y / self.quant))
        idx = self._index.get(key)
        if idx is None:
            idx = len(self.points)
            self.points.append((key[0] * self.quant, key[1] * self.quant))
            self._index[key] = idx
        return idx


def _fit_box(spec: TilingSpec):
    m = spec.margin_frac
    x0 = spec.width * m
    y0 = spec.height * m
    return x0, y0, spec.width * (1 - 2 * m), spec.height * (1 - 2 * m)


def _emit(pool, cells, pts, kind, coord) -> None:
    idx = tuple(pool.add(x, y) for x, y in pts)
    poly = Polygon([pool.points[i] for i in idx])
    if poly.signed_area() < 0:  # enforce CCW in y-down raster coords
        idx = tuple(reversed(idx))
    cells.append(Cell(vertex_indices=idx, kind=kind, grid_coord=coord))


def _square_cells(spec, pool, cells):
    x0, y0, bw, bh = _fit_box(spec)
    side = min(bw / spec.cols, bh / spec.rows)
    ox = x0 + (bw - side * spec.cols) / 2
    oy = y0 + (bh - side * spec.rows) / 2
    for j in range(spec.rows):
        for i in range(spec.cols):
            xa, ya = ox + i * side, oy + j * side
            _emit(pool, cells,
                  [(xa, ya), (xa + side, ya), (xa + side, ya + side), (xa, ya + side)],
                  "square", (i, j))


def _triangular_cells(spec, pool, cells):
    # Row of up/down triangles: cols lattice cells per row → 2·cols triangles.
    x0, y0, bw, bh = _fit_box(spec)
    side = min(bw / (spec.cols + 0.5), bh / (spec.rows * math.sqrt(3) / 2))
    h = side * math.sqrt(3) / 2
    ox = x0 + (bw - side * (spec.cols + 0.5)) / 2
    oy = y0 + (bh - h * spec.rows) / 2
    for j in range(spec.rows):
        yt, yb = oy + j * h, oy + (j + 1) * h
        for i in range(2 * spec.cols):
            xa = ox + i * side / 2
            # Orientation alternates with (i + j) parity so cell i of row j
            # shares its horizontal edge with cell i of the adjacent row.
            if (i + j) % 2 == 0:
                pts = [(xa, yb), (xa + side, yb), (xa + side / 2, yt)]
                tag = "up"
            else:
                pts = [(xa, yt), (xa + side, yt), (xa + side / 2, yb)]
                tag = "down"
            _emit(pool, cells, pts, tag, (i, j))


def _hex_center(q, r, radius):
    # odd-q vertical layout, pointy width = sqrt(3)·radius… use flat-top hexes.
    x = radius * 1.5 * q
    y = radius * math.sqrt(3) * (r + 0.5 * (q & 1))
    return x, y


def _hexagonal_cells(spec, pool, cells, subdivide=False):
    x0, y0, bw, bh = _fit_box(spec)
    # Flat-top hexagons on an odd-q offset grid: cols across, rows down.
    ew = 1.5 * (spec.cols - 1) + 2.0                 # extent in radius units (x)
    eh = math.sqrt(3) * (spec.rows + 0.5)            # extent in radius units (y)
    radius = min(bw / ew, bh / eh)
    ox = x0 + (bw - radius * ew) / 2 + radius
    oy = y0 + (bh - radius * eh) / 2 + radius * math.sqrt(3) / 2
    for q in range(spec.cols):
        for r in range(spec.rows):
            cx, cy = _hex_center(q, r, radius)
            cx, cy = cx + ox, cy + oy
            corners = [(cx + radius * math.cos(k * math.pi / 3),
                        cy + radius * math.sin(k * math.pi / 3)) for k in range(6)]
            # Store axial coordinates (odd-q offset → axial) so the
            # (q − r) mod 3 coloring is valid.
            r_ax = r - (q - (q & 1)) // 2
            if not subdivide:
                _emit(pool, cells, corners, "hex", (q, r_ax))
            else:
                # Three congruent 60/120 rhombi sharing the hex center.
                for sector in range(3):
                    a = corners[(2 * sector) % 6]
                    b = corners[(2 * sector + 1) % 6]
                    c = corners[(2 * sector + 2) % 6]
                    _emit(pool, cells, [(cx, cy), a, b, c],
                          f"rhomb{sector}", (q, r_ax, sector))


def _circle_cells(spec, pool, cells):
    # Disks centered on a triangular lattice so neighbors touch tangentially.
    x0, y0, bw, bh = _fit_box(spec)
    step_y = math.sqrt(3) / 2
    ew = spec.cols + 0.5
    eh = (spec.rows - 1) * step_y + 1.0
    d = min(bw / ew, bh / eh)       # circle diameter
    rad = d / 2
    ox = x0 + (bw - d * ew) / 2
    oy = y0 + (bh - d * eh) / 2
    for j in range(spec.rows):
        for i in range(spec.cols):
            cx = ox + rad + d * i + (j % 2) * rad
            cy = oy + rad + d * step_y * j
            # Vertices aligned to the six tangential directions so touching
            # disks share a pooled vertex.
            pts = [(cx + rad * math.cos(2 * math.pi * k / CIRCLE_FIDELITY),
                    cy + rad * math.sin(2 * math.pi * k / CIRCLE_FIDELITY))
                   for k in range(CIRCLE_FIDELITY)]
            _emit(pool, cells, pts, "circle", (i, j))


def generate_tiling(spec: TilingSpec) -> TilingPatch:
    quant = QUANT_FRAC * min(spec.width, spec.height)
    pool = _VertexPool(quant)
    cells: list = []
    if spec.kind is TilingKind.SQUARE:
        _square_cells(spec, pool, cells)
    elif spec.kind is TilingKind.TRIANGULAR:
        _triangular_cells(spec, pool, cells)
    elif spec.kind is TilingKind.HEXAGONAL:
        _hexagonal_cells(spec, pool, cells, subdivide=False)
    elif spec.kind is TilingKind.RHOMBILLE:
        _hexagonal_cells(spec, pool, cells, subdivide=True)
    else:
        _circle_cells(spec, pool, cells)
    return TilingPatch(vertices=pool.points, cells=cells, quant=quant)


def _cell_edges(cell: Cell):
    idx = cell.vertex_indices
    for k in range(len(idx)):
        a, b = idx[k], idx[(k + 1) % len(idx)]
        yield (a, b) if a < b else (b, a)


def build_dual_graph(patch: TilingPatch, connect_on_touch: bool = False) -> DualGraph:
    edges: set = set()
    if connect_on_touch:
        by_vertex: dict = {}
        for ci, cell in enumerate(patch.cells):
            for v in cell.vertex_indices:
                by_vertex.setdefault(v, []).append(ci)
        for members in by_vertex.values():
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    edges.add(frozenset((members[a], members[b])))
    else:
        by_edge: dict = {}
        for ci, cell in enumerate(patch.cells):
            for e in _cell_edges(cell):
                by_edge.setdefault(e, []).append(ci)
        for members in by_edge.values():
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    edges.add(frozenset((members[a], members[b])))
    return DualGraph(n_nodes=len(patch.cells), edges=edges,
                     connect_on_touch=connect_on_touch)


class NoColorClasses(InvalidSpec):
    """The circle packing exposes no Wythoffian color classes."""


def color_class(kind: TilingKind, grid_coord) -> int:
    if kind is TilingKind.SQUARE:
        i, j = grid_coord
        return ((i & 1) << 1) | (j & 1)
    if kind is TilingKind.TRIANGULAR:
        i, j = grid_coord
        return (i + 2 * j) % 3
    if kind is TilingKind.HEXAGONAL:
        q, r = grid_coord
        return (q - r) % 3
    if kind is TilingKind.RHOMBILLE:
        return grid_coord[2]
    raise NoColorClasses("circle packing has no color classes")


def cell_polygons(patch: TilingPatch) -> list:
    return [patch.cell_polygon(i) for i in range(len(patch.cells))]
