"""Ground-truth computations over structured scenes.

Every task answer is produced by, and re-verifiable through, one of these
functions. They operate on tiling patches, colored boards, edge paths, and
composite line figures — never on rendered pixels.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidSpec
from .tilings import DualGraph, TilingPatch


class InvalidQuery(InvalidSpec):
    pass


@dataclass
class ColoredBoard:
    """A tiling patch with a (possibly blank) color per cell."""

    patch: TilingPatch
    coloring: dict            # cell index -> color id, or None for blank

    def __post_init__(self) -> None:
        for i in range(len(self.patch.cells)):
            if i not in self.coloring:
                raise InvalidSpec(f"cell {i} unassigned")

    def color_of(self, i: int):
        return self.coloring[i]


@dataclass(frozen=True)
class EdgePath:
    """Vertex-simple polyline along tiling edges."""

    vertices: tuple           # pooled vertex indices
    color: int = 0

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidSpec("path must be vertex-simple")

    @property
    def edges(self) -> set:
        return {frozenset(e) for e in zip(self.vertices, self.vertices[1:])}


# --------------------------------------------------------------------------
# Graph search
# --------------------------------------------------------------------------

def shortest_path(g: DualGraph, src: int, dst: int, blocked: set) -> int:
    """BFS step count between cells over unblocked cells, or -1."""
    if src in blocked or dst in blocked:
        raise InvalidQuery("src/dst must not be blocked")
    if src == dst:
        return 0
    adj = g.adjacency
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if v in blocked or v in dist:
                continue
            dist[v] = dist[u] + 1
            if v == dst:
                return dist[v]
            q.append(v)
    return -1


def components(board: ColoredBoard, color, graph: DualGraph) -> list:
    """Sizes of the connected components of ``color``, descending."""
    target = [i for i in range(len(board.patch.cells))
              if board.coloring[i] == color]
    target_set = set(target)
    adj = graph.adjacency
    seen: set = set()
    sizes = []
    for start in target:
        if start in seen:
            continue
        size = 0
        q = deque([start])
        seen.add(start)
        while q:
            u = q.popleft()
            size += 1
            for v in adj[u]:
                if v in target_set and v not in seen:
                    seen.add(v)
                    q.append(v)
        sizes.append(size)
    return sorted(sizes, reverse=True)


# --------------------------------------------------------------------------
# Region geometry
# --------------------------------------------------------------------------

def _boundary_edges(patch: TilingPatch, cells: set) -> int:
    """Edges of `cells` not shared with another cell in the set."""
    count: dict = {}
    for ci in cells:
        idx = patch.cells[ci].vertex_indices
        for k in range(len(idx)):
            a, b = idx[k], idx[(k + 1) % len(idx)]
            e = (a, b) if a < b else (b, a)
            count[e] = count.get(e, 0) + 1
    return sum(1 for v in count.values() if v == 1)


def _hole_count(patch: TilingPatch, cells: set, graph: DualGraph) -> int:
    """Bounded complement components fully enclosed by the region."""
    n = len(patch.cells)
    comp = set(range(n)) - cells
    adj = graph.adjacency
    # Cells on the patch boundary: having at least one unshared edge
    # relative to the full patch.
    edge_owner: dict = {}
    for ci in range(n):
        idx = patch.cells[ci].vertex_indices
        for k in range(len(idx)):
            a, b = idx[k], idx[(k + 1) % len(idx)]
            e = (a, b) if a < b else (b, a)
            edge_owner.setdefault(e, []).append(ci)
    outer = {cs[0] for e, cs in edge_owner.items() if len(cs) == 1}
    holes = 0
    seen: set = set()
    for start in comp:
        if start in seen:
            continue
        q = deque([start])
        seen.add(start)
        bounded = True
        while q:
            u = q.popleft()
            if u in outer:
                bounded = False
            for v in adj[u]:
                if v in comp and v not in seen:
                    seen.add(v)
                    q.append(v)
        if bounded:
            holes += 1
    return holes


def region_geometry(board: ColoredBoard, color, query: str,
                    graph: DualGraph, color2=None) -> int:
    cells = {i for i in range(len(board.patch.cells))
             if board.coloring[i] == color}
    if query == "area":
        return len(cells)
    if query == "perimeter":
        return _boundary_edges(board.patch, cells)
    if query == "holes":
        return _hole_count(board.patch, cells, graph)
    if query == "area-diff":
        cells2 = {i for i in range(len(board.patch.cells))
                  if board.coloring[i] == color2}
        return len(cells) - len(cells2)
    if query == "union-perimeter":
        cells2 = {i for i in range(len(board.patch.cells))
                  if board.coloring[i] == color2}
        return _boundary_edges(board.patch, cells | cells2)
    raise InvalidQuery(f"unknown region query {query!r}")


# --------------------------------------------------------------------------
# Composite figures and sub-shape counting
# --------------------------------------------------------------------------
#
# Figures are families of straight lines (stored exactly with Fraction
# coordinates); sub-shapes are counted by exhaustive choice of bounding
# lines, checking that every needed boundary segment is covered.

@dataclass(frozen=True)
class LineSegment:
    """Exact segment between two rational points."""

    x1: Fraction
    y1: Fraction
    x2: Fraction
    y2: Fraction


@dataclass
class CompositeFigure:
    """A connected straight-line figure plus its generator tag."""

    generator: str
    segments: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def _segment_cover(segments) -> dict:
    """Map (direction, offset) -> sorted merged intervals along the line.

    Direction is the primitive integer direction; offset identifies the
    specific line. Intervals are parameterized by the dot product with the
    direction (monotone along the line).
    """
    lines: dict = {}
    for s in segments:
        dx, dy = s.x2 - s.x1, s.y2 - s.y1
        if dx == 0 and dy == 0:
            continue
        # canonical rational slope representation of the direction
        if dx == 0:
            d = (Fraction(0), Fraction(1))
        elif dy == 0:
            d = (Fraction(1), Fraction(0))
        else:
            d = (Fraction(1), dy / dx)
        if d[0] == 0:
            off = s.x1
            t1, t2 = s.y1, s.y2
        else:
            # line y = m x + c → offset c
            m = d[1]
            off = s.y1 - m * s.x1
            t1, t2 = s.x1, s.x2
        key = (d, off)
        lo, hi = min(t1, t2), max(t1, t2)
        lines.setdefault(key, []).append((lo, hi))
    merged: dict = {}
    for key, ivs in lines.items():
        ivs.sort()
        out = [list(ivs[0])]
        for lo, hi in ivs[1:]:
            if lo <= out[-1][1]:
                out[-1][1] = max(out[-1][1], hi)
            else:
                out.append([lo, hi])
        merged[key] = [(a, b) for a, b in out]
    return merged


class _Coverage:
    """Query whether an arbitrary segment lies on drawn lines."""

    def __init__(self, segments):
        self.cover = _segment_cover(segments)

    def covered(self, x1, y1, x2, y2) -> bool:
        x1, y1, x2, y2 = _frac(x1), _frac(y1), _frac(x2), _frac(y2)
        dx, dy = x2 - x1, y2 - y1
        if dx == 0 and dy == 0:
            return True
        if dx == 0:
            d = (Fraction(0), Fraction(1))
            off = x1
            t1, t2 = y1, y2
        elif dy == 0:
            d = (Fraction(1), Fraction(0))
            off = y1
            t1, t2 = x1, x2
        else:
            d = (Fraction(1), dy / dx)
            off = y1 - (dy / dx) * x1
            t1, t2 = x1, x2
        ivs = self.cover.get((d, off))
        if not ivs:
            return False
        lo, hi = min(t1, t2), max(t1, t2)
        for a, b in ivs:
            if a <= lo and hi <= b:
                return True
        return False


# Queries each generator family supports.  Skewed figures store lattice
# coordinates, where "parallelogram" is affine-invariant but "square" is not.
SUPPORTED_QUERIES = {
    "axis-polyomino": ("squares", "rectangles"),
    "poly-parallelogram": ("parallelograms",),
    "regular-grid": ("squares", "rectangles"),
    "irregular-grid": ("squares", "rectangles"),
    "staircase": ("squares", "rectangles"),
    "triangular-lattice": ("triangles", "parallelograms"),
    "inscribed-overlay": ("triangles", "squares", "rectangles"),
}


class UnsupportedQuery(InvalidQuery):
    pass


def count_subshapes(fig: CompositeFigure, query: str) -> int:
    """Exact count of sub-shapes whose boundaries lie on drawn segments."""
    if query not in SUPPORTED_QUERIES.get(fig.generator, ()):
        raise UnsupportedQuery(
            f"{fig.generator!r} figures do not support {query!r}")
    cov = _Coverage(fig.segments)
    xs = sorted({c for s in fig.segments for c in (s.x1, s.x2)})
    ys = sorted({c for s in fig.segments for c in (s.y1, s.y2)})
    if query in ("squares", "rectangles"):
        count = 0
        for x1, x2 in itertools.combinations(xs, 2):
            for y1, y2 in itertools.combinations(ys, 2):
                if query == "squares" and (x2 - x1) != (y2 - y1):
                    continue
                if (cov.covered(x1, y1, x2, y1) and cov.covered(x1, y2, x2, y2)
                        and cov.covered(x1, y1, x1, y2)
                        and cov.covered(x2, y1, x2, y2)):
                    count += 1
        return count
    if query in ("triangles", "parallelograms"):
        return _count_by_vertices(fig, cov, query)
    raise InvalidQuery(f"unsupported query {query!r}")


def _segment_endpoints(fig) -> list:
    pts = {(s.x1, s.y1) for s in fig.segments} | {(s.x2, s.y2) for s in fig.segments}
    # intersections of drawn segments are needed too
    segs = [(s.x1, s.y1, s.x2, s.y2) for s in fig.segments]
    for (a, b) in itertools.combinations(segs, 2):
        p = _intersect(a, b)
        if p is not None:
            pts.add(p)
    return sorted(pts)


def _intersect(s1, s2):
    x1, y1, x2, y2 = s1
    x3, y3, x4, y4 = s2
    d = (x2 - x1) * (y4 - y3) - (y2 - y1) * (x4 - x3)
    if d == 0:
        return None
    t = ((x3 - x1) * (y4 - y3) - (y3 - y1) * (x4 - x3)) / d
    u = ((x3 - x1) * (y2 - y1) - (y3 - y1) * (x2 - x1)) / d
    if 0 <= t <= 1 and 0 <= u <= 1:
        return (x1 + t * (x2 - x1), y1 + t * (y2 - y1))
    return None


def _count_by_vertices(fig, cov, query) -> int:
    pts = _segment_endpoints(fig)
    n = len(pts)
    count = 0
    if query == "triangles":
        for a, b, c in itertools.combinations(pts, 3):
            area2 = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
            if area2 == 0:
                continue
            if (cov.covered(*a, *b) and cov.covered(*b, *c)
                    and cov.covered(*a, *c)):
                count += 1
        return count
    # parallelograms: choose 3 points a,b,c; d = a + c - b must be a point
    pt_set = set(pts)
    seen: set = set()
    for a, b, c in itertools.permutations(pts, 3):
        if a >= c:
            continue
        d = (a[0] + c[0] - b[0], a[1] + c[1] - b[1])
        if d not in pt_set or d == b:
            continue
        area2 = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if area2 == 0:
            continue
        quad = frozenset((a, b, c, d))
        if len(quad) != 4 or quad in seen:
            continue
        if (cov.covered(*a, *b) and cov.covered(*b, *c)
                and cov.covered(*c, *d) and cov.covered(*d, *a)):
            seen.add(quad)
            count += 1
    return count


# --------------------------------------------------------------------------
# Figure generators
# --------------------------------------------------------------------------

def _cell_segments(cells) -> list:
    segs = []
    for (i, j) in cells:
        x, y = Fraction(i), Fraction(j)
        segs.append(LineSegment(x, y, x + 1, y))
        segs.append(LineSegment(x, y + 1, x + 1, y + 1))
        segs.append(LineSegment(x, y, x, y + 1))
        segs.append(LineSegment(x + 1, y, x + 1, y + 1))
    return segs


def figure_polyomino(cells, generator: str = "axis-polyomino") -> CompositeFigure:
    """Connected cell set drawn with all interior and boundary edges."""
    return CompositeFigure(generator, _cell_segments(cells),
                           {"cells": sorted(cells)})


def figure_grid(xs, ys, regular: bool) -> CompositeFigure:
    """Full grid of horizontal and vertical lines at the given positions."""
    xs = sorted(_frac(x) for x in xs)
    ys = sorted(_frac(y) for y in ys)
    segs = [LineSegment(xs[0], y, xs[-1], y) for y in ys]
    segs += [LineSegment(x, ys[0], x, ys[-1]) for x in xs]
    tag = "regular-grid" if regular else "irregular-grid"
    return CompositeFigure(tag, segs, {"xs": xs, "ys": ys})


def figure_staircase(steps: int, base: int) -> CompositeFigure:
    """Staircase polyomino: row j spans the first base - j columns."""
    cells = [(i, j) for j in range(steps) for i in range(base - j)]
    fig = figure_polyomino(cells, "staircase")
    fig.meta["steps"] = steps
    fig.meta["base"] = base
    return fig


def figure_triangular(n: int) -> CompositeFigure:
    """Subdivided equilateral triangle of side n, in lattice coordinates.

    Lattice points (i, j) with i + j <= n; lines run in the three lattice
    directions.  Render with a sheared basis to recover equilateral shape.
    """
    segs = []
    for j in range(n + 1):
        y = Fraction(j)
        segs.append(LineSegment(Fraction(0), y, Fraction(n - j), y))
    for i in range(n + 1):
        x = Fraction(i)
        segs.append(LineSegment(x, Fraction(0), x, Fraction(n - i)))
    for k in range(1, n + 1):
        segs.append(LineSegment(Fraction(k), Fraction(0), Fraction(0), Fraction(k)))
    return CompositeFigure("triangular-lattice", segs, {"side": n})


def figure_inscribed(w: int, h: int, diagonals: bool = True,
                     midlines: bool = False) -> CompositeFigure:
    """Rectangle with inscribed diagonals and/or midlines."""
    W, H = Fraction(w), Fraction(h)
    z = Fraction(0)
    segs = [LineSegment(z, z, W, z), LineSegment(z, H, W, H),
            LineSegment(z, z, z, H), LineSegment(W, z, W, H)]
    if diagonals:
        segs.append(LineSegment(z, z, W, H))
        segs.append(LineSegment(z, H, W, z))
    if midlines:
        segs.append(LineSegment(W / 2, z, W / 2, H))
        segs.append(LineSegment(z, H / 2, W, H / 2))
    return CompositeFigure("inscribed-overlay", segs,
                           {"w": w, "h": h, "diagonals": diagonals,
                            "midlines": midlines})


# --------------------------------------------------------------------------
# Venn sums
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class VennRect:
    x1: float
    y1: float
    x2: float
    y2: float

    def contains(self, x: float, y: float) -> bool:
        return self.x1 <= x <= self.x2 and self.y1 <= y <= self.y2


def venn_regions(rects: list) -> list:
    """Non-empty atomic regions as membership masks (bit i = in rects[i])."""
    masks = set()
    # Atomic regions are separated by rectangle edges; sample midpoints of
    # the induced grid.
    xs = sorted({r.x1 for r in rects} | {r.x2 for r in rects})
    ys = sorted({r.y1 for r in rects} | {r.y2 for r in rects})
    for i in range(len(xs) - 1):
        for j in range(len(ys) - 1):
            cx, cy = (xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2
            mask = 0
            for k, r in enumerate(rects):
                if r.contains(cx, cy):
                    mask |= 1 << k
            if mask:
                masks.add(mask)
    return sorted(masks)


def venn_sum(rects: list, labels: dict, include: int, exclude: int) -> int:
    """Sum of labels over atomic regions inside all `include` rectangles
    and outside all `exclude` ones (masks are rectangle bitsets)."""
    if include & exclude:
        raise InvalidQuery("include and exclude masks overlap")
    regions = venn_regions(rects)
    chosen = [m for m in regions
              if (m & include) == include and (m & exclude) == 0]
    if not chosen:
        raise InvalidQuery("empty truth set")
    return sum(labels.get(m, 0) for m in chosen)


# --------------------------------------------------------------------------
# Paths and boards
# --------------------------------------------------------------------------

def path_length(p: EdgePath) -> int:
    return len(p.vertices) - 1


def path_intersections(paths: list) -> int:
    """Pooled vertices used by at least two paths, each counted once."""
    for a, b in itertools.combinations(paths, 2):
        if a.edges & b.edges:
            raise InvalidSpec("paths must not share edges")
    used: dict = {}
    for p in paths:
        for v in set(p.vertices):
            used[v] = used.get(v, 0) + 1
    return sum(1 for v, k in used.items() if k >= 2)


def board_diff(left: ColoredBoard, right: ColoredBoard) -> int:
    if len(left.patch.cells) != len(right.patch.cells):
        raise InvalidSpec("board topology mismatch")
    return sum(1 for i in range(len(left.patch.cells))
               if left.coloring[i] != right.coloring[i])


def ordering_answer(items: list, direction: str = "ascending",
                    min_relative_gap: float = 0.15) -> list:
    """Unique sorted label order for (label, measure) pairs.

    Raises when any pairwise relative gap is below the configured minimum,
    which is what guarantees the visual order is unambiguous.
    """
    measures = sorted(m for _, m in items)
    for a, b in zip(measures, measures[1:]):
        if a <= 0 or (b - a) / a < min_relative_gap:
            raise InvalidSpec("relative gap below minimum")
    rev = direction == "descending"
    return [label for label, _ in sorted(items, key=lambda t: t[1], reverse=rev)]
