"""Task kinds 1-5: spatial relations, sorting, stacks, and charts."""

from __future__ import annotations

import math

from ..canvas import Canvas, blit
from ..colors import color_name
from ..errors import GenerationExhausted
from ..geometry import Polygon, point_in_polygon, polygon_area, regular_polygon
from ..oracles import ordering_answer
from ..raster import Scene
from ..rng import SeededRng
from .base import (INK, MIN_RELATIVE_GAP, RESAMPLE_BUDGET, Integer, Letter,
                   Option, Ordering, TaskInstance, TaskKind,
                   assert_image_options_distinct, complexity_of,
                   compose_rows, frame_canvas, labeled_option_row,
                   label_strip, pick_distinct_colors, rgba, shuffled_options)
from .prompts import render_prompt
from ..fonts import draw_text, text_width

SEPARATION = 6.0                 # strict visual clearance in pixels
SORT_LABELS = "CDFGHJKLMNPRSTVWXZ"


# ---------------------------------------------------------------------------
# shared geometry helpers
# ---------------------------------------------------------------------------

def _poly_clearance(pt, poly: Polygon) -> float:
    """Distance from pt to the polygon boundary (always >= 0)."""
    best = float("inf")
    verts = list(poly.vertices)
    px, py = pt
    for i in range(len(verts)):
        x1, y1 = verts[i]
        x2, y2 = verts[(i + 1) % len(verts)]
        dx, dy = x2 - x1, y2 - y1
        L2 = dx * dx + dy * dy
        t = 0.0 if L2 == 0 else max(0.0, min(1.0, ((px - x1) * dx + (py - y1) * dy) / L2))
        qx, qy = x1 + t * dx, y1 + t * dy
        best = min(best, math.hypot(px - qx, py - qy))
    return best


def _convex_clip(subject: Polygon, clip: Polygon) -> list:
    """Sutherland-Hodgman clip of a convex subject by a convex polygon."""
    pts = list(subject.vertices)
    cv = list(clip.vertices)
    if Polygon(cv).signed_area() < 0:
        cv.reverse()
    for i in range(len(cv)):
        ax, ay = cv[i]
        bx, by = cv[(i + 1) % len(cv)]
        out = []
        for j in range(len(pts)):
            px, py = pts[j]
            qx, qy = pts[(j + 1) % len(pts)]
            pin = (bx - ax) * (py - ay) - (by - ay) * (px - ax) >= 0
            qin = (bx - ax) * (qy - ay) - (by - ay) * (qx - ax) >= 0
            if pin:
                out.append((px, py))
            if pin != qin:
                denom = (bx - ax) * (qy - py) - (by - ay) * (qx - px)
                if denom != 0:
                    t = -((bx - ax) * (py - ay) - (by - ay) * (px - ax)) / denom
                    out.append((px + t * (qx - px), py + t * (qy - py)))
        pts = out
        if not pts:
            return []
    return pts


def _overlap_fraction(a: Polygon, b: Polygon) -> float:
    inter = _convex_clip(a, b)
    if len(inter) < 3:
        return 0.0
    return polygon_area(Polygon(inter)) / polygon_area(a)


def _small_shape_poly(kind: str, x: float, y: float, r: float) -> Polygon:
    n = {"circle": 24, "triangle": 3, "square": 4, "pentagon": 5, "hexagon": 6}[kind]
    phase = -math.pi / 2 if n in (3, 5) else (math.pi / 4 if n == 4 else 0.0)
    return regular_polygon(x, y, r, n, phase)


def _gap_measures(rng: SeededRng, k: int, lo: float = 1.0) -> list:
    """k positive measures with every consecutive relative gap >= 15%."""
    vals = [lo * rng.uniform(1.0, 1.3)]
    for _ in range(k - 1):
        vals.append(vals[-1] * rng.uniform(1.0 + MIN_RELATIVE_GAP + 0.05, 1.7))
    return vals


def _ordering_options(rng: SeededRng, correct: tuple) -> tuple:
    """Three two-position swaps of the true ordering (shuffle fallback)."""
    distractors = []
    budget = RESAMPLE_BUDGET
    while len(distractors) < 3 and budget > 0:
        budget -= 1
        cand = list(correct)
        i, j = rng.sample(range(len(cand)), 2)
        cand[i], cand[j] = cand[j], cand[i]
        cand = tuple(cand)
        if cand != correct and cand not in distractors:
            distractors.append(cand)
    while len(distractors) < 3:
        cand = list(correct)
        rng.shuffle(cand)
        cand = tuple(cand)
        if cand != correct and cand not in distractors:
            distractors.append(cand)
    return tuple(distractors)


def _ordering_instance(kind, rng, scene_canvas, items, direction, prompt,
                       scene, knobs):
    labels = tuple(lab for lab, _ in items)
    correct = tuple(ordering_answer(items, direction))
    distractors = _ordering_options(rng, correct)
    payloads, letter = shuffled_options(rng, correct, list(distractors))
    options = [Option(label="abcd"[i], text=", ".join(p).upper())
               for i, p in enumerate(payloads)]
    scene = dict(scene)
    scene["option_orderings"] = [list(p) for p in payloads]
    scene["direction"] = direction
    canvas = _attach_text_options(scene_canvas, options, prompt_hint=None)
    return TaskInstance(
        kind=kind, image=canvas, prompt=prompt, answer=Ordering(correct),
        scene=scene, seed=rng.next_u64(), options=options,
        complexity=complexity_of(kind, knobs), knobs=knobs)


def _attach_text_options(canvas: Canvas, options, prompt_hint=None) -> Canvas:
    lines = [f"({o.label}) {o.text}" for o in options]
    size = 14
    pad = 10
    width = max(canvas.width,
                int(max(text_width(t, size) for t in lines)) + 2 * pad)
    height = canvas.height + pad + len(lines) * (size + 8) + pad
    out = Canvas.blank(width, height)
    blit(out, canvas, (width - canvas.width) // 2, 0)
    y = canvas.height + pad
    for t in lines:
        draw_text(out, t, pad, y, size, INK)
        y += size + 8
    return out


# ---------------------------------------------------------------------------
# kind 1: positional count
# ---------------------------------------------------------------------------

REFERENCE_SHAPES = ("rectangle", "circle", "triangle")
SMALL_SHAPES = ("circle", "triangle", "square", "pentagon", "hexagon")
RELATIONS = ("inside", "outside", "above", "below",
             "left of", "right of")


def _reference_polygon(ref: dict) -> Polygon:
    if ref["shape"] == "rectangle":
        x, y, w, h = ref["x"], ref["y"], ref["w"], ref["h"]
        return Polygon([(x, y), (x + w, y), (x + w, y + h), (x, y + h)])
    n = 32 if ref["shape"] == "circle" else 3
    return regular_polygon(ref["x"], ref["y"], ref["r"], n,
                           -math.pi / 2 if n == 3 else 0.0)


def eval_positional(ref: dict, small: dict, relation: str) -> bool:
    """Strict radius-aware spatial predicate."""
    poly = _reference_polygon(ref)
    x, y, r = small["x"], small["y"], small["r"]
    clear = _poly_clearance((x, y), poly) - r
    if relation == "inside":
        return point_in_polygon((x, y), poly) and clear > SEPARATION
    if relation == "outside":
        return not point_in_polygon((x, y), poly) and clear > SEPARATION
    xs = [p[0] for p in poly.vertices]
    ys = [p[1] for p in poly.vertices]
    if relation == "above":
        return y + r < min(ys) - SEPARATION
    if relation == "below":
        return y - r > max(ys) + SEPARATION
    if relation == "left of":
        return x + r < min(xs) - SEPARATION
    if relation == "right of":
        return x - r > max(xs) + SEPARATION
    raise ValueError(relation)


def _positional_unambiguous(ref, small) -> bool:
    """Every predicate is strictly decided for this (ref, small) pair."""
    poly = _reference_polygon(ref)
    x, y, r = small["x"], small["y"], small["r"]
    if _poly_clearance((x, y), poly) - r <= SEPARATION:
        return False
    xs = [p[0] for p in poly.vertices]
    ys = [p[1] for p in poly.vertices]
    for lo, hi, v in ((min(xs), max(xs), x), (min(ys), max(ys), y)):
        for bound in (lo, hi):
            if abs(v - bound) - r <= SEPARATION:
                return False
    return True


def rederive_positional_count(scene: dict) -> int:
    ref = scene["references"][scene["target_ref"]]
    return sum(
        1 for s in scene["smalls"]
        if s["kind"] == scene["target_kind"]
        and eval_positional(ref, s, scene["relation"]))


def gen_positional_count(rng: SeededRng, knob: int = None) -> TaskInstance:
    size = 420
    n_refs = knob if knob is not None else rng.randint(1, 4)
    for _ in range(RESAMPLE_BUDGET):
        sub = SeededRng(rng.next_u64())
        refs = []
        colors = pick_distinct_colors(sub, n_refs + 1)
        ok = True
        for i in range(n_refs):
            shape = sub.choice(REFERENCE_SHAPES)
            for _ in range(60):
                if shape == "rectangle":
                    w, h = sub.uniform(80, 150), sub.uniform(70, 130)
                    ref = {"shape": shape,
                           "x": sub.uniform(20, size - 20 - w),
                           "y": sub.uniform(20, size - 20 - h),
                           "w": w, "h": h, "color": colors[i]}
                else:
                    r = sub.uniform(45, 80)
                    ref = {"shape": shape, "x": sub.uniform(20 + r, size - 20 - r),
                           "y": sub.uniform(20 + r, size - 20 - r),
                           "r": r, "color": colors[i]}
                poly = _reference_polygon(ref)
                if all(min(_poly_clearance(v, _reference_polygon(o))
                           for v in poly.vertices) > 24
                       and not point_in_polygon(poly.centroid(), _reference_polygon(o))
                       and not point_in_polygon(_reference_polygon(o).centroid(), poly)
                       for o in refs):
                    refs.append(ref)
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        target_ref = sub.randint(0, n_refs - 1)
        target_kind = sub.choice(SMALL_SHAPES)
        relation = sub.choice(RELATIONS)
        smalls = []
        n_small = sub.randint(3, 10)
        for _ in range(n_small):
            for _ in range(80):
                s = {"kind": sub.choice(SMALL_SHAPES),
                     "x": sub.uniform(15, size - 15),
                     "y": sub.uniform(15, size - 15),
                     "r": sub.uniform(7, 12)}
                if not all(_positional_unambiguous(ref, s) for ref in refs):
                    continue
                if any(math.hypot(s["x"] - t["x"], s["y"] - t["y"])
                       < s["r"] + t["r"] + 4 for t in smalls):
                    continue
                smalls.append(s)
                break
        scene = {"references": refs, "smalls": smalls,
                 "target_ref": target_ref, "target_kind": target_kind,
                 "relation": relation, "size": size}
        answer = rederive_positional_count(scene)
        vec = Scene()
        for ref in refs:
            vec.add_stroke(list(_reference_polygon(ref).vertices),
                           rgba(ref["color"]), 3.0, closed=True)
        for s in smalls:
            vec.add(_small_shape_poly(s["kind"], s["x"], s["y"], s["r"]),
                    rgba(colors[-1]))
        ref = refs[target_ref]
        prompt = render_prompt(
            TaskKind.POSITIONAL_COUNT, sub, small=target_kind,
            relation=relation,
            ref=f"{color_name(ref['color'])} {ref['shape']}")
        knobs = {"references": n_refs}
        return TaskInstance(
            kind=TaskKind.POSITIONAL_COUNT, image=vec.render(size, size),
            prompt=prompt, answer=Integer(answer), scene=scene,
            seed=sub.next_u64(),
            complexity=complexity_of(TaskKind.POSITIONAL_COUNT, knobs),
            knobs=knobs)
    raise GenerationExhausted("positional-count")


# ---------------------------------------------------------------------------
# kind 2: shape sorting
# ---------------------------------------------------------------------------

SORT_FAMILIES = {
    "polygon": ("area", "perimeter"),
    "ellipse": ("area", "perimeter"),
    "angle": ("angle measure",),
    "line": ("length",),
}


def _sorting_item_scene(family: str, measure: float, scale: float,
                        color, meta) -> Scene:
    sc = Scene()
    if family == "polygon":
        n = meta["sides"]
        if meta["metric"] == "area":
            # regular n-gon area = n/2 r^2 sin(2π/n)
            r = math.sqrt(2 * measure / (n * math.sin(2 * math.pi / n)))
        else:
            r = measure / (2 * n * math.sin(math.pi / n))
        sc.add(regular_polygon(0, 0, r * scale, n, -math.pi / 2), color)
    elif family == "ellipse":
        ratio = meta["ratio"]
        if meta["metric"] == "area":
            b = math.sqrt(measure / (math.pi * ratio))
        else:
            # Ramanujan approximation solved for b given perimeter
            a_over_b = ratio
            h = ((a_over_b - 1) / (a_over_b + 1)) ** 2
            per_unit = math.pi * (1 + a_over_b) * (
                1 + 3 * h / (10 + math.sqrt(4 - 3 * h)))
            b = measure / per_unit
        a = b * ratio
        pts = [(a * scale * math.cos(t), b * scale * math.sin(t))
               for t in [i * 2 * math.pi / 40 for i in range(40)]]
        sc.add(Polygon(pts), color)
    elif family == "angle":
        ang = math.radians(measure)
        L = 42.0
        base = meta["base"]
        p0 = (0.0, 0.0)
        p1 = (L * math.cos(base), -L * math.sin(base))
        p2 = (L * math.cos(base + ang), -L * math.sin(base + ang))
        sc.add_stroke([p1, p0, p2], color, 3.0)
        arc = [(14 * math.cos(base + t), -14 * math.sin(base + t))
               for t in [i * ang / 12 for i in range(13)]]
        sc.add_stroke(arc, color, 1.6)
    elif family == "line":
        ang = meta["tilt"]
        half = measure * scale / 2
        sc.add_stroke([(-half * math.cos(ang), -half * math.sin(ang)),
                       (half * math.cos(ang), half * math.sin(ang))],
                      color, 3.5)
    return sc


def gen_shape_sorting(rng: SeededRng, knob: int = None) -> TaskInstance:
    k = knob if knob is not None else rng.randint(3, 6)
    sub = SeededRng(rng.next_u64())
    family = sub.choice(sorted(SORT_FAMILIES))
    metric = sub.choice(SORT_FAMILIES[family])
    direction = sub.choice(("ascending", "descending"))
    labels = sub.sample(list(SORT_LABELS), k)
    if family == "angle":
        measures = []
        v = sub.uniform(15, 25)
        for _ in range(k):
            measures.append(v)
            v *= sub.uniform(1.22, 1.45)
        if measures[-1] > 170:
            measures = [m * 168 / measures[-1] for m in measures]
    else:
        measures = _gap_measures(sub, k)
    order = sub.sample(range(k), k)
    items = [(labels[i], measures[i]) for i in range(k)]
    shuffled = [items[i] for i in order]

    meta = {"metric": metric}
    if family == "polygon":
        meta["sides"] = sub.randint(3, 7)
    elif family == "ellipse":
        meta["ratio"] = sub.uniform(1.3, 2.0)

    col_w, col_h = 130, 150
    biggest = max(measures)
    if family in ("polygon", "ellipse"):
        if metric == "area":
            scale = 48.0 / math.sqrt(biggest)
        else:
            scale = 110.0 / biggest
    elif family == "line":
        scale = 110.0 / biggest
    else:
        scale = 1.0
    color = rgba(pick_distinct_colors(sub, 1)[0])
    cells = []
    for lab, m in shuffled:
        item_meta = dict(meta)
        if family == "angle":
            item_meta["base"] = sub.uniform(0, math.pi)
        elif family == "line":
            item_meta["tilt"] = sub.uniform(-0.5, 0.5)
        sc = _sorting_item_scene(family, m, scale, color, item_meta)
        cell = sc.translated(col_w / 2, col_h / 2 + 12).render(col_w, col_h)
        draw_text(cell, lab, (col_w - text_width(lab, 18)) / 2, 4, 18, INK)
        cells.append(frame_canvas(cell, (230, 230, 230, 255), 1))
    board = compose_rows([cells])
    extreme = ("smallest to largest" if direction == "ascending"
               else "largest to smallest")
    prompt = render_prompt(TaskKind.SHAPE_SORTING, sub, metric=metric,
                           direction=direction, extreme=extreme)
    scene = {"family": family, "metric": metric,
             "items": [[lab, m] for lab, m in shuffled]}
    return _ordering_instance(TaskKind.SHAPE_SORTING, sub, board, shuffled,
                              direction, prompt, scene, {"items": k})


# ---------------------------------------------------------------------------
# kind 3: stack count
# ---------------------------------------------------------------------------

STACK_FAMILIES = ("rectangle", "circle", "triangle")
MARKERS = ("circle", "triangle", "square")
OVERLAP_RANGE = (0.15, 0.5)


def _sheet_polygon(family: str, cx: float, cy: float, area: float) -> Polygon:
    if family == "rectangle":
        w = math.sqrt(area * 1.4)
        h = area / w
        return Polygon([(cx - w / 2, cy - h / 2), (cx + w / 2, cy - h / 2),
                        (cx + w / 2, cy + h / 2), (cx - w / 2, cy + h / 2)])
    if family == "circle":
        poly = regular_polygon(cx, cy, 1.0, 32)
        r = math.sqrt(area / polygon_area(poly))
        return regular_polygon(cx, cy, r, 32)
    poly = regular_polygon(cx, cy, 1.0, 3, -math.pi / 2)
    r = math.sqrt(area / polygon_area(poly))
    return regular_polygon(cx, cy, r, 3, -math.pi / 2)


def marker_inside(sheet_vertices, marker) -> bool:
    poly = Polygon([tuple(v) for v in sheet_vertices])
    pt = (marker["x"], marker["y"])
    return (point_in_polygon(pt, poly)
            and _poly_clearance(pt, poly) - marker["r"] > SEPARATION / 2)


def rederive_stack_count(scene: dict) -> int:
    sheet = scene["sheets"][scene["target_sheet"]]
    return sum(1 for m in scene["markers"]
               if m["kind"] == scene["marker_kind"]
               and marker_inside(sheet["vertices"], m))


def gen_stack_count(rng: SeededRng, knob: int = None) -> TaskInstance:
    size = 420
    k = knob if knob is not None else rng.randint(3, 6)
    for _ in range(RESAMPLE_BUDGET):
        sub = SeededRng(rng.next_u64())
        family = sub.choice(STACK_FAMILIES)
        area = 54000.0 / k
        L = math.sqrt(area)
        colors = pick_distinct_colors(sub, k + 1)
        sheets = []
        cx, cy = sub.uniform(110, 180), sub.uniform(110, 180)
        ok = True
        overlaps = []
        for i in range(k):
            if i == 0:
                poly = _sheet_polygon(family, cx, cy, area)
            else:
                prev = Polygon([tuple(v) for v in sheets[-1]["vertices"]])
                for _ in range(120):
                    ang = sub.uniform(0, 2 * math.pi)
                    step = sub.uniform(0.4 * L, 1.1 * L)
                    nx = cx + step * math.cos(ang)
                    ny = cy + step * math.sin(ang)
                    poly = _sheet_polygon(family, nx, ny, area)
                    frac = _overlap_fraction(poly, prev)
                    if OVERLAP_RANGE[0] <= frac <= OVERLAP_RANGE[1]:
                        xs = [p[0] for p in poly.vertices]
                        ys = [p[1] for p in poly.vertices]
                        if min(xs) > 8 and max(xs) < size - 8 and \
                           min(ys) > 8 and max(ys) < size - 8:
                            cx, cy = nx, ny
                            overlaps.append(frac)
                            break
                else:
                    ok = False
                    break
            sheets.append({"vertices": [list(p) for p in poly.vertices],
                           "color": colors[i]})
        if not ok:
            continue
        target = sub.randint(0, k - 2)      # never the topmost sheet
        marker_kind = sub.choice(MARKERS)
        markers = []
        for _ in range(sub.randint(4, 10)):
            for _ in range(60):
                m = {"kind": sub.choice(MARKERS),
                     "x": sub.uniform(12, size - 12),
                     "y": sub.uniform(12, size - 12),
                     "r": sub.uniform(5, 8)}
                clear = all(
                    _poly_clearance((m["x"], m["y"]),
                                    Polygon([tuple(v) for v in s["vertices"]]))
                    - m["r"] > SEPARATION / 2
                    for s in sheets)
                if not clear:
                    continue
                if any(math.hypot(m["x"] - o["x"], m["y"] - o["y"])
                       < m["r"] + o["r"] + 3 for o in markers):
                    continue
                markers.append(m)
                break
        scene = {"sheets": sheets, "markers": markers,
                 "target_sheet": target, "marker_kind": marker_kind,
                 "overlaps": overlaps}
        answer = rederive_stack_count(scene)
        vec = Scene()
        for s in sheets:
            vec.add(Polygon([tuple(v) for v in s["vertices"]]),
                    rgba(s["color"]))
            vec.add_stroke([tuple(v) for v in s["vertices"]],
                           (60, 60, 60, 255), 2.0, closed=True)
        for m in markers:
            vec.add(_small_shape_poly(m["kind"], m["x"], m["y"], m["r"]),
                    (20, 20, 20, 255))
        prompt = render_prompt(
            TaskKind.STACK_COUNT, sub, small=marker_kind,
            color=color_name(sheets[target]["color"]))
        knobs = {"sheets": k}
        return TaskInstance(
            kind=TaskKind.STACK_COUNT, image=vec.render(size, size),
            prompt=prompt, answer=Integer(answer), scene=scene,
            seed=sub.next_u64(),
            complexity=complexity_of(TaskKind.STACK_COUNT, knobs),
            knobs=knobs)
    raise GenerationExhausted("stack-count")


# ---------------------------------------------------------------------------
# kind 4: pie chart
# ---------------------------------------------------------------------------

def _pie_scene(percents, colors, cx, cy, r) -> Scene:
    from ..motifs.shapes import sector
    sc = Scene()
    a = -math.pi / 2
    total = float(sum(percents))
    for pct, col in zip(percents, colors):
        sweep = 2 * math.pi * pct / total
        sc.add(sector(cx, cy, r, a, a + sweep, n=max(4, int(24 * sweep))),
               rgba(col))
        a += sweep
    return sc


def _bar_scene(percents, colors, x0, y0, w, h) -> Scene:
    sc = Scene()
    n = len(percents)
    bw = w / (n * 1.5)
    peak = max(percents)
    for i, (pct, col) in enumerate(zip(percents, colors)):
        bx = x0 + i * 1.5 * bw + bw * 0.25
        bh = h * pct / peak
        sc.add(Polygon([(bx, y0 + h - bh), (bx + bw, y0 + h - bh),
                        (bx + bw, y0 + h), (bx, y0 + h)]), rgba(col))
    sc.add_stroke([(x0, y0 + h), (x0 + w, y0 + h)], (90, 90, 90, 255), 1.5)
    return sc


def _legend(canvas, labels, colors, x, y):
    for lab, col in zip(labels, colors):
        sq = Scene()
        sq.add(Polygon([(x, y), (x + 12, y), (x + 12, y + 12), (x, y + 12)]),
               rgba(col))
        sq.render_onto(canvas)
        draw_text(canvas, lab, x + 18, y - 1, 13, INK)
        y += 20


def _gap_percents(rng: SeededRng, k: int) -> list:
    for _ in range(RESAMPLE_BUDGET):
        raw = _gap_measures(rng, k)
        pct = [max(2, round(100 * v / sum(raw))) for v in raw]
        pct[-1] += 100 - sum(pct)
        vals = sorted(pct)
        if all((b - a) / a >= MIN_RELATIVE_GAP for a, b in zip(vals, vals[1:])):
            return pct
    raise GenerationExhausted("gap percents")


def gen_pie_chart(rng: SeededRng, knob: int = None) -> TaskInstance:
    k = knob if knob is not None else rng.randint(3, 6)
    sub = SeededRng(rng.next_u64())
    direction = sub.choice(("ascending", "descending"))
    labels = sub.sample(list(SORT_LABELS), k)
    pct = _gap_percents(sub, k)
    order = sub.sample(range(k), k)
    items = [(labels[i], pct[i]) for i in order]
    colors = pick_distinct_colors(sub, k)
    size = 340
    board = _pie_scene([p for _, p in items], colors,
                       size / 2 - 40, size / 2, 120).render(size, size)
    _legend(board, [lab for lab, _ in items], colors, size - 90, 40)
    extreme = ("smallest to largest" if direction == "ascending"
               else "largest to smallest")
    prompt = render_prompt(TaskKind.PIE_CHART, sub, direction=direction,
                           extreme=extreme)
    scene = {"items": [[lab, p] for lab, p in items]}
    return _ordering_instance(TaskKind.PIE_CHART, sub, board, items,
                              direction, prompt, scene, {"slices": k})


# ---------------------------------------------------------------------------
# kind 5: chart comparison
# ---------------------------------------------------------------------------

def _distinct_percents(rng: SeededRng, k: int) -> list:
    for _ in range(RESAMPLE_BUDGET):
        cuts = sorted(rng.sample(range(4, 97), k - 1))
        parts = [a - b for a, b in zip(cuts + [100], [0] + cuts)]
        if len(set(parts)) == k and min(parts) >= 5:
            return parts
    raise GenerationExhausted("distinct percents")


def _jitter_percents(rng: SeededRng, pct: list) -> list:
    """A wrong vector differing by >= 4 points in some slice, same total."""
    k = len(pct)
    for _ in range(60):
        out = list(pct)
        if rng.random() < 0.5 and k >= 2:
            i, j = rng.sample(range(k), 2)
            out[i], out[j] = out[j], out[i]
        else:
            i, j = rng.sample(range(k), 2)
            d = rng.randint(4, 10)
            if out[i] - d < 3:
                continue
            out[i] -= d
            out[j] += d
        if out != pct and max(abs(a - b) for a, b in zip(out, pct)) >= 4:
            return out
    raise GenerationExhausted("jitter percents")


def gen_chart_comparison(rng: SeededRng, knob: int = None) -> TaskInstance:
    k = knob if knob is not None else rng.randint(3, 6)
    for _ in range(RESAMPLE_BUDGET):
        sub = SeededRng(rng.next_u64())
        pct = _distinct_percents(sub, k)
        colors = pick_distinct_colors(sub, k)
        top_is_pie = sub.random() < 0.5
        vectors = [pct]
        for _ in range(3):
            for _ in range(60):
                v = _jitter_percents(sub, pct)
                if v not in vectors:
                    vectors.append(v)
                    break
        if len(vectors) < 4:
            continue
        osz = 170
        def draw(vec, as_pie, size):
            if as_pie:
                return _pie_scene(vec, colors, size / 2, size / 2,
                                  size * 0.42).render(size, size)
            return _bar_scene(vec, colors, 12, 12, size - 24,
                              size - 30).render(size, size)
        top = draw(pct, top_is_pie, 260)
        payloads, letter = shuffled_options(sub, pct, vectors[1:])
        opts = []
        for i, v in enumerate(payloads):
            opts.append(Option(label="abcd"[i],
                               image=draw(v, not top_is_pie, osz)))
        try:
            assert_image_options_distinct(opts)
        except GenerationExhausted:
            continue
        board = compose_rows(
            [[frame_canvas(top)], labeled_option_row([o.image for o in opts])])
        prompt = render_prompt(TaskKind.CHART_COMPARISON, sub)
        scene = {"percents": pct, "colors": colors,
                 "option_percents": payloads, "top_is_pie": top_is_pie,
                 "correct": letter}
        knobs = {"categories": k}
        return TaskInstance(
            kind=TaskKind.CHART_COMPARISON, image=board, prompt=prompt,
            answer=Letter(letter), scene=scene, seed=sub.next_u64(),
            complexity=complexity_of(TaskKind.CHART_COMPARISON, knobs),
            options=opts, knobs=knobs)
    raise GenerationExhausted("chart-comparison")


def rederive_chart_comparison(scene: dict) -> str:
    matches = [i for i, v in enumerate(scene["option_percents"])
               if list(v) == list(scene["percents"])]
    assert len(matches) == 1
    return "abcd"[matches[0]]
