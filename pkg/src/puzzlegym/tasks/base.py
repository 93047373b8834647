"""Shared task-instance model: answers, options, complexity knobs."""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import dataclass, field

from ..canvas import Canvas, bitmap_distance, blit
from ..colors import color_hex, color_name, color_rgba
from ..errors import GenerationExhausted, InvalidSpec
from ..fonts import draw_text, text_width
from ..raster import Scene
from ..rng import SeededRng

RESAMPLE_BUDGET = 200
OPTION_DISTANCE = 0.01          # minimum pairwise bitmap distance for images
MIN_RELATIVE_GAP = 0.15         # sortable measures
EASY_HARD_SPLIT = 0.75


class TaskKind(enum.Enum):
    POSITIONAL_COUNT = 1
    SHAPE_SORTING = 2
    STACK_COUNT = 3
    PIE_CHART = 4
    CHART_COMPARISON = 5
    VENN_DIAGRAM = 6
    SHAPE_COUNTING = 7
    TILES_LINE_LENGTH = 8
    TILES_LINE_INTERSECTIONS = 9
    TILES_RECOLORING = 10
    MIRROR_IDENTIFICATION = 11
    SYMMETRY_FILL = 12
    FRIEZE_GROUPS = 13
    WALLPAPER_GROUPS = 14
    TRANSFORM_RESULT_IDENTIFY = 15
    TRANSFORM_PAIR_INFER = 16
    TRANSFORM_SIMILARITY_IDENTIFY = 17
    SEQUENCE_ROTATION = 18
    SEQUENCE_ARITHMETIC = 19
    SEQUENCE_MULTI_COLUMN_ARITHMETIC = 20
    TILES_GEOMETRY = 21
    TILES_CONNECTED_COMPONENT = 22
    TILES_SHORTEST_PATH = 23
    MISSING_TILES = 24
    TILES_COMPOSITION = 25

    @property
    def slug(self) -> str:
        return self.name.lower().replace("_", "-")


_FAMILY_RANGES = (
    ("geometric", 1, 5),
    ("counting", 6, 10),
    ("symmetry", 11, 14),
    ("sequence", 15, 20),
    ("topological", 21, 25),
)

FAMILIES = {
    kind: name
    for kind in TaskKind
    for name, lo, hi in _FAMILY_RANGES
    if lo <= kind.value <= hi
}

# Held out of the train-iid split for out-of-distribution evaluation.
OOD_KINDS = frozenset({
    TaskKind.POSITIONAL_COUNT,
    TaskKind.TILES_RECOLORING,
    TaskKind.WALLPAPER_GROUPS,
    TaskKind.SEQUENCE_MULTI_COLUMN_ARITHMETIC,
    TaskKind.TILES_COMPOSITION,
})

IID_KINDS = frozenset(set(TaskKind) - OOD_KINDS)


# ---------------------------------------------------------------------------
# Answers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Integer:
    value: int


@dataclass(frozen=True)
class Letter:
    value: str

    def __post_init__(self):
        if self.value.lower() not in "abcdef" or len(self.value) != 1:
            raise InvalidSpec(f"letter out of range: {self.value!r}")


@dataclass(frozen=True)
class Ordering:
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels",
                           tuple(str(x).strip().lower() for x in self.labels))


Answer = (Integer, Letter, Ordering)


def answer_to_json(a):
    if isinstance(a, Integer):
        return {"type": "integer", "value": a.value}
    if isinstance(a, Letter):
        return {"type": "letter", "value": a.value.lower()}
    if isinstance(a, Ordering):
        return {"type": "ordering", "value": list(a.labels)}
    raise InvalidSpec(f"not an answer: {a!r}")


def answer_from_json(d):
    t = d["type"]
    if t == "integer":
        return Integer(int(d["value"]))
    if t == "letter":
        return Letter(d["value"])
    if t == "ordering":
        return Ordering(tuple(d["value"]))
    raise InvalidSpec(f"unknown answer type {t!r}")


def answers_equal(a, b) -> bool:
    if isinstance(a, Integer) and isinstance(b, Integer):
        return a.value == b.value
    if isinstance(a, Letter) and isinstance(b, Letter):
        return a.value.lower() == b.value.lower()
    if isinstance(a, Ordering) and isinstance(b, Ordering):
        return a.labels == b.labels
    return False


# ---------------------------------------------------------------------------
# Options
# ---------------------------------------------------------------------------

OPTION_LABELS = "abcdef"


@dataclass
class Option:
    """One labeled multiple-choice option: either text or an image."""

    label: str
    text: str = None
    image: Canvas = None

    @property
    def is_image(self) -> bool:
        return self.image is not None


def assert_image_options_distinct(options, delta: float = OPTION_DISTANCE):
    imgs = [o for o in options if o.is_image]
    for i in range(len(imgs)):
        for j in range(i + 1, len(imgs)):
            if bitmap_distance(imgs[i].image, imgs[j].image) <= delta:
                raise GenerationExhausted(
                    f"options {imgs[i].label}/{imgs[j].label} too similar")


@dataclass
class TaskInstance:
    kind: TaskKind
    image: Canvas
    prompt: str
    answer: object
    scene: dict
    seed: int
    complexity: float = None      # None for kinds where c is undefined
    options: list = field(default_factory=list)
    knobs: dict = field(default_factory=dict)

    @property
    def family(self) -> str:
        return FAMILIES[self.kind]

    @property
    def id(self) -> str:
        payload = json.dumps(
            {"kind": self.kind.value, "seed": self.seed,
             "scene": self.scene}, sort_keys=True, default=str)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# Complexity
# ---------------------------------------------------------------------------

class InvalidKnobs(InvalidSpec):
    pass


@dataclass(frozen=True)
class KnobSpec:
    name: str
    lo: float
    hi: float
    reversed: bool = False       # c decreases as the knob increases


# Primary difficulty knob per complexity-bearing kind.  The eight kinds
# absent from this table report an undefined complexity: their apparent
# difficulty depends on motif geometry and arrangement, not on a scalar.
COMPLEXITY_KNOBS = {
    TaskKind.POSITIONAL_COUNT: KnobSpec("references", 1, 4),
    TaskKind.SHAPE_SORTING: KnobSpec("items", 3, 6),
    TaskKind.STACK_COUNT: KnobSpec("sheets", 3, 6),
    TaskKind.PIE_CHART: KnobSpec("slices", 3, 6),
    TaskKind.CHART_COMPARISON: KnobSpec("categories", 3, 6),
    TaskKind.VENN_DIAGRAM: KnobSpec("rectangles", 2, 4),
    TaskKind.TILES_LINE_LENGTH: KnobSpec("grid", 3, 8),
    TaskKind.TILES_LINE_INTERSECTIONS: KnobSpec("intersections", 0, 8),
    TaskKind.TILES_RECOLORING: KnobSpec("differing_cells", 1, 10),
    TaskKind.SEQUENCE_ROTATION: KnobSpec("rotation_step", 30, 90, reversed=True),
    TaskKind.SEQUENCE_ARITHMETIC: KnobSpec("max_count", 3, 10),
    TaskKind.SEQUENCE_MULTI_COLUMN_ARITHMETIC: KnobSpec("columns", 2, 6),
    TaskKind.TILES_GEOMETRY: KnobSpec("grid", 3, 8),
    TaskKind.TILES_CONNECTED_COMPONENT: KnobSpec("components", 1, 8),
    TaskKind.TILES_SHORTEST_PATH: KnobSpec("grid", 3, 8),
    TaskKind.MISSING_TILES: KnobSpec("grid", 3, 6),
    TaskKind.TILES_COMPOSITION: KnobSpec("pieces", 2, 4),
}

COMPLEXITY_UNDEFINED = frozenset(set(TaskKind) - set(COMPLEXITY_KNOBS))


def complexity_of(kind: TaskKind, knobs: dict):
    """Normalized difficulty c in [0,1], or None for excluded kinds."""
    spec = COMPLEXITY_KNOBS.get(kind)
    if spec is None:
        return None
    if spec.name not in knobs:
        raise InvalidKnobs(f"{kind.slug} requires knob {spec.name!r}")
    v = float(knobs[spec.name])
    if not (spec.lo <= v <= spec.hi):
        raise InvalidKnobs(
            f"{spec.name}={v} outside [{spec.lo}, {spec.hi}]")
    c = (v - spec.lo) / (spec.hi - spec.lo)
    if spec.reversed:
        c = 1.0 - c
    return c


def knob_from_complexity(kind: TaskKind, c: float):
    """Invert complexity_of onto the nearest integer knob value."""
    spec = COMPLEXITY_KNOBS[kind]
    if not 0.0 <= c <= 1.0:
        raise InvalidKnobs(f"c={c} outside [0, 1]")
    t = 1.0 - c if spec.reversed else c
    return round(spec.lo + t * (spec.hi - spec.lo))


def difficulty_bin(c) -> str:
    if c is None:
        return "undefined"
    return "hard" if c >= EASY_HARD_SPLIT else "easy"


# ---------------------------------------------------------------------------
# Layout helpers
# ---------------------------------------------------------------------------

INK = (40, 40, 40, 255)
FRAME = (120, 120, 120, 255)
GRID_LINE = (205, 215, 235, 255)


def graph_paper(width: int, height: int, spacing: int = 24) -> Canvas:
    c = Canvas.blank(width, height)
    px = c.pixels
    for x in range(0, width, spacing):
        px[:, x] = GRID_LINE
    for y in range(0, height, spacing):
        px[y, :] = GRID_LINE
    return c


def frame_canvas(c: Canvas, color=FRAME, thickness: int = 2) -> Canvas:
    out = c.copy()
    px = out.pixels
    t = thickness
    px[:t, :] = color
    px[-t:, :] = color
    px[:, :t] = color
    px[:, -t:] = color
    return out


def label_strip(width: int, label: str, height: int = 26) -> Canvas:
    c = Canvas.blank(width, height)
    text = f"({label})"
    size = 16
    x = (width - text_width(text, size)) / 2
    draw_text(c, text, x, 5, size, INK)
    return c


def compose_rows(rows, pad: int = 10, background=(255, 255, 255, 255)) -> Canvas:
    """Stack rows of canvases; each row is laid out left to right."""
    row_sizes = []
    for row in rows:
        w = sum(c.width for c in row) + pad * (len(row) + 1)
        h = max(c.height for c in row) + pad
        row_sizes.append((w, h))
    width = max(w for w, _ in row_sizes)
    height = sum(h for _, h in row_sizes) + pad
    out = Canvas.blank(width, height, background)
    y = pad
    for row, (w, h) in zip(rows, row_sizes):
        x = (width - (w - 2 * pad)) // 2
        for c in row:
            blit(out, c, x, y)
            x += c.width + pad
        y += h
    return out


def labeled_option_row(canvases, labels=OPTION_LABELS) -> list:
    """Frame each option image and put its letter underneath."""
    cells = []
    for c, lab in zip(canvases, labels):
        framed = frame_canvas(c)
        tag = label_strip(framed.width, lab)
        cell = Canvas.blank(framed.width, framed.height + tag.height)
        blit(cell, framed, 0, 0)
        blit(cell, tag, 0, framed.height)
        cells.append(cell)
    return cells


def shuffled_options(rng: SeededRng, correct, distractors):
    """Shuffle [correct] + distractors; return (items, correct_letter)."""
    items = [("correct", correct)] + [("d", d) for d in distractors]
    rng.shuffle(items)
    letter = None
    for i, (tag, _) in enumerate(items):
        if tag == "correct":
            letter = OPTION_LABELS[i]
    return [payload for _, payload in items], letter


def color_phrase(index: int) -> str:
    return f"{color_name(index)} ({color_hex(index)})"


def scene_canvas(scene: Scene, width: int, height: int) -> Canvas:
    return scene.render(width, height)


def pick_distinct_colors(rng: SeededRng, n: int) -> list:
    from ..colors import PALETTE
    return rng.sample(range(len(PALETTE)), n)


def rgba(index: int, alpha: int = 255):
    return color_rgba(index, alpha)
