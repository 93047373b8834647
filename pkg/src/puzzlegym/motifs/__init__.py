"""Motif library: 25 parameterized vector-motif families.

Each family declares an attribute-range table (shipped as JSON so datasets
are auditable), a clamp to force raw attributes into range, and a builder
mapping clamped attributes to a vector :class:`~puzzlegym.raster.Scene`
inside the unit tile. Motifs render to transparent-background RGBA tiles.
"""

from __future__ import annotations

import enum
import importlib.resources
import json
from dataclasses import dataclass, field
from typing import Mapping

from ..canvas import Canvas, apply_d4, bitmap_distance
from ..geometry import D4Element
from ..errors import GenerationExhausted, InvalidAttribute
from ..rng import SeededRng
from . import shapes
from .families import BUILDERS

ASYMMETRY_TOLERANCE = 0.005
RESAMPLE_BUDGET = 200
_ASYMMETRY_CHECK_SIZE = 64


class MotifKind(enum.Enum):
    """The 25 motif families. Values are stable serialized identifiers."""

    ARC = "arc"
    ARROW = "arrow"
    BARS = "bars"
    BITGRID = "bitgrid"
    CLOCK = "clock"
    CONCENTRIC_POLYGON = "concentric-polygon"
    CRESCENT = "crescent"
    DOT = "dot"
    FRACTAL = "fractal"
    GEAR = "gear"
    GLYPH = "glyph"
    ICONS = "icons"
    KEYHOLE = "keyhole"
    LADDER = "ladder"
    PICTOGRAM = "pictogram"
    PINWHEEL_TRIANGLE = "pinwheel-triangle"
    POLYGON = "polygon"
    POLYHEX = "polyhex"
    POLYAMOND = "polyamond"
    POLYLINE = "polyline"
    POLYOMINO = "polyomino"
    RINGS = "rings"
    SEGMENT = "segment"
    STAR_POLYGON = "star-polygon"
    STRIPES = "stripes"


def _load_ranges() -> dict:
    text = (importlib.resources.files("puzzlegym.data") / "motif_ranges.json").read_text()
    return json.loads(text)


_RANGES_DOC = _load_ranges()
ATTRIBUTE_RANGES: dict[str, dict] = _RANGES_DOC["families"]
RANGES_VERSION: str = _RANGES_DOC["version"]


@dataclass(frozen=True)
class MotifSpec:
    """A fully determined motif: family, clamped attributes, and seed."""

    kind: MotifKind
    attributes: Mapping[str, object]
    seed: int

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "attributes": dict(self.attributes),
                "seed": self.seed}

    @classmethod
    def from_json(cls, data: Mapping) -> "MotifSpec":
        kind = MotifKind(data["kind"])
        return cls(kind=kind,
                   attributes=clamp_attributes(kind, dict(data["attributes"])),
                   seed=int(data["seed"]))


@dataclass
class MotifWeights:
    """Per-family sampling weights; at least one must be positive."""

    weights: dict[MotifKind, float] = field(
        default_factory=lambda: {k: 1.0 for k in MotifKind})

    def __post_init__(self) -> None:
        for kind, w in self.weights.items():
            if w < 0:
                raise ValueError(f"negative weight for {kind.value}")
        if not any(w > 0 for w in self.weights.values()):
            raise ValueError("at least one motif weight must be positive")

    @classmethod
    def only(cls, *kinds: MotifKind) -> "MotifWeights":
        return cls({k: 1.0 for k in kinds})


def _clamp_one(decl: Mapping, value):
    typ = decl["type"]
    if typ == "int":
        try:
            v = int(round(float(value)))
        except (TypeError, ValueError):
            v = int(decl["min"])
        return min(max(v, int(decl["min"])), int(decl["max"]))
    if typ == "float":
        try:
            v = float(value)
        except (TypeError, ValueError):
            v = float(decl["min"])
        if v != v:  # NaN
            v = float(decl["min"])
        return min(max(v, float(decl["min"])), float(decl["max"]))
    options = decl["options"]
    return value if value in options else options[0]


def clamp_attributes(kind: MotifKind, raw: Mapping[str, object]) -> dict:
    """Force raw attributes into the family's declared ranges (idempotent)."""
    decls = ATTRIBUTE_RANGES[kind.value]
    out = {}
    for name, value in raw.items():
        if name not in decls:
            raise InvalidAttribute(f"{kind.value} has no attribute {name!r}")
        out[name] = _clamp_one(decls[name], value)
    for name, decl in decls.items():
        if name not in out:
            out[name] = _clamp_one(decl, decl.get("min", None))
    return out


def _sample_attributes(kind: MotifKind, rng: SeededRng) -> dict:
    decls = ATTRIBUTE_RANGES[kind.value]
    attrs = {}
    for name in sorted(decls):
        decl = decls[name]
        if decl["type"] == "int":
            attrs[name] = rng.randint(int(decl["min"]), int(decl["max"]))
        elif decl["type"] == "float":
            attrs[name] = rng.uniform(float(decl["min"]), float(decl["max"]))
        else:
            attrs[name] = rng.choice(decl["options"])
    return attrs


_ASYM_GLYPHS = list("FGJKLPQR2457")


def _nudge_asymmetric(kind: MotifKind, attrs: dict, rng: SeededRng) -> dict:
    """Steer attributes away from constructions that are symmetric by design."""
    a = dict(attrs)
    if kind is MotifKind.ICONS:
        a["icon"] = rng.choice(shapes.ASYM_ICONS)
    elif kind is MotifKind.PICTOGRAM:
        a["name"] = rng.choice(shapes.ASYM_PICTOGRAMS)
    elif kind is MotifKind.GLYPH:
        a["char"] = rng.choice(_ASYM_GLYPHS)
    elif kind is MotifKind.RINGS:
        a["gap_deg"] = rng.uniform(25.0, 80.0)
        a["rot_deg"] = rng.uniform(5.0, 40.0)
    elif kind is MotifKind.GEAR:
        teeth = rng.choice([5, 7, 9, 11, 13])
        a["teeth"] = teeth
        a["phase_deg"] = rng.uniform(5.0, 360.0 / teeth / 2 - 5.0)
    elif kind is MotifKind.DOT:
        a["count"] = max(int(a["count"]), 2)
    elif kind is MotifKind.ARC:
        a["sweep_deg"] = rng.uniform(60.0, 150.0)
        a["start_deg"] = rng.uniform(10.0, 70.0)
    elif kind is MotifKind.CLOCK:
        a["hour_deg"] = rng.uniform(10.0, 80.0)
        a["minute_deg"] = rng.uniform(130.0, 170.0)
    elif kind is MotifKind.SEGMENT:
        a["caps"] = 2
        a["angle_deg"] = rng.uniform(15.0, 75.0)
    elif kind is MotifKind.ARROW:
        a["double"] = 0
        a["rot_deg"] = rng.uniform(10.0, 80.0)
    elif kind is MotifKind.CRESCENT:
        a["rot_deg"] = rng.uniform(10.0, 80.0)
    elif kind is MotifKind.KEYHOLE:
        a["rot_deg"] = rng.uniform(10.0, 80.0)
    elif kind is MotifKind.LADDER:
        a["tilt_deg"] = rng.uniform(10.0, 80.0)
        a["taper"] = max(float(a["taper"]), 0.25)
    elif kind is MotifKind.STAR_POLYGON:
        a["rot_deg"] = rng.uniform(5.0, 30.0)
    elif kind is MotifKind.POLYGON:
        a["sides"] = rng.choice([5, 7])
        a["rot_deg"] = rng.uniform(5.0, 40.0)
        a["jitter"] = max(float(a["jitter"]), 0.15)
    elif kind is MotifKind.CONCENTRIC_POLYGON:
        a["sides"] = rng.choice([5, 7])
        a["rot_offset_deg"] = rng.uniform(10.0, 25.0)
    elif kind is MotifKind.PINWHEEL_TRIANGLE:
        a["blades"] = rng.choice([3, 5])
    elif kind is MotifKind.FRACTAL:
        a["rot_deg"] = rng.uniform(10.0, 80.0)
    elif kind is MotifKind.STRIPES:
        # Axis/diagonal angles keep a D4 mirror; oblique angles do not.
        a["angle"] = rng.choice([30, 60, 120, 150])
        a["accent"] = 1
    return a


def motif_scene(spec: MotifSpec):
    """Build the unit-tile vector scene for a spec (deterministic)."""
    rng = SeededRng(spec.seed).split(f"motif:{spec.kind.value}")
    return BUILDERS[spec.kind.value](spec.attributes, rng)


def render_motif(spec: MotifSpec, size: int) -> Canvas:
    """Render a spec to a size×size RGBA tile with transparent background."""
    scene = motif_scene(spec).scaled(float(size))
    return scene.render(size, size)


def is_asymmetric(spec: MotifSpec,
                  tolerance: float = ASYMMETRY_TOLERANCE,
                  size: int = _ASYMMETRY_CHECK_SIZE) -> bool:
    """True if the tile differs from all 8 nontrivial D4 images of itself."""
    tile = render_motif(spec, size)
    for op in D4Element:
        if op is D4Element.IDENTITY:
            continue
        if bitmap_distance(tile, apply_d4(op, tile)) <= tolerance:
            return False
    return True


def sample_motif(weights: MotifWeights, rng: SeededRng,
                 require_asymmetric: bool = False) -> MotifSpec:
    """Draw a motif spec with kind probability proportional to weights.

    With ``require_asymmetric`` the attributes are steered away from
    symmetric constructions and the rendered tile is verified to fail all
    nontrivial D4 invariance checks; raises :class:`GenerationExhausted`
    if no asymmetric draw is found within the resample budget.
    """
    kinds = [k for k, w in weights.weights.items() if w > 0]
    ws = [weights.weights[k] for k in kinds]
    budget = RESAMPLE_BUDGET if require_asymmetric else 1
    for attempt in range(budget):
        sub = rng.split(f"draw:{attempt}")
        kind = sub.weighted_choice(kinds, ws)
        attrs = _sample_attributes(kind, sub.split("attrs"))
        if require_asymmetric:
            attrs = _nudge_asymmetric(kind, attrs, sub.split("nudge"))
        spec = MotifSpec(kind=kind, attributes=clamp_attributes(kind, attrs),
                         seed=sub.split("seed").randint(0, 2**63 - 1))
        if not require_asymmetric or is_asymmetric(spec):
            return spec
    raise GenerationExhausted(
        f"no asymmetric motif found in {RESAMPLE_BUDGET} resamples")


__all__ = [
    "MotifKind", "MotifSpec", "MotifWeights", "ATTRIBUTE_RANGES",
    "RANGES_VERSION", "ASYMMETRY_TOLERANCE", "RESAMPLE_BUDGET",
    "clamp_attributes", "sample_motif", "render_motif", "motif_scene",
    "is_asymmetric",
]
