"""Shared named color palette used by prompts and renderers."""

from __future__ import annotations

# Distinct, high-contrast palette; names appear verbatim in prompts along
# with their hex codes.
PALETTE = [
    ("red", "#e6194b"),
    ("green", "#3cb44b"),
    ("yellow", "#ffe119"),
    ("blue", "#4363d8"),
    ("orange", "#f58231"),
    ("purple", "#911eb4"),
    ("cyan", "#46f0f0"),
    ("magenta", "#f032e6"),
    ("lime", "#bfef45"),
    ("pink", "#fabed4"),
    ("teal", "#469990"),
    ("brown", "#9a6324"),
    ("navy", "#000075"),
    ("gray", "#a9a9a9"),
]

COLOR_NAMES = [name for name, _ in PALETTE]


def hex_to_rgba(hex_code: str, alpha: int = 255) -> tuple:
    h = hex_code.lstrip("#")
    return (int(h[0:2], 16), int(h[2:4], 16), int(h[4:6], 16), alpha)


def color_rgba(index_or_name, alpha: int = 255) -> tuple:
    if isinstance(index_or_name, str):
        for name, code in PALETTE:
            if name == index_or_name:
                return hex_to_rgba(code, alpha)
        raise KeyError(index_or_name)
    name, code = PALETTE[index_or_name % len(PALETTE)]
    return hex_to_rgba(code, alpha)


def color_name(index: int) -> str:
    return PALETTE[index % len(PALETTE)][0]


def color_hex(index: int) -> str:
    return PALETTE[index % len(PALETTE)][1]
