"""Prompt template banks, shipped as data for auditability."""

from __future__ import annotations

import json
import re
from importlib import resources

from ..rng import SeededRng
from .base import TaskKind

with resources.files("puzzlegym.data").joinpath("prompts.json").open() as f:
    _DATA = json.load(f)

PROMPT_BANKS = _DATA["banks"]
PROMPTS_VERSION = _DATA["version"]

_PLACEHOLDER = re.compile(r"(?<!\{)\{[a-z_]+\}(?!\})")


def render_prompt(kind: TaskKind, rng: SeededRng, **fields) -> str:
    bank = PROMPT_BANKS[kind.slug]
    template = rng.choice(bank)
    text = template.format(**fields)
    leftover = _PLACEHOLDER.search(text)
    if leftover:
        raise KeyError(f"unfilled placeholder {leftover.group()} for {kind.slug}")
    return text
