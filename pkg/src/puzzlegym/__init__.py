"""Procedural generator-verifier gym for visual perception puzzles."""

__version__ = "0.1.0"
