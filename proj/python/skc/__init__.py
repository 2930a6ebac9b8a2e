"""Python bindings for the Serverless Kernel Calculus engine."""

import json

from . import _skc
from ._skc import SkcError, alpha_eq, canonical_key, congruent, pretty_program, pretty_term

__all__ = [
    "SkcError",
    "alpha_eq",
    "canonical_key",
    "congruent",
    "explore",
    "parse",
    "pretty_program",
    "pretty_term",
    "run",
]


def parse(src: str) -> dict:
    """Desugared program as {defs, events, main}."""
    return json.loads(_skc.parse_json(src))


def run(src: str, strategy: str = "det", seed: int = 0, max_steps: int = 100000, trace: bool = False) -> dict:
    if strategy not in ("det", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    return json.loads(_skc.run_json(src, strategy, seed, max_steps, trace))


def explore(src: str, max_states: int = 50000, max_depth: int = 500) -> dict:
    return json.loads(_skc.explore_json(src, max_states, max_depth))
