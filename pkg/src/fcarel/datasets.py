"""Small built-in contexts used throughout the docs, demos and tests.

* ``water4``: four living beings (Bream, Frog, Dog, Spike-weed) described
  by four attributes; six concepts with extent mass 11.
* ``water6``: the six-object, nine-attribute variant of the same data.
* ``greedy_trap``: a 4x4 context on which the best singleton attribute is
  not part of the best pair, so greedy relevance selection is led astray.
"""

from __future__ import annotations

from importlib import resources

from .context import FormalContext
from .io import parse_context

_NAMES = ("water4", "water6", "greedy_trap")


def _load(name: str) -> FormalContext:
    data = resources.files(__package__).joinpath(f"data/{name}.cxt").read_bytes()
    return parse_context(data, "cxt")


def water4() -> FormalContext:
    return _load("water4")


def water6() -> FormalContext:
    return _load("water6")


def greedy_trap() -> FormalContext:
    return _load("greedy_trap")


def fixture_bytes(name: str) -> bytes:
    """Raw cxt bytes of a built-in context (for writing fixture files)."""
    if name not in _NAMES:
        raise KeyError(f"unknown fixture {name!r}; available: {_NAMES}")
    return resources.files(__package__).joinpath(f"data/{name}.cxt").read_bytes()
