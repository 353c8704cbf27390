"""Exact computations with equivariant formal groups on embeddable multicurves."""

import json

from . import _efgc
from ._efgc import EfgcError, commands, describe_ring, residue

__all__ = ["EfgcError", "commands", "describe_ring", "render", "residue", "run"]


def run(command, spec=None, *, max_n=4, negative=False, expr=None, num=None, den=None, ring=None, suite="all"):
    """Run an efgc command. Returns (document, exit_code)."""
    text, code = _efgc.run(command, None if spec is None else str(spec), max_n, negative, expr, num, den, ring, suite)
    return json.loads(text), code


def render(document, fmt="json"):
    return _efgc.render(json.dumps(document), fmt)
