"""Decompositions of complete symmetric digraphs into oriented heptagons."""

import json as _json

try:
    from ._heptad import classes, fixtures, generate, plan, spectrum, verify
except ImportError:  # running against a build tree
    from _heptad import classes, fixtures, generate, plan, spectrum, verify

__all__ = [
    "classes",
    "fixtures",
    "generate",
    "plan",
    "plan_tree",
    "spectrum",
    "verify",
]


def plan_tree(v, cls):
    """The construction tree as nested dicts."""
    return _json.loads(plan(v, cls))
