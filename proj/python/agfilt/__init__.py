"""Exact filtration chains of evaluation codes on P^1 and elliptic curves.

Thin python layer over the C++ core. Everything computational lives in
``agfilt._core``; this package re-exports it and adds a couple of
convenience helpers.
"""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import reproduce_json as _reproduce_json


def reproduce(seed=42, distance_cap=100_000_000, subset_cap=10_000_000):
    """Run every built-in claim check; returns the report as a list of dicts."""
    return _json.loads(_reproduce_json(seed, distance_cap, subset_cap))
