"""Size bounds for the factorial-scale computations.

Everything here is exact arithmetic, so cost explodes combinatorially with
the inputs.  Every expensive operation checks an explicit bound and raises
``BoundExceededError`` instead of truncating silently.  Defaults are chosen
so the full default verification battery finishes in minutes.

A JSON config file can override the defaults; its path is taken from the
``YOUNGQUIVER_CONFIG`` environment variable (keys matching ``Bounds`` field
names).
"""

import json
import os
from dataclasses import dataclass, fields, replace

ENV_CONFIG_PATH = "YOUNGQUIVER_CONFIG"


class BoundExceededError(ValueError):
    """A requested computation exceeds the configured size bound."""


@dataclass(frozen=True)
class Bounds:
    # partitions_of, quiver slices, sign tables
    max_partition_size: int = 30
    # standard tableau enumeration
    max_tableau_size: int = 9
    # group algebra elements of S_n; 7 is opt-in via config override
    max_group_degree: int = 6
    # idempotent-rank computations happen inside C[S_{n+1}]
    max_direct_hom_degree: int = 4
    # character-pairing multiplicities, bound on n+m
    max_induction_degree: int = 12
    max_resolution_depth: int = 12
    max_qdual_size: int = 12


DEFAULT_BOUNDS = Bounds()


def check_bound(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise BoundExceededError(f"{what} {value} exceeds configured bound {limit}")


def load_bounds(path: str | None = None) -> Bounds:
    """Bounds from a JSON file, falling back to defaults.

    With no explicit ``path``, the ``YOUNGQUIVER_CONFIG`` environment
    variable is consulted; if it is unset the defaults are returned.
    """
    if path is None:
        path = os.environ.get(ENV_CONFIG_PATH)
    if not path:
        return DEFAULT_BOUNDS
    with open(path, encoding="utf-8") as handle:
        raw = json.load(handle)
    known = {f.name for f in fields(Bounds)}
    unknown = set(raw) - known
    if unknown:
        raise ValueError(f"unknown bound names in {path}: {sorted(unknown)}")
    return replace(DEFAULT_BOUNDS, **raw)
