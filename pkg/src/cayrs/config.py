"""Shared numeric configuration for the whole engine.

All geometric tolerances live in one record so that every module resolves
"close to zero" the same way.  Scale-dependent tolerances are stated as
relative factors; the absolute value is obtained by multiplying with the
linkage scale (the sum of all bar lengths) or its square for quantities
with squared-length units.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

_MAX_TYPES_ENV = "CAYRS_MAX_TYPES"


@dataclass(frozen=True)
class EngineConfig:
    # discriminant clamp: values >= -tol_geom * scale^2 are treated as 0
    tol_geom: float = 1e-12
    # relative collinearity threshold for orientation signs
    tol_collinear: float = 1e-9
    # absolute endpoint bisection tolerance, times scale
    tol_endpoint_bisect: float = 1e-10
    # candidate endpoints closer than this (times scale) are merged
    tol_endpoint_merge: float = 1e-7
    # endpoint matching tolerance for interval linking, times scale
    tol_link: float = 1e-6
    # initial scan grid resolution over (0, sum of bar lengths]
    grid_points: int = 1024
    # cap on the number of canonical realization types enumerated
    max_types: int = 2**20
    # default number of samples per motion leg
    samples_per_leg: int = 64

    def with_overrides(self, **kwargs) -> "EngineConfig":
        return replace(self, **kwargs)

    def type_cap(self) -> int:
        """Effective cap on enumerated canonical types (env overrides)."""
        raw = os.environ.get(_MAX_TYPES_ENV)
        if raw is not None:
            try:
                return int(raw)
            except ValueError:
                pass
        return self.max_types


DEFAULT_CONFIG = EngineConfig()
