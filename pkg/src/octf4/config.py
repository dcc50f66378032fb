"""Numerical tolerances and run configuration.

All comparisons in the package are floating point; the algebraic
statements being checked are low-degree polynomial identities, so a
single global tolerance ladder is enough.  Classification must be more
permissive than final acceptance, otherwise reductions flap between
branches near isotropic boundaries.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace

ENV_SEED = "OCTF4_SEED"


@dataclass(frozen=True)
class Tolerances:
    abs_tol: float = 1e-9
    rel_tol: float = 1e-9
    classify: float = 1e-7
    accept: float = 1e-8

    def __post_init__(self):
        for name in ("abs_tol", "rel_tol", "classify", "accept"):
            if getattr(self, name) <= 0:
                raise ValueError(f"tolerance {name} must be positive")
        if self.classify < self.accept:
            raise ValueError("classify tolerance must be >= accept tolerance")


@dataclass(frozen=True)
class Config:
    tol: Tolerances = Tolerances()
    seed: int = 0
    samples: int = 100

    @classmethod
    def from_file(cls, path: str) -> "Config":
        with open(path) as fh:
            raw = json.load(fh)
        tol = Tolerances(**raw.get("tol", {}))
        return cls(tol=tol, seed=int(raw.get("seed", 0)),
                   samples=int(raw.get("samples", 100)))

    def with_seed(self, seed: int | None) -> "Config":
        if seed is not None:
            return replace(self, seed=int(seed))
        env = os.environ.get(ENV_SEED)
        if env is not None:
            return replace(self, seed=int(env))
        return self


DEFAULT_TOL = Tolerances()
