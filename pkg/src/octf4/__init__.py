"""Octonionic Jordan-algebra cone reductions and F4 representation data."""

from .config import Config, Tolerances, DEFAULT_TOL
from .jordan import (HermMat3, NotOnVarietyError, cone_membership, decompose,
                     differential_kernel, jordan_product, trace)
from .normalize import (RealHermMat3, ReductionError, ReductionTrace,
                        branch_samples, canonical_complex, canonical_real,
                        classify, reduce_real, reduce_to_canonical,
                        sample_orbit, sample_real_orbit, verify_trace)
from .rootdata import parabolic_dims, weyl_dim
from .spin import (F4Element, GeneratorWord, SpinGenerator, apply_generator,
                   conjugation_oracle)

__all__ = [
    "Config", "Tolerances", "DEFAULT_TOL",
    "HermMat3", "NotOnVarietyError", "cone_membership", "decompose",
    "differential_kernel", "jordan_product", "trace",
    "RealHermMat3", "ReductionError", "ReductionTrace", "branch_samples",
    "canonical_complex", "canonical_real", "classify", "reduce_real",
    "reduce_to_canonical", "sample_orbit", "sample_real_orbit", "verify_trace",
    "parabolic_dims", "weyl_dim",
    "F4Element", "GeneratorWord", "SpinGenerator", "apply_generator",
    "conjugation_oracle",
]
