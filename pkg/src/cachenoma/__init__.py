"""Cache-aided NOMA decoding analysis over cascaded Nakagami-m links.

The package computes, optimizes, and Monte-Carlo-validates the probability
that two vehicles successfully decode files sent by superposition coding
from a base station, when each vehicle may hold cached copies that let it
cancel interference.  Channels are modeled as double (cascaded) Nakagami-m
fading; all special functions and quadrature are implemented here, with an
optional compiled kernel selected at import time.
"""
from .backend import active_backend
from .caching import CacheCase, Catalog, case_distribution, zipf_popularity
from .channel import DoubleNakagamiParams, LinkGeometry
from .config import ScenarioConfig, load_config, parse_config
from .errors import QuadratureAccuracyError
from .mc import McConfig, mc_case, mc_chain_probability, mc_split
from .noma_full import (
    DecodeChain,
    FullScenario,
    SinrCondition,
    average_success,
    case_chains,
    case_objective,
    chain_probability,
    conventional_noma_success,
    gain_threshold,
    oma_average_success,
    oma_success,
    success_case_a,
    success_case_b,
    success_case_c,
    success_case_d,
)
from .noma_split import (
    SplitAllocation,
    SplitScenario,
    split_objective,
    split_objective_branch,
)
from .optimizer import (
    OptResult,
    check_concavity,
    maximize_1d,
    optimize_case,
    optimize_split,
)
from .specfun import QuadratureSpec, adaptive_quad, bessel_k, ln_gamma

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "active_backend",
    "CacheCase",
    "Catalog",
    "case_distribution",
    "zipf_popularity",
    "DoubleNakagamiParams",
    "LinkGeometry",
    "ScenarioConfig",
    "load_config",
    "parse_config",
    "QuadratureAccuracyError",
    "McConfig",
    "mc_case",
    "mc_chain_probability",
    "mc_split",
    "DecodeChain",
    "FullScenario",
    "SinrCondition",
    "average_success",
    "case_chains",
    "case_objective",
    "chain_probability",
    "conventional_noma_success",
    "gain_threshold",
    "oma_average_success",
    "oma_success",
    "success_case_a",
    "success_case_b",
    "success_case_c",
    "success_case_d",
    "SplitAllocation",
    "SplitScenario",
    "split_objective",
    "split_objective_branch",
    "OptResult",
    "check_concavity",
    "maximize_1d",
    "optimize_case",
    "optimize_split",
    "QuadratureSpec",
    "adaptive_quad",
    "bessel_k",
    "ln_gamma",
]
