"""Content popularity, cache placement, and request-pair classification.

Files 1..T are requested independently by both vehicles under a Zipf law.
Both vehicles cache the same kappa most popular files.  A request pair maps
to exactly one tag:

* COMMON_REQUEST  both vehicles ask for the same file (checked first)
* SELF_HIT_*      a vehicle's own request sits in its own cache
* A / B / C / D   distinct, un-self-cached requests, split by whether each
                  vehicle holds the file the *other* one wants (A: both do,
                  B: only vehicle 1, C: only vehicle 2, D: neither)
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Catalog",
    "CacheCase",
    "zipf_popularity",
    "populate_cache",
    "classify_case",
    "case_distribution",
]


@dataclass(frozen=True)
class Catalog:
    """File catalog size, Zipf exponent, and per-vehicle cache size."""

    num_files: int
    zeta: float
    cache_size: int

    def __post_init__(self):
        if not (isinstance(self.num_files, int) and self.num_files >= 1):
            raise ValueError(f"num_files must be an integer >= 1, got {self.num_files!r}")
        if not (math.isfinite(self.zeta) and self.zeta >= 0.0):
            raise ValueError(f"zeta must be finite and >= 0, got {self.zeta!r}")
        if not (isinstance(self.cache_size, int) and 0 <= self.cache_size <= self.num_files):
            raise ValueError(
                f"cache_size must be an integer in [0, num_files], got {self.cache_size!r}"
            )


class CacheCase(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    SELF_HIT_1 = "SelfHit1"
    SELF_HIT_2 = "SelfHit2"
    SELF_HIT_BOTH = "SelfHitBoth"
    COMMON_REQUEST = "CommonRequest"


def zipf_popularity(catalog: Catalog) -> np.ndarray:
    """Request probabilities q_t = t^(-zeta) / sum_i i^(-zeta), t = 1..T."""
    ranks = np.arange(1, catalog.num_files + 1, dtype=float)
    weights = ranks ** (-catalog.zeta)
    return weights / weights.sum()


def populate_cache(catalog: Catalog) -> frozenset:
    """Most-popular placement: both vehicles hold files {1, ..., cache_size}."""
    return frozenset(range(1, catalog.cache_size + 1))


def classify_case(req1: int, req2: int, cache1, cache2) -> CacheCase:
    """Map one request pair to its transmission scenario tag."""
    if req1 == req2:
        return CacheCase.COMMON_REQUEST
    hit1 = req1 in cache1
    hit2 = req2 in cache2
    if hit1 and hit2:
        return CacheCase.SELF_HIT_BOTH
    if hit1:
        return CacheCase.SELF_HIT_1
    if hit2:
        return CacheCase.SELF_HIT_2
    cross1 = req2 in cache1  # vehicle 1 holds what vehicle 2 wants
    cross2 = req1 in cache2  # vehicle 2 holds what vehicle 1 wants
    if cross1 and cross2:
        return CacheCase.A
    if cross1:
        return CacheCase.B
    if cross2:
        return CacheCase.C
    return CacheCase.D


def case_distribution(catalog: Catalog) -> dict:
    """Exact tag probabilities under i.i.d. Zipf requests.

    Plain double sum over the T x T request pairs; probabilities sum to one
    up to rounding.
    """
    q = zipf_popularity(catalog)
    cache = populate_cache(catalog)
    dist = {case: 0.0 for case in CacheCase}
    for i in range(1, catalog.num_files + 1):
        qi = q[i - 1]
        for j in range(1, catalog.num_files + 1):
            dist[classify_case(i, j, cache, cache)] += qi * q[j - 1]
    return dist
