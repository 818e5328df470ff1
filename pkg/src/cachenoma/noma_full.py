"""Success probabilities for full-file caching, cases A-D.

The base station superimposes the two requested files with power split
alpha / (1 - alpha).  Each vehicle decodes through an ordered chain of SINR
conditions on its own squared channel gain; a cached copy of the other
vehicle's file lets a receiver cancel that component before decoding.

Branch convention: alpha = 0.5 belongs to the low branch (alpha <= 0.5).

Two ways to turn a multi-condition chain into a probability are supported:

* ``product``  multiply the marginal survival of every condition, treating
               the conditions as if they were met on independent draws;
* ``joint``    require one draw to satisfy every condition, i.e. survive the
               largest of the per-condition gain thresholds.

``joint`` is never below ``product`` because the conditions are coupled
through the same gain.
"""
import math
from dataclasses import dataclass

from .caching import CacheCase, case_distribution
from .channel import (
    DoubleNakagamiParams,
    LinkGeometry,
    effective_scale,
    survival_gain_sq,
)

__all__ = [
    "SEMANTICS",
    "FullScenario",
    "SinrCondition",
    "DecodeChain",
    "gain_threshold",
    "chain_probability",
    "case_chains",
    "success_case_a",
    "success_case_b",
    "success_case_c",
    "success_case_d",
    "conventional_noma_success",
    "oma_success",
    "case_objective",
    "single_user_success",
    "average_success",
    "oma_average_success",
]

SEMANTICS = ("product", "joint")


@dataclass(frozen=True)
class FullScenario:
    """Full-file transmission setup for the two-vehicle downlink."""

    power: float
    sigma1_sq: float
    sigma2_sq: float
    gamma1: float
    gamma2: float
    chan1: DoubleNakagamiParams
    chan2: DoubleNakagamiParams
    geom1: LinkGeometry
    geom2: LinkGeometry
    semantics: str = "product"

    def __post_init__(self):
        for name in ("power", "sigma1_sq", "sigma2_sq", "gamma1", "gamma2"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be finite and positive, got {v!r}")
        if self.semantics not in SEMANTICS:
            raise ValueError(
                f"semantics must be one of {SEMANTICS}, got {self.semantics!r}"
            )


@dataclass(frozen=True)
class SinrCondition:
    """One SINR requirement: signal_coef g^2 / (interference_coef g^2 + noise) > threshold."""

    signal_coef: float
    interference_coef: float
    noise: float
    threshold: float

    def __post_init__(self):
        if self.signal_coef < 0.0 or self.interference_coef < 0.0:
            raise ValueError("power coefficients must be nonnegative")
        if not self.noise > 0.0:
            raise ValueError("noise must be positive")
        if not self.threshold > 0.0:
            raise ValueError("threshold must be positive")


@dataclass(frozen=True)
class DecodeChain:
    """Ordered SINR conditions evaluated against one squared gain."""

    conditions: tuple

    def __post_init__(self):
        if len(self.conditions) == 0:
            raise ValueError("a decode chain needs at least one condition")
        for c in self.conditions:
            if not isinstance(c, SinrCondition):
                raise TypeError("conditions must be SinrCondition instances")


def gain_threshold(signal_coef, interference_coef, noise, threshold):
    """Smallest g^2 satisfying the SINR condition, or None when impossible.

    S g^2 / (I g^2 + N) > t  <=>  g^2 (S - t I) > t N, solvable only when
    S > t I.
    """
    margin = signal_coef - threshold * interference_coef
    if margin <= 0.0:
        return None
    return threshold * noise / margin


def _chain_thresholds(chain: DecodeChain):
    """Per-condition gain thresholds; None if any condition is impossible."""
    out = []
    for c in chain.conditions:
        t = gain_threshold(c.signal_coef, c.interference_coef, c.noise, c.threshold)
        if t is None:
            return None
        out.append(t)
    return out


def chain_probability(chain: DecodeChain, params: DoubleNakagamiParams,
                      geom: LinkGeometry, semantics: str) -> float:
    """Probability that the chain succeeds on one link."""
    if semantics not in SEMANTICS:
        raise ValueError(f"semantics must be one of {SEMANTICS}, got {semantics!r}")
    thresholds = _chain_thresholds(chain)
    if thresholds is None:
        return 0.0
    s = effective_scale(params, geom)
    if semantics == "joint":
        return survival_gain_sq(max(thresholds) / s, params)
    p = 1.0
    for t in thresholds:
        p *= survival_gain_sq(t / s, params)
    return p


def _check_alpha(alpha):
    if not (0.0 <= alpha <= 1.0):
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")


def case_chains(case: CacheCase, alpha: float, sc: FullScenario):
    """Decode chains (vehicle 1 on link 1, vehicle 2 on link 2) for one case.

    Vehicle 1's file rides on alpha * P, vehicle 2's on (1 - alpha) * P.
    A receiver that holds the other file cancels it outright; otherwise the
    stronger component is decoded and stripped first (valid on the branch
    where it is the stronger one).
    """
    _check_alpha(alpha)
    p = sc.power
    a = alpha
    high = alpha > 0.5
    s1, s2 = sc.sigma1_sq, sc.sigma2_sq
    g1, g2 = sc.gamma1, sc.gamma2

    own1 = SinrCondition(a * p, 0.0, s1, g1)             # V1 decodes file 1, clean
    own2 = SinrCondition((1.0 - a) * p, 0.0, s2, g2)     # V2 decodes file 2, clean

    if case is CacheCase.A:
        return DecodeChain((own1,)), DecodeChain((own2,))

    if case is CacheCase.B:
        # V1 cancels file 2 from cache; V2 has no copy of file 1.
        if high:
            v2 = DecodeChain((
                SinrCondition(a * p, (1.0 - a) * p, s2, g1),  # strip file 1 first
                own2,
            ))
        else:
            v2 = DecodeChain((SinrCondition((1.0 - a) * p, a * p, s2, g2),))
        return DecodeChain((own1,)), v2

    if case is CacheCase.C:
        # V2 cancels file 1 from cache; V1 has no copy of file 2.
        if high:
            v1 = DecodeChain((SinrCondition(a * p, (1.0 - a) * p, s1, g1),))
        else:
            v1 = DecodeChain((
                SinrCondition((1.0 - a) * p, a * p, s1, g2),  # strip file 2 first
                own1,
            ))
        return v1, DecodeChain((own2,))

    if case is CacheCase.D:
        # Neither vehicle holds the other's file.
        if high:
            v1 = DecodeChain((SinrCondition(a * p, (1.0 - a) * p, s1, g1),))
            v2 = DecodeChain((
                SinrCondition(a * p, (1.0 - a) * p, s2, g1),
                own2,
            ))
        else:
            v1 = DecodeChain((
                SinrCondition((1.0 - a) * p, a * p, s1, g2),
                own1,
            ))
            v2 = DecodeChain((SinrCondition((1.0 - a) * p, a * p, s2, g2),))
        return v1, v2

    raise ValueError(f"case must be one of A, B, C, D, got {case!r}")


def _case_success(case, alpha, sc):
    v1, v2 = case_chains(case, alpha, sc)
    p1 = chain_probability(v1, sc.chan1, sc.geom1, sc.semantics)
    p2 = chain_probability(v2, sc.chan2, sc.geom2, sc.semantics)
    return p1, p2


def success_case_a(alpha, sc: FullScenario):
    """Both vehicles cancel the other file: two clean single-user links."""
    return _case_success(CacheCase.A, alpha, sc)


def success_case_b(alpha, sc: FullScenario):
    return _case_success(CacheCase.B, alpha, sc)


def success_case_c(alpha, sc: FullScenario):
    return _case_success(CacheCase.C, alpha, sc)


def success_case_d(alpha, sc: FullScenario):
    """No cached side information: plain power-domain NOMA with SIC."""
    return _case_success(CacheCase.D, alpha, sc)


def conventional_noma_success(alpha, sc: FullScenario):
    """Cacheless baseline; identical to case D by definition."""
    return success_case_d(alpha, sc)


def oma_success(sc: FullScenario):
    """Orthogonal baseline: half the resource, full power, per vehicle.

    Halving the resource doubles the spectral-efficiency requirement, so the
    rate-equivalent SINR threshold is (1 + gamma)^2 - 1.
    """
    out = []
    for gamma, sigma, chan, geom in (
        (sc.gamma1, sc.sigma1_sq, sc.chan1, sc.geom1),
        (sc.gamma2, sc.sigma2_sq, sc.chan2, sc.geom2),
    ):
        g_eq = (1.0 + gamma) ** 2 - 1.0
        s = effective_scale(chan, geom)
        out.append(survival_gain_sq(g_eq * sigma / sc.power / s, chan))
    return tuple(out)


def case_objective(case: CacheCase, sc: FullScenario):
    """Objective alpha -> p1 * p2 for one of the cases A-D."""
    fn = {
        CacheCase.A: success_case_a,
        CacheCase.B: success_case_b,
        CacheCase.C: success_case_c,
        CacheCase.D: success_case_d,
    }[case]

    def objective(alpha):
        p1, p2 = fn(alpha, sc)
        return p1 * p2

    return objective


def single_user_success(sc: FullScenario, link: int, gamma) -> float:
    """Full-power single-file transmission to one vehicle."""
    if link == 1:
        chan, geom, sigma = sc.chan1, sc.geom1, sc.sigma1_sq
    elif link == 2:
        chan, geom, sigma = sc.chan2, sc.geom2, sc.sigma2_sq
    else:
        raise ValueError(f"link must be 1 or 2, got {link!r}")
    s = effective_scale(chan, geom)
    return survival_gain_sq(gamma * sigma / sc.power / s, chan)


def _degenerate_value(case: CacheCase, sc: FullScenario):
    """Joint success of the tags that need no power-split optimization."""
    if case is CacheCase.SELF_HIT_BOTH:
        # Nothing to transmit; both requests already served.
        return 1.0
    if case is CacheCase.SELF_HIT_1:
        # Only file 2 goes out, at full power.
        return single_user_success(sc, 2, sc.gamma2)
    if case is CacheCase.SELF_HIT_2:
        return single_user_success(sc, 1, sc.gamma1)
    if case is CacheCase.COMMON_REQUEST:
        # One broadcast at full power; each vehicle decodes it on its own
        # link against the first file's threshold.
        return (single_user_success(sc, 1, sc.gamma1)
                * single_user_success(sc, 2, sc.gamma1))
    return None


AVERAGING = ("full", "cases_only")


def average_success(sc: FullScenario, catalog, per_case_optimizer,
                    averaging: str = "full") -> float:
    """Mean joint success over the request-pair distribution.

    ``per_case_optimizer(case, scenario)`` must return an object with a
    ``value`` attribute holding the optimized joint success for that case
    (cases A-D only; the remaining tags are closed-form).

    ``averaging="full"`` weights every tag; ``averaging="cases_only"``
    conditions on the two vehicles requesting different files (the common-
    request mass is dropped and the rest renormalized).
    """
    if averaging not in AVERAGING:
        raise ValueError(f"averaging must be one of {AVERAGING}, got {averaging!r}")
    dist = case_distribution(catalog)
    total = 0.0
    for case, mass in dist.items():
        if mass == 0.0:
            continue
        if averaging == "cases_only" and case is CacheCase.COMMON_REQUEST:
            continue
        value = _degenerate_value(case, sc)
        if value is None:
            value = per_case_optimizer(case, sc).value
        total += mass * value
    if averaging == "cases_only":
        kept = 1.0 - dist[CacheCase.COMMON_REQUEST]
        if kept <= 0.0:
            return 0.0
        total /= kept
    return total


def oma_average_success(sc: FullScenario, catalog, averaging: str = "full") -> float:
    """Orthogonal-access average under the same request/caching model.

    Single-file events (self hits, common requests) carry no multiple-access
    distinction and reuse the same values as the superposition average; the
    A-D tags use the orthogonal per-vehicle successes, which do not depend
    on cached side information.
    """
    if averaging not in AVERAGING:
        raise ValueError(f"averaging must be one of {AVERAGING}, got {averaging!r}")
    dist = case_distribution(catalog)
    p1, p2 = oma_success(sc)
    pair_value = p1 * p2
    total = 0.0
    for case, mass in dist.items():
        if mass == 0.0:
            continue
        if averaging == "cases_only" and case is CacheCase.COMMON_REQUEST:
            continue
        value = _degenerate_value(case, sc)
        if value is None:
            value = pair_value
        total += mass * value
    if averaging == "cases_only":
        kept = 1.0 - dist[CacheCase.COMMON_REQUEST]
        if kept <= 0.0:
            return 0.0
        total /= kept
    return total
