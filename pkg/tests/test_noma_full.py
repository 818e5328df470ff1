"""Checks for the full-file transmission cases and baselines."""

import math

import numpy as np
import pytest

from cachenoma.caching import CacheCase, Catalog
from cachenoma.channel import (
    DoubleNakagamiParams,
    LinkGeometry,
    effective_scale,
    survival_gain_sq,
)
from cachenoma.noma_full import (
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
    single_user_success,
    success_case_a,
    success_case_b,
    success_case_c,
    success_case_d,
)
from cachenoma.optimizer import optimize_case


def default_scenario(semantics="product"):
    chan = DoubleNakagamiParams(m1=1.0, m2=1.0, omega1=2.0, omega2=2.0)
    return FullScenario(
        power=10.0,
        sigma1_sq=1.0,
        sigma2_sq=1.0,
        gamma1=1.0,
        gamma2=1.0,
        chan1=chan,
        chan2=chan,
        geom1=LinkGeometry(distance=1.0, pathloss_exp=2.0),
        geom2=LinkGeometry(distance=0.5, pathloss_exp=2.0),
        semantics=semantics,
    )


def test_gain_threshold_examples():
    assert gain_threshold(5.0, 0.0, 1.0, 1.0) == 0.2
    assert gain_threshold(5.0, 5.0, 1.0, 1.0) is None
    assert math.isclose(gain_threshold(5.0, 2.0, 1.0, 1.0), 1.0 / 3.0, rel_tol=1e-15)
    assert gain_threshold(1.0, 3.0, 1.0, 0.5) is None


def test_scenario_validation():
    with pytest.raises(ValueError):
        default_scenario(semantics="bogus")
    chan = DoubleNakagamiParams(m1=1.0, m2=1.0, omega1=2.0, omega2=2.0)
    with pytest.raises(ValueError):
        FullScenario(power=0.0, sigma1_sq=1.0, sigma2_sq=1.0, gamma1=1.0,
                     gamma2=1.0, chan1=chan, chan2=chan,
                     geom1=LinkGeometry(1.0, 2.0), geom2=LinkGeometry(0.5, 2.0))


def test_case_a_is_two_clean_links():
    sc = default_scenario()
    v1, v2 = case_chains(CacheCase.A, 0.6, sc)
    assert len(v1.conditions) == 1 and len(v2.conditions) == 1
    assert v1.conditions[0] == SinrCondition(6.0, 0.0, 1.0, 1.0)
    assert v2.conditions[0] == SinrCondition(4.0, 0.0, 1.0, 1.0)
    p1, p2 = success_case_a(0.6, sc)
    s1 = effective_scale(sc.chan1, sc.geom1)
    s2 = effective_scale(sc.chan2, sc.geom2)
    assert math.isclose(p1, survival_gain_sq(1.0 / 6.0 / s1, sc.chan1), rel_tol=1e-12)
    assert math.isclose(p2, survival_gain_sq(1.0 / 4.0 / s2, sc.chan2), rel_tol=1e-12)


def test_case_b_low_branch_single_condition():
    sc = default_scenario()
    alpha = 0.3
    v1, v2 = case_chains(CacheCase.B, alpha, sc)
    assert len(v1.conditions) == 1          # vehicle 1 cancels the interferer
    assert len(v2.conditions) == 1          # weak component decoded directly
    c = v2.conditions[0]
    assert c.signal_coef == pytest.approx(7.0)
    assert c.interference_coef == pytest.approx(3.0)
    assert c.threshold == sc.gamma2


def test_case_b_high_branch_strips_first():
    sc = default_scenario()
    v1, v2 = case_chains(CacheCase.B, 0.8, sc)
    assert len(v1.conditions) == 1
    assert len(v2.conditions) == 2
    first, second = v2.conditions
    assert first.signal_coef == pytest.approx(8.0)
    assert first.interference_coef == pytest.approx(2.0)
    assert first.threshold == sc.gamma1     # strips the other file at its own rate
    assert second.interference_coef == 0.0


def test_case_c_mirrors_case_b():
    sc = default_scenario()
    b1, b2 = case_chains(CacheCase.B, 0.7, sc)
    c1, c2 = case_chains(CacheCase.C, 0.3, sc)
    # with symmetric thresholds, C at 1 - alpha swaps the vehicles' roles
    assert len(c2.conditions) == len(b1.conditions)
    assert len(c1.conditions) == len(b2.conditions)


def test_case_d_branch_structure():
    sc = default_scenario()
    v1, v2 = case_chains(CacheCase.D, 0.8, sc)
    assert (len(v1.conditions), len(v2.conditions)) == (1, 2)
    v1, v2 = case_chains(CacheCase.D, 0.2, sc)
    assert (len(v1.conditions), len(v2.conditions)) == (2, 1)
    # the boundary point belongs to the weak-component branch
    v1, v2 = case_chains(CacheCase.D, 0.5, sc)
    assert (len(v1.conditions), len(v2.conditions)) == (2, 1)


def test_case_chains_rejects_bad_alpha():
    sc = default_scenario()
    with pytest.raises(ValueError):
        case_chains(CacheCase.A, -0.01, sc)
    with pytest.raises(ValueError):
        case_chains(CacheCase.D, 1.01, sc)
    with pytest.raises(ValueError):
        case_chains(CacheCase.SELF_HIT_1, 0.5, sc)


def test_zero_power_share_kills_success():
    sc = default_scenario()
    p1, _ = success_case_a(0.0, sc)
    _, p2 = success_case_a(1.0, sc)
    assert p1 == 0.0
    assert p2 == 0.0


def test_chain_probability_semantics():
    sc = default_scenario()
    chain = DecodeChain((
        SinrCondition(8.0, 2.0, 1.0, 1.0),
        SinrCondition(2.0, 0.0, 1.0, 1.0),
    ))
    s = effective_scale(sc.chan1, sc.geom1)
    t1 = gain_threshold(8.0, 2.0, 1.0, 1.0)
    t2 = gain_threshold(2.0, 0.0, 1.0, 1.0)
    product = chain_probability(chain, sc.chan1, sc.geom1, "product")
    joint = chain_probability(chain, sc.chan1, sc.geom1, "joint")
    want_product = (survival_gain_sq(t1 / s, sc.chan1)
                    * survival_gain_sq(t2 / s, sc.chan1))
    want_joint = survival_gain_sq(max(t1, t2) / s, sc.chan1)
    assert math.isclose(product, want_product, rel_tol=1e-12)
    assert math.isclose(joint, want_joint, rel_tol=1e-12)
    with pytest.raises(ValueError):
        chain_probability(chain, sc.chan1, sc.geom1, "neither")


def test_joint_never_below_product():
    sc = default_scenario()
    rng = np.random.default_rng(314)
    for _ in range(1000):
        n = int(rng.integers(1, 4))
        conds = []
        for _ in range(n):
            sig = float(rng.uniform(0.5, 10.0))
            inter = float(rng.uniform(0.0, 0.4)) * sig
            conds.append(SinrCondition(sig, inter, 1.0, float(rng.uniform(0.2, 2.0))))
        chain = DecodeChain(tuple(conds))
        joint = chain_probability(chain, sc.chan1, sc.geom1, "joint")
        product = chain_probability(chain, sc.chan1, sc.geom1, "product")
        assert joint >= product - 1e-12


def test_infeasible_chain_probability_is_zero():
    sc = default_scenario()
    chain = DecodeChain((SinrCondition(1.0, 3.0, 1.0, 1.0),))
    assert chain_probability(chain, sc.chan1, sc.geom1, "product") == 0.0
    assert chain_probability(chain, sc.chan1, sc.geom1, "joint") == 0.0


def test_conventional_equals_case_d():
    sc = default_scenario()
    for alpha in (0.2, 0.5, 0.8):
        assert conventional_noma_success(alpha, sc) == success_case_d(alpha, sc)


def test_oma_threshold_mapping():
    sc = default_scenario()
    p1, p2 = oma_success(sc)
    s1 = effective_scale(sc.chan1, sc.geom1)
    s2 = effective_scale(sc.chan2, sc.geom2)
    # gamma = 1 doubles to an equivalent threshold of 3
    assert math.isclose(p1, survival_gain_sq(3.0 / 10.0 / s1, sc.chan1), rel_tol=1e-12)
    assert math.isclose(p2, survival_gain_sq(3.0 / 10.0 / s2, sc.chan2), rel_tol=1e-12)


def test_single_user_success_values():
    sc = default_scenario()
    s1 = effective_scale(sc.chan1, sc.geom1)
    got = single_user_success(sc, 1, 2.0)
    assert math.isclose(got, survival_gain_sq(2.0 / 10.0 / s1, sc.chan1), rel_tol=1e-12)
    with pytest.raises(ValueError):
        single_user_success(sc, 3, 1.0)


def test_case_objective_matches_success_product():
    sc = default_scenario()
    f = case_objective(CacheCase.D, sc)
    for alpha in (0.15, 0.5, 0.72, 0.9):
        p1, p2 = success_case_d(alpha, sc)
        assert math.isclose(f(alpha), p1 * p2, rel_tol=1e-12)


def test_case_ordering_with_more_side_information():
    # cancelling interference can only help, so A >= B, C >= D pointwise
    sc = default_scenario()
    for alpha in (0.2, 0.35, 0.5, 0.65, 0.8):
        pa = math.prod(success_case_a(alpha, sc))
        pb = math.prod(success_case_b(alpha, sc))
        pc = math.prod(success_case_c(alpha, sc))
        pd = math.prod(success_case_d(alpha, sc))
        assert pa >= pb - 1e-12
        assert pa >= pc - 1e-12
        assert pb >= pd - 1e-12
        assert pc >= pd - 1e-12


def test_average_success_full_cache():
    # with everything cached only self hits and common requests remain
    sc = default_scenario()
    cat = Catalog(num_files=5, zeta=0.5, cache_size=5)
    from cachenoma.caching import case_distribution

    dist = case_distribution(cat)
    common = (single_user_success(sc, 1, sc.gamma1)
              * single_user_success(sc, 2, sc.gamma1))
    expected = (dist[CacheCase.SELF_HIT_BOTH] * 1.0
                + dist[CacheCase.COMMON_REQUEST] * common)

    def never_called(case, scenario):
        raise AssertionError("no split cases should remain")

    got = average_success(sc, cat, never_called)
    assert math.isclose(got, expected, rel_tol=1e-12)


def test_average_success_cases_only_renormalizes():
    sc = default_scenario()
    cat = Catalog(num_files=5, zeta=0.5, cache_size=1)

    def opt(case, scenario):
        return optimize_case(case, scenario)

    full = average_success(sc, cat, opt, averaging="full")
    conditioned = average_success(sc, cat, opt, averaging="cases_only")
    assert 0.0 < full < 1.0
    assert 0.0 < conditioned < 1.0
    assert not math.isclose(full, conditioned, rel_tol=1e-6)
    with pytest.raises(ValueError):
        average_success(sc, cat, opt, averaging="sometimes")


def test_oma_average_uses_same_degenerate_values():
    sc = default_scenario()
    cat = Catalog(num_files=5, zeta=0.5, cache_size=5)
    # no A-D mass left, so the two averages coincide
    def opt(case, scenario):
        return optimize_case(case, scenario)

    assert math.isclose(oma_average_success(sc, cat),
                        average_success(sc, cat, opt), rel_tol=1e-12)
