"""Checks for JSON scenario parsing."""

import json
import math

import pytest

from cachenoma.config import ConfigError, load_config, parse_config


def test_defaults():
    cfg = load_config(None)
    sc = cfg.scenario
    assert sc.power == 10.0          # 1.0 * 10**(10 dB / 10), exact
    assert sc.sigma1_sq == 1.0 and sc.sigma2_sq == 1.0
    assert sc.gamma1 == 1.0 and sc.gamma2 == 1.0
    assert sc.semantics == "product"
    assert sc.chan1.m1 == 1.0 and sc.chan1.omega1 == 2.0
    assert sc.geom1.distance == 1.0 and sc.geom2.distance == 0.5
    assert sc.geom1.pathloss_exp == 2.0
    assert cfg.catalog.num_files == 5
    assert cfg.catalog.zeta == 0.5
    assert cfg.catalog.cache_size == 1
    assert cfg.averaging == "full"
    split = cfg.split
    assert (split.gamma11, split.gamma12, split.gamma21, split.gamma22) == \
        (0.25, 0.25, 0.25, 0.25)
    assert split.base == sc


def test_parse_empty_object_matches_defaults():
    assert parse_config({}) == load_config(None)


def test_explicit_power_wins_over_default_snr():
    cfg = parse_config({"power": 25.0})
    assert cfg.scenario.power == 25.0


def test_snr_conversion_uses_first_noise_floor():
    cfg = parse_config({"snr_db": 3.0, "sigma1_sq": 2.0})
    assert math.isclose(cfg.scenario.power, 2.0 * 10.0 ** 0.3, rel_tol=1e-15)


def test_power_and_snr_conflict():
    with pytest.raises(ConfigError):
        parse_config({"power": 10.0, "snr_db": 10.0})


def test_unknown_keys_fail_with_dotted_path():
    with pytest.raises(ConfigError, match="bogus"):
        parse_config({"bogus": 1.0})
    with pytest.raises(ConfigError, match="chan1.m3"):
        parse_config({"chan1": {"m1": 1.0, "m2": 1.0, "omega1": 2.0,
                                "omega2": 2.0, "m3": 1.0}})
    with pytest.raises(ConfigError, match="catalog"):
        parse_config({"catalog": {"files": 5, "zeta": 0.5, "cache_size": 1,
                                  "extra": 0}})


def test_gamma_split_shape_enforced():
    with pytest.raises(ConfigError):
        parse_config({"gamma_split": [0.25, 0.25, 0.25]})
    with pytest.raises(ConfigError):
        parse_config({"gamma_split": 0.25})
    with pytest.raises(ConfigError):
        parse_config({"gamma_split": [0.25, 0.25, "x", 0.25]})
    cfg = parse_config({"gamma_split": [0.1, 0.2, 0.3, 0.4]})
    assert cfg.split.gamma22 == 0.4


def test_booleans_are_not_numbers():
    with pytest.raises(ConfigError):
        parse_config({"gamma1": True})
    with pytest.raises(ConfigError):
        parse_config({"catalog": {"files": 5, "zeta": 0.5, "cache_size": True}})


def test_value_range_checks():
    with pytest.raises(ConfigError):
        parse_config({"power": 0.0})
    with pytest.raises(ConfigError):
        parse_config({"dist1": -1.0})
    with pytest.raises(ConfigError):
        parse_config({"catalog": {"files": 5, "zeta": 0.5, "cache_size": 9}})
    with pytest.raises(ConfigError):
        parse_config({"catalog": {"files": 2.5, "zeta": 0.5, "cache_size": 1}})
    with pytest.raises(ConfigError):
        parse_config({"semantics": "hopeful"})
    with pytest.raises(ConfigError):
        parse_config({"averaging": "never"})


def test_non_object_rejected():
    with pytest.raises(ConfigError):
        parse_config([1, 2, 3])


def test_load_from_file(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps({"snr_db": 15.0, "semantics": "joint",
                                "catalog": {"files": 8, "zeta": 1.2,
                                            "cache_size": 2}}))
    cfg = load_config(str(path))
    assert math.isclose(cfg.scenario.power, 10.0 ** 1.5, rel_tol=1e-15)
    assert cfg.scenario.semantics == "joint"
    assert cfg.split.base.semantics == "joint"
    assert cfg.catalog.num_files == 8
    assert cfg.catalog.cache_size == 2


def test_load_rejects_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ConfigError):
        load_config(str(path))


def test_replace_scenario_rebuilds_split():
    import dataclasses

    cfg = load_config(None)
    bigger = dataclasses.replace(cfg.scenario, power=40.0)
    swapped = cfg.replace_scenario(bigger)
    assert swapped.scenario.power == 40.0
    assert swapped.split.base.power == 40.0
    assert swapped.catalog == cfg.catalog
    assert swapped.split.gamma11 == cfg.split.gamma11
