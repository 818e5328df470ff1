"""JSON scenario files.

A scenario file is a flat JSON object; every key is optional and falls back
to the defaults below.  Unknown keys are rejected with their dotted path so
a typo cannot silently run the default instead.

Keys:

* ``power`` or ``snr_db`` (mutually exclusive): transmit power directly, or
  as an SNR in dB relative to vehicle 1's noise floor
  (power = sigma1_sq * 10**(snr_db / 10)).
* ``sigma1_sq``, ``sigma2_sq``: receiver noise powers.
* ``gamma1``, ``gamma2``: full-file SINR thresholds.
* ``gamma_split``: four thresholds [part 1a, 1b, 2a, 2b] for split-file mode.
* ``chan1``, ``chan2``: objects with ``m1``, ``m2``, ``omega1``, ``omega2``.
* ``dist1``, ``dist2``, ``pathloss_exp``: link geometry.
* ``catalog``: object with ``files``, ``zeta``, ``cache_size``.
* ``semantics``: "product" or "joint".
* ``averaging``: "full" or "cases_only".
"""
import json
import math
from dataclasses import dataclass

from .caching import Catalog
from .channel import DoubleNakagamiParams, LinkGeometry
from .noma_full import AVERAGING, FullScenario
from .noma_split import SplitScenario

__all__ = ["ScenarioConfig", "ConfigError", "load_config", "parse_config", "DEFAULTS"]

DEFAULTS = {
    "snr_db": 10.0,
    "sigma1_sq": 1.0,
    "sigma2_sq": 1.0,
    "gamma1": 1.0,
    "gamma2": 1.0,
    "gamma_split": [0.25, 0.25, 0.25, 0.25],
    "chan1": {"m1": 1.0, "m2": 1.0, "omega1": 2.0, "omega2": 2.0},
    "chan2": {"m1": 1.0, "m2": 1.0, "omega1": 2.0, "omega2": 2.0},
    "dist1": 1.0,
    "dist2": 0.5,
    "pathloss_exp": 2.0,
    "catalog": {"files": 5, "zeta": 0.5, "cache_size": 1},
    "semantics": "product",
    "averaging": "full",
}

_CHAN_KEYS = ("m1", "m2", "omega1", "omega2")
_CATALOG_KEYS = ("files", "zeta", "cache_size")
_TOP_KEYS = frozenset(DEFAULTS) | {"power"}


@dataclass(frozen=True)
class ScenarioConfig:
    """Parsed scenario: everything the CLI commands need to run."""

    scenario: FullScenario
    split: SplitScenario
    catalog: Catalog
    averaging: str

    def replace_scenario(self, scenario: FullScenario) -> "ScenarioConfig":
        split = SplitScenario(
            base=scenario,
            gamma11=self.split.gamma11,
            gamma12=self.split.gamma12,
            gamma21=self.split.gamma21,
            gamma22=self.split.gamma22,
        )
        return ScenarioConfig(scenario=scenario, split=split,
                              catalog=self.catalog, averaging=self.averaging)


class ConfigError(ValueError):
    """Malformed scenario file."""


def _require_number(value, path, positive=False, nonneg=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path}: expected a number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise ConfigError(f"{path}: must be finite, got {value!r}")
    if positive and not v > 0.0:
        raise ConfigError(f"{path}: must be positive, got {value!r}")
    if nonneg and v < 0.0:
        raise ConfigError(f"{path}: must be nonnegative, got {value!r}")
    return v


def _require_int(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{path}: expected an integer, got {value!r}")
    return value


def _check_keys(obj, allowed, path):
    if not isinstance(obj, dict):
        raise ConfigError(f"{path}: expected an object, got {type(obj).__name__}")
    for key in obj:
        if key not in allowed:
            where = f"{path}.{key}" if path else key
            raise ConfigError(f"unknown key {where!r}")


def _parse_channel(obj, path):
    _check_keys(obj, _CHAN_KEYS, path)
    merged = dict(DEFAULTS["chan1"])
    merged.update(obj)
    try:
        return DoubleNakagamiParams(
            m1=_require_number(merged["m1"], f"{path}.m1", positive=True),
            m2=_require_number(merged["m2"], f"{path}.m2", positive=True),
            omega1=_require_number(merged["omega1"], f"{path}.omega1", positive=True),
            omega2=_require_number(merged["omega2"], f"{path}.omega2", positive=True),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def parse_config(data: dict) -> ScenarioConfig:
    """Build a ScenarioConfig from a decoded JSON object."""
    _check_keys(data, _TOP_KEYS, "")
    if "power" in data and "snr_db" in data:
        raise ConfigError("power and snr_db are mutually exclusive")

    def get(key):
        return data.get(key, DEFAULTS[key])

    sigma1 = _require_number(get("sigma1_sq"), "sigma1_sq", positive=True)
    sigma2 = _require_number(get("sigma2_sq"), "sigma2_sq", positive=True)
    if "power" in data:
        power = _require_number(data["power"], "power", positive=True)
    else:
        snr_db = _require_number(get("snr_db"), "snr_db")
        power = sigma1 * 10.0 ** (snr_db / 10.0)

    gamma_split = get("gamma_split")
    if (not isinstance(gamma_split, list)) or len(gamma_split) != 4:
        raise ConfigError(
            f"gamma_split: expected a list of 4 thresholds, got {gamma_split!r}")
    g11, g12, g21, g22 = (
        _require_number(v, f"gamma_split[{i}]", positive=True)
        for i, v in enumerate(gamma_split)
    )

    chan1 = _parse_channel(get("chan1"), "chan1")
    chan2 = _parse_channel(get("chan2"), "chan2")
    pathloss = _require_number(get("pathloss_exp"), "pathloss_exp", nonneg=True)
    try:
        geom1 = LinkGeometry(
            distance=_require_number(get("dist1"), "dist1", positive=True),
            pathloss_exp=pathloss,
        )
        geom2 = LinkGeometry(
            distance=_require_number(get("dist2"), "dist2", positive=True),
            pathloss_exp=pathloss,
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    semantics = get("semantics")
    if semantics not in ("product", "joint"):
        raise ConfigError(
            f"semantics: expected 'product' or 'joint', got {semantics!r}")
    averaging = get("averaging")
    if averaging not in AVERAGING:
        raise ConfigError(
            f"averaging: expected one of {AVERAGING}, got {averaging!r}")

    cat_obj = get("catalog")
    _check_keys(cat_obj, _CATALOG_KEYS, "catalog")
    cat = dict(DEFAULTS["catalog"])
    cat.update(cat_obj)
    try:
        catalog = Catalog(
            num_files=_require_int(cat["files"], "catalog.files"),
            zeta=_require_number(cat["zeta"], "catalog.zeta", nonneg=True),
            cache_size=_require_int(cat["cache_size"], "catalog.cache_size"),
        )

        scenario = FullScenario(
            power=power,
            sigma1_sq=sigma1,
            sigma2_sq=sigma2,
            gamma1=_require_number(get("gamma1"), "gamma1", positive=True),
            gamma2=_require_number(get("gamma2"), "gamma2", positive=True),
            chan1=chan1,
            chan2=chan2,
            geom1=geom1,
            geom2=geom2,
            semantics=semantics,
        )
        split = SplitScenario(base=scenario, gamma11=g11, gamma12=g12,
                              gamma21=g21, gamma22=g22)
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return ScenarioConfig(scenario=scenario, split=split,
                          catalog=catalog, averaging=averaging)


def load_config(path=None) -> ScenarioConfig:
    """Read a scenario file; with no path, return the built-in defaults."""
    if path is None:
        return parse_config({})
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    return parse_config(data)
